#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "radbound/errors.hpp"
#include "radbound/units.hpp"

namespace radbound {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A stationary point of a shape functional, in units where g = 1 and the
/// length scale is 1. `location` may be 0 or +inf for suprema approached at
/// the ends of (0, inf).
struct Extremum {
    double value = 0.0;
    double location = 0.0;
};

/// Asymptotic and regularity data that decides which integrals and bounds
/// exist. Powers refer to the positive part of the shape v(x), i.e. the
/// attractive part of V.
struct ShapeTraits {
    double attractive_origin_power = 0.0;  // v+ ~ x^{-s} as x -> 0
    double attractive_tail_power = kInf;   // v+ ~ x^{-t} as x -> inf (inf: exponential/compact)
    double repulsive_origin_power = 0.0;   // v ~ -x^{-p} as x -> 0
    bool confining = false;                // V -> +inf as r -> inf
    bool finite_range = false;             // V = 0 beyond a radius
    std::vector<double> discontinuities;   // jumps of V, in units of the length scale
    std::vector<double> breakpoints;       // sign changes or kinks of v, same units
};

// Each shape describes V(r) = -g L^-2 v(r/L).

/// V = sgn(p) g r^p; the length scale is fixed to one length unit.
struct PowerLaw {
    double p = 2.0;

    double v(double x) const { return -std::copysign(std::pow(x, p), p); }
    double dv(double x) const { return -std::copysign(p * std::pow(x, p - 1.0), p); }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        if (p > 0.0) {
            t.confining = true;
        } else {
            t.attractive_origin_power = -p;
            t.attractive_tail_power = -p;
        }
        return t;
    }

    std::optional<Extremum> sup_x2v() const
    {
        if (p > 0.0) return Extremum{0.0, 0.0};
        if (p == -2.0) return Extremum{1.0, kInf};
        return std::nullopt;
    }
    std::optional<Extremum> sup_w() const
    {
        if (p > 0.0) return Extremum{0.0, 0.0};
        if (p == -2.0) return Extremum{4.0, kInf};
        return std::nullopt;
    }
    std::optional<Extremum> inf_w() const
    {
        if (p == -2.0) return Extremum{4.0, kInf};
        return std::nullopt;
    }
};

/// Lennard-Jones-like pair: v = x^{-p_att} - x^{-p_rep}, p_rep > p_att.
struct LjPair {
    double p_rep = 10.0;
    double p_att = 6.0;

    double v(double x) const { return std::pow(x, -p_att) - std::pow(x, -p_rep); }
    double dv(double x) const
    {
        return -p_att * std::pow(x, -p_att - 1.0) + p_rep * std::pow(x, -p_rep - 1.0);
    }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.attractive_tail_power = p_att;
        t.repulsive_origin_power = p_rep;
        t.breakpoints = {1.0};
        return t;
    }

    /// True for the (2(n-1), n) member family.
    bool is_paired_form() const { return std::abs(p_rep - 2.0 * (p_att - 1.0)) < 1e-12; }

    std::optional<Extremum> sup_x2v() const
    {
        if (p_att <= 2.0) return std::nullopt;
        // d/dx [x^{2-pa} - x^{2-pr}] = 0  ->  x^{pr-pa} = (pr-2)/(pa-2)
        const double x = std::pow((p_rep - 2.0) / (p_att - 2.0), 1.0 / (p_rep - p_att));
        return Extremum{x * x * v(x), x};
    }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = 1 / (1 + x^n), n >= 3.
struct RationalN {
    double n = 3.0;

    double v(double x) const { return 1.0 / (1.0 + std::pow(x, n)); }
    double dv(double x) const
    {
        const double xn = std::pow(x, n);
        return -n * xn / (x * (1.0 + xn) * (1.0 + xn));
    }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.attractive_tail_power = n;
        return t;
    }

    std::optional<Extremum> sup_x2v() const
    {
        const double x = std::pow(2.0 / (n - 2.0), 1.0 / n);
        return Extremum{x * x * v(x), x};
    }
    std::optional<Extremum> sup_w() const
    {
        // W/g = 3 x^2 (2 + x^3) / (1 + x^3)^2 peaks at x = 1 for n = 3.
        if (n == 3.0) return Extremum{2.25, 1.0};
        return std::nullopt;
    }
    std::optional<Extremum> inf_w() const
    {
        // W(0) = 0 and W -> 0 from above at infinity when n <= 6.
        if (n <= 6.0) return Extremum{0.0, 0.0};
        return std::nullopt;
    }
};

/// v = x^{-4} - x^{-n}, n >= 5.
struct MixedRep4 {
    double n = 6.0;

    double v(double x) const { return std::pow(x, -4.0) - std::pow(x, -n); }
    double dv(double x) const { return -4.0 * std::pow(x, -5.0) + n * std::pow(x, -n - 1.0); }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.attractive_tail_power = 4.0;
        t.repulsive_origin_power = n;
        t.breakpoints = {1.0};
        return t;
    }

    std::optional<Extremum> sup_x2v() const
    {
        const double x = std::pow((n - 2.0) / 2.0, 1.0 / (n - 4.0));
        return Extremum{x * x * v(x), x};
    }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = exp(-x^n).
struct ExpN {
    double n = 1.0;

    double v(double x) const { return std::exp(-std::pow(x, n)); }
    double dv(double x) const { return -n * std::pow(x, n - 1.0) * std::exp(-std::pow(x, n)); }

    ShapeTraits traits() const { return {}; }

    std::optional<Extremum> sup_x2v() const
    {
        const double x = std::pow(2.0 / n, 1.0 / n);
        return Extremum{x * x * v(x), x};
    }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = 1 / (1 + exp(x - alpha)) with the diffuseness as length scale and
/// alpha = R/a.
struct WoodSaxon {
    double alpha = 1.9;

    double v(double x) const
    {
        const double t = x - alpha;
        if (t > 0.0) {
            const double e = std::exp(-t);
            return e / (1.0 + e);
        }
        return 1.0 / (1.0 + std::exp(t));
    }
    double dv(double x) const
    {
        const double e = std::exp(-std::abs(x - alpha));
        return -e / ((1.0 + e) * (1.0 + e));
    }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.breakpoints = {alpha};
        return t;
    }

    std::optional<Extremum> sup_x2v() const { return std::nullopt; }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = 1 for x < 1, else 0.
struct SquareWell {
    double v(double x) const { return x < 1.0 ? 1.0 : 0.0; }
    double dv(double) const { return 0.0; }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.finite_range = true;
        t.discontinuities = {1.0};
        t.breakpoints = {1.0};
        return t;
    }

    std::optional<Extremum> sup_x2v() const { return Extremum{1.0, 1.0}; }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = exp(-x) for x < 1, else 0.
struct TruncatedExp {
    double v(double x) const { return x < 1.0 ? std::exp(-x) : 0.0; }
    double dv(double x) const { return x < 1.0 ? -std::exp(-x) : 0.0; }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.finite_range = true;
        t.discontinuities = {1.0};
        t.breakpoints = {1.0};
        return t;
    }

    // x^2 e^{-x} increases on (0, 1): supremum at the edge, over the closure.
    std::optional<Extremum> sup_x2v() const { return Extremum{std::exp(-1.0), 1.0}; }
    std::optional<Extremum> sup_w() const { return std::nullopt; }
    std::optional<Extremum> inf_w() const { return std::nullopt; }
};

/// v = exp(-x) / x.
struct Yukawa {
    double v(double x) const { return std::exp(-x) / x; }
    double dv(double x) const { return -std::exp(-x) * (1.0 + x) / (x * x); }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.attractive_origin_power = 1.0;
        return t;
    }

    // x^2 v = x e^{-x}; W/g = x (5 - x) e^{-x} with stationary points
    // x = (7 -+ sqrt(29)) / 2.
    std::optional<Extremum> sup_x2v() const { return Extremum{std::exp(-1.0), 1.0}; }
    std::optional<Extremum> sup_w() const
    {
        const double x = (7.0 - std::sqrt(29.0)) / 2.0;
        return Extremum{x * (5.0 - x) * std::exp(-x), x};
    }
    std::optional<Extremum> inf_w() const
    {
        const double x = (7.0 + std::sqrt(29.0)) / 2.0;
        return Extremum{x * (5.0 - x) * std::exp(-x), x};
    }
};

/// V = a (R/r)^6 - b (R/r)^2, the potential with constant W = 4 b R^2.
/// In shape form v = x^{-2} - c x^{-6} with c = a/b and g = b R^2.
struct WConstant {
    double core_ratio = 1.0;

    double v(double x) const { return std::pow(x, -2.0) - core_ratio * std::pow(x, -6.0); }
    double dv(double x) const
    {
        return -2.0 * std::pow(x, -3.0) + 6.0 * core_ratio * std::pow(x, -7.0);
    }

    ShapeTraits traits() const
    {
        ShapeTraits t;
        t.attractive_tail_power = 2.0;
        t.repulsive_origin_power = 6.0;
        t.breakpoints = {std::pow(core_ratio, 0.25)};
        return t;
    }

    std::optional<Extremum> sup_x2v() const { return Extremum{1.0, kInf}; }
    std::optional<Extremum> sup_w() const { return Extremum{4.0, 1.0}; }
    std::optional<Extremum> inf_w() const { return Extremum{4.0, 1.0}; }
};

using Shape = std::variant<PowerLaw, LjPair, RationalN, MixedRep4, ExpN, WoodSaxon, SquareWell,
                           TruncatedExp, Yukawa, WConstant>;

/// A central potential V(r) = -kinetic_scale * g L^-2 v(r/L). All family
/// parameters are validated at construction; instances are immutable.
class Potential {
public:
    Potential(Shape shape, double strength, double length, UnitContext units = {})
        : shape_(std::move(shape)), strength_(strength), length_(length), units_(std::move(units))
    {
        if (!(strength_ > 0.0) || !std::isfinite(strength_)) {
            throw DomainError("potential strength must be positive and finite");
        }
        if (!(length_ > 0.0) || !std::isfinite(length_)) {
            throw DomainError("potential length scale must be positive and finite");
        }
        if (!(units_.kinetic_scale > 0.0)) {
            throw DomainError("kinetic scale must be positive");
        }
    }

    const Shape& shape() const noexcept { return shape_; }
    double strength() const noexcept { return strength_; }
    double length_scale() const noexcept { return length_; }
    const UnitContext& units() const noexcept { return units_; }
    double kinetic_scale() const noexcept { return units_.kinetic_scale; }

    template <class S>
    bool is() const noexcept
    {
        return std::holds_alternative<S>(shape_);
    }
    template <class S>
    const S& as() const
    {
        return std::get<S>(shape_);
    }

    std::string family() const
    {
        return std::visit([](const auto& s) { return family_name(s); }, shape_);
    }

    ShapeTraits traits() const
    {
        return std::visit([](const auto& s) { return s.traits(); }, shape_);
    }

    /// Length that sets the spatial extent of low states; equals L except for
    /// power laws, where it is g^{-1/(p+2)}.
    double natural_length() const
    {
        if (const auto* pl = std::get_if<PowerLaw>(&shape_)) {
            return std::pow(strength_, -1.0 / (pl->p + 2.0));
        }
        return length_;
    }

    double shape_value(double x) const
    {
        return std::visit([x](const auto& s) { return s.v(x); }, shape_);
    }
    double shape_derivative(double x) const
    {
        return std::visit([x](const auto& s) { return s.dv(x); }, shape_);
    }

    /// V / kinetic_scale, in inverse length squared.
    double reduced(double r) const
    {
        return -strength_ / (length_ * length_) * shape_value(r / length_);
    }
    double reduced_derivative(double r) const
    {
        return -strength_ / (length_ * length_ * length_) * shape_derivative(r / length_);
    }

    /// V(r) in the potential's energy unit.
    double eval(double r) const
    {
        require_positive(r);
        return units_.kinetic_scale * reduced(r);
    }

    /// Analytic V'(r); undefined at jump discontinuities.
    double derivative(double r) const
    {
        require_positive(r);
        require_smooth(r);
        return units_.kinetic_scale * reduced_derivative(r);
    }

    /// W(r) = -(6 V + r V') r^2, in energy * length^2.
    double w(double r) const
    {
        require_positive(r);
        require_smooth(r);
        return -(6.0 * eval(r) + r * derivative(r)) * r * r;
    }

    Potential with_strength(double g) const { return Potential(shape_, g, length_, units_); }
    Potential with_length(double length) const
    {
        return Potential(shape_, strength_, length, units_);
    }

    std::string describe() const
    {
        std::ostringstream os;
        os << family() << "(g=" << strength_ << ", L=" << length_ << ")";
        return os.str();
    }

private:
    static std::string family_name(const PowerLaw&) { return "power-law"; }
    static std::string family_name(const LjPair&) { return "lj-pair"; }
    static std::string family_name(const RationalN&) { return "rational"; }
    static std::string family_name(const MixedRep4&) { return "mixed-rep4"; }
    static std::string family_name(const ExpN&) { return "exp"; }
    static std::string family_name(const WoodSaxon&) { return "wood-saxon"; }
    static std::string family_name(const SquareWell&) { return "square-well"; }
    static std::string family_name(const TruncatedExp&) { return "truncated-exp"; }
    static std::string family_name(const Yukawa&) { return "yukawa"; }
    static std::string family_name(const WConstant&) { return "w-constant"; }

    static void require_positive(double r)
    {
        if (!(r > 0.0)) {
            std::ostringstream os;
            os << "radius must be positive, got " << r;
            throw DomainError(os.str());
        }
    }

    void require_smooth(double r) const
    {
        const double x = r / length_;
        for (double d : traits().discontinuities) {
            if (std::abs(x - d) <= 1e-12 * d) {
                std::ostringstream os;
                os << "derivative undefined at the discontinuity r = " << d * length_;
                throw DomainError(os.str());
            }
        }
    }

    Shape shape_;
    double strength_;
    double length_;
    UnitContext units_;
};

// ---------------------------------------------------------------------------
// Family constructors. Strengths `g` are dimensionless (V = -g R^-2 v in units
// of the kinetic scale); depths `V0` and couplings `a`, `b` are energies.

inline Potential power_law(double p, double g, UnitContext units = {})
{
    if (p == 0.0 || !(p > -2.0)) {
        throw DomainError("power_law requires p > -2 and p != 0");
    }
    return Potential(PowerLaw{p}, g, 1.0, std::move(units));
}

inline Potential lj_pair(double p_rep, double p_att, double g, double R, UnitContext units = {})
{
    if (!(p_att > 0.0) || !(p_rep > p_att)) {
        throw DomainError("lj_pair requires p_rep > p_att > 0");
    }
    return Potential(LjPair{p_rep, p_att}, g, R, std::move(units));
}

/// V = g R^-2 [(R/r)^{2(n-1)} - (R/r)^n].
inline Potential lj_paired(double n, double g, double R, UnitContext units = {})
{
    if (!(n > 2.0)) {
        throw DomainError("paired Lennard-Jones form requires n > 2");
    }
    return lj_pair(2.0 * (n - 1.0), n, g, R, std::move(units));
}

inline Potential rational_n(double n, double g, double R, UnitContext units = {})
{
    if (!(n >= 3.0)) {
        throw DomainError("rational_n requires n >= 3");
    }
    return Potential(RationalN{n}, g, R, std::move(units));
}

inline Potential rational_cubed(double g, double R, UnitContext units = {})
{
    return rational_n(3.0, g, R, std::move(units));
}

inline Potential mixed_rep4(double n, double g, double R, UnitContext units = {})
{
    if (!(n >= 5.0)) {
        throw DomainError("mixed_rep4 requires n >= 5");
    }
    return Potential(MixedRep4{n}, g, R, std::move(units));
}

inline Potential exp_n(double n, double g, double R, UnitContext units = {})
{
    if (!(n > 0.0)) {
        throw DomainError("exp_n requires n > 0");
    }
    return Potential(ExpN{n}, g, R, std::move(units));
}

inline Potential wood_saxon(double V0, double R, double a, UnitContext units = {})
{
    if (!(V0 > 0.0) || !(R > 0.0) || !(a > 0.0)) {
        throw DomainError("wood_saxon requires V0, R, a > 0");
    }
    const double g = V0 * a * a / units.kinetic_scale;
    return Potential(WoodSaxon{R / a}, g, a, std::move(units));
}

inline Potential square_well(double V0, double R, UnitContext units = {})
{
    if (!(V0 > 0.0) || !(R > 0.0)) {
        throw DomainError("square_well requires V0, R > 0");
    }
    const double g = V0 * R * R / units.kinetic_scale;
    return Potential(SquareWell{}, g, R, std::move(units));
}

inline Potential truncated_exp(double V0, double R, UnitContext units = {})
{
    if (!(V0 > 0.0) || !(R > 0.0)) {
        throw DomainError("truncated_exp requires V0, R > 0");
    }
    const double g = V0 * R * R / units.kinetic_scale;
    return Potential(TruncatedExp{}, g, R, std::move(units));
}

/// V = -g R^-1 exp(-r/R) / r.
inline Potential yukawa(double g, double R, UnitContext units = {})
{
    return Potential(Yukawa{}, g, R, std::move(units));
}

inline Potential w_constant(double a, double b, double R, UnitContext units = {})
{
    if (!(a > 0.0) || !(b > 0.0) || !(R > 0.0)) {
        throw DomainError("w_constant requires a, b, R > 0");
    }
    const double g = b * R * R / units.kinetic_scale;
    return Potential(WConstant{a / b}, g, R, std::move(units));
}

/// Nucleon-core Wood-Saxon well for mass number A with depth V0 in MeV.
inline Potential nuclear_wood_saxon(double mass_number, double V0)
{
    const double R = constants::ws_radius_parameter_fm * std::cbrt(mass_number);
    return wood_saxon(V0, R, constants::ws_diffuseness_fm, nuclear_units(mass_number));
}

// ---------------------------------------------------------------------------

/// Largest root r0 of V(r0) = E, the outer classical turning point at
/// energy E. For a jump discontinuity straddling E the jump radius is
/// returned.
inline double classical_radius(const Potential& pot, double energy)
{
    if (!(energy < 0.0)) {
        throw DomainError("classical radius requires a negative energy");
    }
    const double eps = energy / pot.kinetic_scale();
    const double L = pot.natural_length();
    auto f = [&](double r) { return pot.reduced(r) - eps; };

    // Outward log scan; continue past the grid while the region is still allowed.
    constexpr int kPoints = 4000;
    const double lo = std::log(1e-6 * L);
    const double hi = std::log(1e6 * L);
    double last_allowed = -1.0;
    for (int i = 0; i <= kPoints; ++i) {
        const double r = std::exp(lo + (hi - lo) * i / kPoints);
        if (f(r) < 0.0) last_allowed = r;
    }
    if (last_allowed < 0.0) {
        throw NoRootError("energy lies below the ground of the potential");
    }
    double a = last_allowed;
    double b = a * std::exp((hi - lo) / kPoints);
    while (f(b) < 0.0) {
        a = b;
        b *= 2.0;
        if (b > 1e30 * L) throw NoRootError("no outer turning point found");
    }
    for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
        const double m = 0.5 * (a + b);
        (f(m) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

}  // namespace radbound
