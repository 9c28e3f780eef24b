#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "radbound/potential.hpp"

namespace radbound {

/// One integral functional of the attractive part of V; `finite` is false
/// when the integral diverges, with the reason in `note`.
struct Functional {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool finite = false;
    bool analytic = false;
    std::string note;
};

/// Dimensionless functionals of V- = max(0, -V):
///   I = -1 + int r V- dr,  J = int r^3 [V-]^2 dr,  B = int sqrt(v-(x)) dx,
///   K = int [V-]^2 dr (in units of length^-3).
struct IntegralFunctionals {
    Functional I;
    Functional J;
    Functional B;
    Functional K;
};

struct FunctionalOptions {
    bool use_analytic = true;
};

namespace detail {

// Integral of f over (0, inf) split at the given interior points.
inline double half_line_integral(const std::function<double(double)>& f, std::vector<double> cuts)
{
    auto guarded = [&f](double x) {
        const double y = f(x);
        return std::isfinite(y) ? y : 0.0;
    };
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [](double c) { return !(c > 0.0); }),
               cuts.end());
    if (cuts.empty()) cuts.push_back(1.0);

    boost::math::quadrature::tanh_sinh<double> finite_rule;
    boost::math::quadrature::exp_sinh<double> tail_rule;
    double total = 0.0;
    double a = 0.0;
    for (double c : cuts) {
        total += finite_rule.integrate(guarded, a, c, 1e-12);
        a = c;
    }
    total += tail_rule.integrate(guarded, a, std::numeric_limits<double>::infinity(), 1e-12);
    return total;
}

inline Functional finite_value(double v, bool analytic)
{
    Functional f;
    f.value = v;
    f.finite = true;
    f.analytic = analytic;
    return f;
}

inline Functional divergent(std::string why)
{
    Functional f;
    f.note = std::move(why);
    return f;
}

// Closed forms for the shape integrals (g = 1, L = 1) where they exist.
struct ShapeIntegrals {
    std::optional<double> x_v;     // int x v+ dx
    std::optional<double> x3_v2;   // int x^3 (v+)^2 dx
    std::optional<double> sqrt_v;  // int sqrt(v+) dx
    std::optional<double> v2;      // int (v+)^2 dx
};

inline ShapeIntegrals closed_forms(const Shape& shape)
{
    ShapeIntegrals s;
    if (const auto* rn = std::get_if<RationalN>(&shape)) {
        // int x^{s-1} (1+x^n)^{-k} dx = B(s/n, k - s/n) / n
        const double n = rn->n;
        auto mellin = [n](double sexp, double k) {
            const double a = sexp / n;
            return std::tgamma(a) * std::tgamma(k - a) / (n * std::tgamma(k));
        };
        s.x_v = mellin(2.0, 1.0);
        s.x3_v2 = mellin(4.0, 2.0);
        s.sqrt_v = mellin(1.0, 0.5);
        s.v2 = mellin(1.0, 2.0);
    } else if (std::holds_alternative<Yukawa>(shape)) {
        s.x_v = 1.0;
        s.x3_v2 = 0.25;
        s.sqrt_v = std::sqrt(2.0 * std::numbers::pi);
    } else if (std::holds_alternative<SquareWell>(shape)) {
        s.x_v = 0.5;
        s.x3_v2 = 0.25;
        s.sqrt_v = 1.0;
        s.v2 = 1.0;
    } else if (const auto* lj = std::get_if<LjPair>(&shape); lj && lj->is_paired_form()) {
        s.sqrt_v = std::numbers::pi / (2.0 * (lj->p_att - 2.0));
    } else if (const auto* en = std::get_if<ExpN>(&shape)) {
        s.sqrt_v = std::tgamma(1.0 + 1.0 / en->n) * std::pow(2.0, 1.0 / en->n);
    } else if (const auto* m4 = std::get_if<MixedRep4>(&shape)) {
        const double q = 1.0 / (m4->n - 4.0);
        s.sqrt_v = q * std::tgamma(q) * std::tgamma(1.5) / std::tgamma(q + 1.5);
    }
    return s;
}

}  // namespace detail

inline IntegralFunctionals integral_functionals(const Potential& pot,
                                                const FunctionalOptions& opt = {})
{
    const ShapeTraits t = pot.traits();
    const double g = pot.strength();
    const double L = pot.length_scale();
    const double s = t.attractive_origin_power;
    const double tail = t.attractive_tail_power;
    const detail::ShapeIntegrals cf =
        opt.use_analytic ? detail::closed_forms(pot.shape()) : detail::ShapeIntegrals{};

    auto vplus = [&pot](double x) { return std::max(0.0, pot.shape_value(x)); };
    std::vector<double> cuts = t.breakpoints;

    auto shape_integral = [&](const std::optional<double>& closed, auto integrand) {
        if (closed) return std::pair{*closed, true};
        return std::pair{detail::half_line_integral(integrand, cuts), false};
    };

    IntegralFunctionals out;
    if (!(s < 2.0)) {
        out.I = detail::divergent("int r V- dr diverges at the origin");
    } else if (!(tail > 2.0)) {
        out.I = detail::divergent("int r V- dr diverges at infinity (tail not faster than r^-2)");
    } else {
        auto [v, a] = shape_integral(cf.x_v, [&](double x) { return x * vplus(x); });
        out.I = detail::finite_value(-1.0 + g * v, a);
    }

    if (!(s < 2.0)) {
        out.J = detail::divergent("int r^3 [V-]^2 dr diverges at the origin");
    } else if (!(tail > 2.0)) {
        out.J = detail::divergent("int r^3 [V-]^2 dr diverges at infinity");
    } else {
        auto [v, a] = shape_integral(cf.x3_v2, [&](double x) {
            const double p = vplus(x);
            return x * x * x * p * p;
        });
        out.J = detail::finite_value(g * g * v, a);
    }

    if (!(s < 2.0)) {
        out.B = detail::divergent("int sqrt(v-) dx diverges at the origin");
    } else if (!(tail > 2.0)) {
        out.B = detail::divergent("int sqrt(v-) dx diverges at infinity");
    } else {
        auto [v, a] = shape_integral(cf.sqrt_v, [&](double x) { return std::sqrt(vplus(x)); });
        out.B = detail::finite_value(v, a);
    }

    if (!(s < 0.5)) {
        out.K = detail::divergent("int [V-]^2 dr diverges at the origin");
    } else if (!(tail > 0.5)) {
        out.K = detail::divergent("int [V-]^2 dr diverges at infinity");
    } else {
        auto [v, a] = shape_integral(cf.v2, [&](double x) {
            const double p = vplus(x);
            return p * p;
        });
        out.K = detail::finite_value(g * g * v / (L * L * L), a);
    }
    return out;
}

}  // namespace radbound
