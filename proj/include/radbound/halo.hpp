#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "radbound/coupling.hpp"
#include "radbound/errors.hpp"
#include "radbound/potential.hpp"
#include "radbound/spectrum.hpp"
#include "radbound/units.hpp"

namespace radbound {

inline constexpr double kDefaultSigma = 2.0;

/// How x0 is obtained from x0^2 v(x0) = gamma.
enum class HaloMethod {
    automatic,         // closed form for the family if one exists, else generic
    generic_numeric,   // largest root by scan and bisection
    paired_root,       // quadratic in x^{n-2} for the paired Lennard-Jones form
    rational_leading,  // x0^{n-2} = 1/gamma for 1/(1+x^n)
    mixed_leading,     // x0^2 = 1/gamma for x^-4 - x^-n
    wood_saxon_lagrange,
    exp_leading,  // x0^n = ln(1/gamma) for exp(-x^n)
};

inline std::string to_string(HaloMethod m)
{
    switch (m) {
    case HaloMethod::automatic: return "automatic";
    case HaloMethod::generic_numeric: return "generic-numeric";
    case HaloMethod::paired_root: return "paired-root";
    case HaloMethod::rational_leading: return "rational-leading";
    case HaloMethod::mixed_leading: return "mixed-leading";
    case HaloMethod::wood_saxon_lagrange: return "wood-saxon-lagrange";
    case HaloMethod::exp_leading: return "exp-leading";
    }
    return "unknown";
}

inline HaloMethod halo_method_from_string(const std::string& s)
{
    for (HaloMethod m : {HaloMethod::automatic, HaloMethod::generic_numeric, HaloMethod::paired_root,
                         HaloMethod::rational_leading, HaloMethod::mixed_leading,
                         HaloMethod::wood_saxon_lagrange, HaloMethod::exp_leading}) {
        if (to_string(m) == s) return m;
    }
    throw DomainError("unknown halo method '" + s + "'");
}

enum class CouplingSource { automatic, bargmann, numeric, wkb };

struct HaloOptions {
    double sigma = kDefaultSigma;
    CouplingSource coupling = CouplingSource::automatic;  // WKB for Wood-Saxon, else bargmann
    HaloMethod method = HaloMethod::automatic;
};

/// Criterion output for state index N: the strength used, x0 = r0/L at
/// threshold and the threshold energy E_H.
struct HaloThreshold {
    double sigma = kDefaultSigma;
    CriticalCoupling gc;
    double x0 = 0.0;
    double E_H = 0.0;
    HaloMethod method = HaloMethod::generic_numeric;
};

struct HaloAssessment {
    double sigma = kDefaultSigma;
    CriticalCoupling gc;
    double x0 = 0.0;
    double E_H = 0.0;
    double energy = 0.0;
    double r0 = 0.0;
    double ratio = 0.0;  // <r^2>^{1/2} / r0 at `energy`
    bool is_halo = false;
    HaloMethod method = HaloMethod::generic_numeric;
};

namespace detail {

inline void require_sigma(double sigma)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
}

// Largest x with x^2 v(x) = gamma, over the closure for jump discontinuities.
inline double largest_root(const Potential& pot, double gamma)
{
    auto f = [&](double x) { return x * x * pot.shape_value(x) - gamma; };
    constexpr int kPoints = 6000;
    const double lo = std::log(1e-6);
    const double hi = std::log(1e12);
    double above = -1.0;
    double below = 0.0;
    for (int i = kPoints; i >= 0; --i) {
        const double x = std::exp(lo + (hi - lo) * i / kPoints);
        if (f(x) >= 0.0) {
            above = x;
            below = std::exp(lo + (hi - lo) * (i + 1) / kPoints);
            break;
        }
    }
    if (above < 0.0) throw NoRootError("no halo threshold: x^2 v(x) never reaches gamma");
    if (f(below) >= 0.0) throw NoRootError("no halo threshold: x^2 v(x) exceeds gamma at large x");
    double a = above;
    double b = below;
    for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
        const double m = 0.5 * (a + b);
        (f(m) >= 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

inline HaloMethod resolve_method(const Potential& pot, HaloMethod m)
{
    if (m != HaloMethod::automatic) return m;
    if (const auto* lj = std::get_if<LjPair>(&pot.shape()); lj && lj->is_paired_form()) {
        return HaloMethod::paired_root;
    }
    if (pot.is<RationalN>()) return HaloMethod::rational_leading;
    if (pot.is<MixedRep4>()) return HaloMethod::mixed_leading;
    if (pot.is<WoodSaxon>()) return HaloMethod::wood_saxon_lagrange;
    return HaloMethod::generic_numeric;
}

inline void require_family(bool ok, HaloMethod m, const Potential& pot)
{
    if (!ok) {
        throw DomainError("halo method " + to_string(m) + " does not apply to family " +
                          pot.family());
    }
}

}  // namespace detail

/// x0 = r0/L at threshold: the largest root of x^2 v(x) = 1/(2 sigma^2 g_c).
inline double solve_x0(const Potential& pot, const CriticalCoupling& gc, double sigma,
                       HaloMethod method = HaloMethod::automatic)
{
    detail::require_sigma(sigma);
    if (!(gc.value > 0.0)) throw DomainError("critical coupling must be positive");
    const double gamma = 1.0 / (2.0 * sigma * sigma * gc.value);
    const HaloMethod m = detail::resolve_method(pot, method);
    switch (m) {
    case HaloMethod::paired_root: {
        const auto* lj = std::get_if<LjPair>(&pot.shape());
        detail::require_family(lj && lj->is_paired_form(), m, pot);
        if (1.0 - 4.0 * gamma < 0.0) throw NoRootError("no halo threshold: gamma > 1/4");
        const double y = (1.0 + std::sqrt(1.0 - 4.0 * gamma)) / (2.0 * gamma);
        return std::pow(y, 1.0 / (lj->p_att - 2.0));
    }
    case HaloMethod::rational_leading: {
        const auto* rn = std::get_if<RationalN>(&pot.shape());
        detail::require_family(rn != nullptr, m, pot);
        return std::pow(1.0 / gamma, 1.0 / (rn->n - 2.0));
    }
    case HaloMethod::mixed_leading:
        detail::require_family(pot.is<MixedRep4>(), m, pot);
        return 1.0 / std::sqrt(gamma);
    case HaloMethod::wood_saxon_lagrange: {
        const auto* ws = std::get_if<WoodSaxon>(&pot.shape());
        detail::require_family(ws != nullptr, m, pot);
        const double a = ws->alpha;
        const double base = a * a / gamma - 1.0;
        if (!(base > 0.0)) throw NoRootError("no halo threshold: alpha^2 <= gamma");
        return a * std::pow(base, 1.0 / a);
    }
    case HaloMethod::exp_leading: {
        const auto* en = std::get_if<ExpN>(&pot.shape());
        detail::require_family(en != nullptr, m, pot);
        if (!(gamma < 1.0)) throw NoRootError("no halo threshold: gamma >= 1");
        return std::pow(std::log(1.0 / gamma), 1.0 / en->n);
    }
    case HaloMethod::generic_numeric:
    case HaloMethod::automatic:
        break;
    }
    return detail::largest_root(pot, gamma);
}

/// E_H = -kinetic_scale / (2 (sigma x0 L)^2), in the potential's energy unit.
inline double threshold_energy(const Potential& pot, double x0, double sigma)
{
    detail::require_sigma(sigma);
    if (!(x0 > 0.0)) throw DomainError("x0 must be positive");
    const double L = pot.length_scale();
    return -pot.kinetic_scale() / (2.0 * std::pow(sigma * x0 * L, 2));
}

inline CriticalCoupling criterion_coupling(const Potential& pot, int N, CouplingSource src,
                                           const SolverConfig& cfg = {})
{
    if (src == CouplingSource::automatic) {
        src = pot.is<WoodSaxon>() ? CouplingSource::wkb : CouplingSource::bargmann;
    }
    switch (src) {
    case CouplingSource::wkb: {
        const auto* ws = std::get_if<WoodSaxon>(&pot.shape());
        if (!ws) throw InapplicableError("WKB coupling is implemented for Wood-Saxon wells only");
        return wkb_wood_saxon_alpha(ws->alpha, N);
    }
    case CouplingSource::numeric: return critical_numeric(pot, N, 0, cfg);
    case CouplingSource::bargmann:
    case CouplingSource::automatic: break;
    }
    return bargmann_upper(pot, N);
}

/// Threshold energy below which (in modulus) the N-th S-wave state is a halo.
inline HaloThreshold halo_threshold(const Potential& pot, int N, const HaloOptions& opt = {},
                                    const SolverConfig& cfg = {})
{
    detail::require_sigma(opt.sigma);
    HaloThreshold t;
    t.sigma = opt.sigma;
    t.gc = criterion_coupling(pot, N, opt.coupling, cfg);
    t.method = detail::resolve_method(pot, opt.method);
    t.x0 = solve_x0(pot, t.gc, opt.sigma, t.method);
    t.E_H = threshold_energy(pot, t.x0, opt.sigma);
    return t;
}

/// Ratio <r^2>^{1/2} / r0 of a solved state against the criterion for its level.
inline HaloAssessment assess(const Potential& pot, const RadialState& s, const HaloOptions& opt = {},
                             const SolverConfig& cfg = {})
{
    detail::require_sigma(opt.sigma);
    HaloAssessment a;
    a.sigma = opt.sigma;
    a.energy = s.energy;
    a.r0 = classical_radius(pot, s.energy);
    a.ratio = std::sqrt(s.msr) / a.r0;
    a.is_halo = a.ratio >= opt.sigma;
    const HaloThreshold t = halo_threshold(pot, s.n_r + 1, opt, cfg);
    a.gc = t.gc;
    a.x0 = t.x0;
    a.E_H = t.E_H;
    a.method = t.method;
    return a;
}

/// <r^2>^{1/2} / r0 for state (n_r, ell) tuned to sit at `energy` by adjusting g.
inline double ratio_at_energy(const Potential& pot, double energy, int n_r = 0, int ell = 0,
                              const SolverConfig& cfg = {})
{
    const CoupledState cs = coupling_for_energy(pot, energy, n_r, ell, cfg);
    return std::sqrt(cs.state.msr) / classical_radius(cs.potential, energy);
}

/// Threshold energy of the paired Lennard-Jones form from the leading-order
/// root x0^{n-2} = 1/gamma with the closed-form coupling bound; N enters as N^4.
inline double paired_threshold_energy(double n, int N, double sigma, double R,
                                      const UnitContext& units)
{
    detail::require_sigma(sigma);
    if (!(n > 2.0)) throw DomainError("paired form requires n > 2");
    const double base = std::pow(2.0, n + 4.0) * std::pow(sigma, 2.0 * n) * std::pow(N, 4.0) *
                        std::pow(n - 2.0, 4.0);
    return -units.kinetic_scale * std::pow(base, -1.0 / (n - 2.0)) / (R * R);
}

struct ScanRow {
    double n = 0.0;
    int N = 1;
    double value = 0.0;
};

/// s(N, n) = -E_H R^2 for 1/(1+x^n) with the closed-form coupling bound.
inline double halo_s(double n, int N, double sigma = kDefaultSigma)
{
    const double gc = bargmann_rational(n, N);
    return std::pow(2.0 * sigma * sigma, n / (2.0 - n)) * std::pow(gc, 2.0 / (2.0 - n));
}

/// t(N, n) = -E_H R^2 for x^-4 - x^-n with the closed-form coupling bound.
inline double halo_t(double n, int N, double sigma = kDefaultSigma)
{
    return 1.0 / (std::pow(2.0 * sigma * sigma, 2) * bargmann_mixed_rep4(n, N));
}

inline std::vector<ScanRow> scan_s(const std::vector<double>& n_values, const std::vector<int>& N_values,
                                   double sigma = kDefaultSigma)
{
    detail::require_sigma(sigma);
    std::vector<ScanRow> rows;
    for (double n : n_values) {
        if (!(n >= 4.0)) throw DomainError("s(N, n) needs n >= 4");
        for (int N : N_values) rows.push_back({n, N, halo_s(n, N, sigma)});
    }
    return rows;
}

inline std::vector<ScanRow> scan_t(const std::vector<double>& n_values, const std::vector<int>& N_values,
                                   double sigma = kDefaultSigma)
{
    detail::require_sigma(sigma);
    std::vector<ScanRow> rows;
    for (double n : n_values) {
        if (!(n >= 5.0)) throw DomainError("t(N, n) needs n >= 5");
        for (int N : N_values) rows.push_back({n, N, halo_t(n, N, sigma)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Nucleon-core halos in a Wood-Saxon well.

/// h(A) = (A+1) / (A (alpha^2/gamma - 1)^{2/alpha}) with alpha = 1.9 A^{1/3}
/// and the WKB ground-state coupling.
inline double nuclear_h(double mass_number, double sigma = kDefaultSigma)
{
    detail::require_sigma(sigma);
    const double alpha = constants::ws_alpha_per_cbrtA * std::cbrt(mass_number);
    const double gc = wkb_wood_saxon(mass_number, 1).value;
    const double gamma = 1.0 / (2.0 * sigma * sigma * gc);
    return (mass_number + 1.0) / (mass_number * std::pow(alpha * alpha / gamma - 1.0, 2.0 / alpha));
}

/// E_H(A) = -hbar^2/(2 m_N) / (2 sigma^2 r_0^2) h(A) A^{-2/3}, in MeV.
inline double nuclear_threshold_energy(double mass_number, double sigma = kDefaultSigma)
{
    const double r0 = constants::ws_radius_parameter_fm;
    const double prefactor = constants::hbar2_over_2mN_MeV_fm2 / (2.0 * sigma * sigma * r0 * r0);
    return -prefactor * nuclear_h(mass_number, sigma) * std::pow(mass_number, -2.0 / 3.0);
}

struct NuclearRow {
    double A = 0.0;
    double E_ex = 0.0;       // exact energy where <r^2>^{1/2} = sigma r0, MeV
    double E_H = 0.0;        // criterion, MeV
    double ratio_at_EH = 0.0;
};

/// Energy at which state (n_r, ell) has <r^2>^{1/2} = sigma r0, found by
/// bisection in energy (absolute tolerance `tol`, energy units) with the
/// strength retuned at every trial energy.
inline double exact_halo_energy(const Potential& pot, int n_r, double sigma = kDefaultSigma,
                                double tol = 1e-6, const SolverConfig& cfg = {})
{
    detail::require_sigma(sigma);
    auto excess = [&](double e) { return ratio_at_energy(pot, e, n_r, 0, cfg) - sigma; };
    // The ratio grows as the binding goes to zero.
    const double scale = pot.kinetic_scale() / std::pow(pot.length_scale(), 2);
    double shallow = -1e-3 * scale;
    double deep = -scale;
    while (excess(shallow) < 0.0) {
        shallow *= 0.1;
        if (shallow > -1e-12 * scale) throw NoRootError("ratio never reaches sigma");
    }
    while (excess(deep) > 0.0) {
        deep *= 2.0;
        if (deep < -1e6 * scale) throw NoRootError("ratio stays above sigma");
    }
    while (shallow - deep > tol) {
        const double mid = 0.5 * (shallow + deep);
        (excess(mid) > 0.0 ? shallow : deep) = mid;
    }
    return 0.5 * (shallow + deep);
}

/// Exact halo energy of the nucleon-core ground state, in MeV.
inline double nuclear_exact_energy(double mass_number, double sigma = kDefaultSigma,
                                   double tol = 1e-4, const SolverConfig& cfg = {})
{
    return exact_halo_energy(nuclear_wood_saxon(mass_number, 50.0), 0, sigma, tol, cfg);
}

inline std::vector<NuclearRow> nuclear_table(const std::vector<double>& masses,
                                             double sigma = kDefaultSigma,
                                             const SolverConfig& cfg = {})
{
    std::vector<NuclearRow> rows;
    for (double A : masses) {
        NuclearRow row;
        row.A = A;
        row.E_H = nuclear_threshold_energy(A, sigma);
        row.E_ex = nuclear_exact_energy(A, sigma, 1e-4, cfg);
        row.ratio_at_EH = ratio_at_energy(nuclear_wood_saxon(A, 50.0), row.E_H, 0, 0, cfg);
        rows.push_back(row);
    }
    return rows;
}

struct PowerFit {
    double prefactor = 0.0;  // |E_H| ~ prefactor * A^exponent, MeV
    double exponent = 0.0;
    double residual_rms = 0.0;  // RMS relative deviation of the fit
    int samples = 0;
};

/// Least-squares fit of ln|E_H| against ln A over the integers in [A_lo, A_hi].
inline PowerFit fit_nuclear(int A_lo = 1, int A_hi = 225, double sigma = kDefaultSigma)
{
    if (A_lo < 1 || A_hi <= A_lo) throw DomainError("fit needs 1 <= A_lo < A_hi");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const int n = A_hi - A_lo + 1;
    std::vector<double> xs, ys;
    for (int A = A_lo; A <= A_hi; ++A) {
        const double x = std::log(static_cast<double>(A));
        const double y = std::log(-nuclear_threshold_energy(A, sigma));
        xs.push_back(x);
        ys.push_back(y);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    PowerFit f;
    f.samples = n;
    f.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - f.exponent * sx) / n;
    f.prefactor = std::exp(intercept);
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double rel = std::exp(intercept + f.exponent * xs[i] - ys[i]) - 1.0;
        ss += rel * rel;
    }
    f.residual_rms = std::sqrt(ss / n);
    return f;
}

}  // namespace radbound
