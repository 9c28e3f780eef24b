#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "radbound/errors.hpp"
#include "radbound/functionals.hpp"
#include "radbound/potential.hpp"
#include "radbound/spectrum.hpp"

namespace radbound {

enum class CouplingMethod { numeric, bargmann, wkb };

inline std::string to_string(CouplingMethod m)
{
    switch (m) {
    case CouplingMethod::numeric: return "numeric";
    case CouplingMethod::bargmann: return "bargmann";
    case CouplingMethod::wkb: return "wkb";
    }
    return "unknown";
}

/// Strength at which the N-th state of angular momentum ell reaches zero binding.
struct CriticalCoupling {
    int N = 1;
    int ell = 0;
    double value = 0.0;
    CouplingMethod method = CouplingMethod::numeric;
    std::optional<std::pair<double, double>> bracket;
    bool validated = true;
    std::vector<std::string> notes;
};

namespace detail {

inline void require_level(int N)
{
    if (N < 1) throw DomainError("state index N must be >= 1");
}

}  // namespace detail

/// Zero-energy node counting, bisected on g until the count steps from N-1 to N.
inline CriticalCoupling critical_numeric(const Potential& pot, int N, int ell,
                                         const SolverConfig& cfg = {}, double rel_tol = 1e-11)
{
    detail::require_level(N);
    const ShapeTraits traits = pot.traits();
    if (traits.confining) {
        throw InapplicableError("critical coupling undefined for a confining potential");
    }
    if (!(traits.attractive_tail_power > 2.0)) {
        throw InapplicableError("critical coupling needs a tail falling faster than r^-2");
    }
    auto count = [&](double g) { return count_bound_states(pot.with_strength(g), ell, cfg).count; };
    double lo = pot.strength();
    double hi = lo;
    if (count(hi) >= N) {
        do {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-12 * pot.strength()) throw ConvergenceError("no subcritical strength found");
        } while (count(lo) >= N);
    } else {
        do {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e12 * pot.strength()) {
                throw InapplicableError("node count saturates; no critical strength found");
            }
        } while (count(hi) < N);
    }
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (count(mid) >= N ? hi : lo) = mid;
    }
    CriticalCoupling c;
    c.N = N;
    c.ell = ell;
    c.value = hi;
    c.method = CouplingMethod::numeric;
    c.bracket = std::pair{lo, hi};
    return c;
}

/// Closed-form integral bound for V = g R^-2 [(R/r)^{2(n-1)} - (R/r)^n].
inline double bargmann_paired(double n, int N)
{
    return std::pow(2.0 * N * (n - 2.0), 2.0);
}

/// Closed-form integral bound for V = -g R^-2 / (1 + (r/R)^n).
inline double bargmann_rational(double n, int N)
{
    const double a = std::tgamma(0.5 - 1.0 / n);
    const double b = std::tgamma(1.0 + 1.0 / n);
    return N * N * std::pow(std::numbers::pi, 3) / (a * a * b * b);
}

/// Closed-form integral bound for V = g R^-2 [(R/r)^n - (R/r)^4].
inline double bargmann_mixed_rep4(double n, int N)
{
    const double a = std::tgamma((3.0 * n - 10.0) / (2.0 * n - 8.0));
    const double b = std::tgamma(1.0 / (n - 4.0));
    return 4.0 * N * N * std::numbers::pi * (n - 4.0) * (n - 4.0) * a * a / (b * b);
}

/// Closed-form integral bound for V = -g R^-2 exp(-(r/R)^n).
inline double bargmann_exp(double n, int N)
{
    const double b = std::tgamma(1.0 + 1.0 / n) * std::pow(2.0, 1.0 / n);
    return std::pow(N * std::numbers::pi / b, 2);
}

/// Upper bound g_c^N <= (N pi)^2 / [int sqrt(v-) dx]^2.
inline CriticalCoupling bargmann_upper(const Potential& pot, int N,
                                       const FunctionalOptions& opt = {})
{
    detail::require_level(N);
    CriticalCoupling c;
    c.N = N;
    c.ell = 0;
    c.method = CouplingMethod::bargmann;

    if (const auto* lj = std::get_if<LjPair>(&pot.shape()); lj && lj->is_paired_form()) {
        if (lj->p_att < 4.0) {
            throw InapplicableError("integral coupling bound requires n >= 4 for the paired form");
        }
        if (opt.use_analytic) {
            c.value = bargmann_paired(lj->p_att, N);
            return c;
        }
    } else if (const auto* rn = std::get_if<RationalN>(&pot.shape())) {
        if (rn->n < 4.0) {
            throw InapplicableError("integral coupling bound requires n >= 4 for the rational form");
        }
        if (opt.use_analytic) {
            c.value = bargmann_rational(rn->n, N);
            return c;
        }
    } else if (const auto* m4 = std::get_if<MixedRep4>(&pot.shape())) {
        if (opt.use_analytic) {
            c.value = bargmann_mixed_rep4(m4->n, N);
            return c;
        }
    } else if (const auto* en = std::get_if<ExpN>(&pot.shape())) {
        if (opt.use_analytic) {
            c.value = bargmann_exp(en->n, N);
            return c;
        }
    } else {
        c.validated = false;
        c.notes.push_back("integral coupling bound not established for family " + pot.family());
    }
    const Functional B = integral_functionals(pot, opt).B;
    if (!B.finite) throw InapplicableError("integral coupling bound: " + B.note);
    c.value = std::pow(N * std::numbers::pi / B.value, 2);
    return c;
}

/// WKB critical strength of a Wood-Saxon well with alpha = R/a.
inline CriticalCoupling wkb_wood_saxon_alpha(double alpha, int N)
{
    detail::require_level(N);
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    CriticalCoupling c;
    c.N = N;
    c.method = CouplingMethod::wkb;
    c.value = std::pow((N - 0.25) * std::numbers::pi / (alpha + 2.0 * std::asinh(1.0)), 2);
    if (N > 1) {
        c.validated = false;
        c.notes.push_back("WKB estimate used beyond the ground state (unvalidated)");
    }
    return c;
}

/// WKB critical strength for the nucleon-core well of mass number A, with the
/// rounded alpha = 1.9 A^{1/3}.
inline CriticalCoupling wkb_wood_saxon(double mass_number, int N)
{
    if (!(mass_number >= 1.0)) throw DomainError("mass number must be >= 1");
    return wkb_wood_saxon_alpha(constants::ws_alpha_per_cbrtA * std::cbrt(mass_number), N);
}

}  // namespace radbound
