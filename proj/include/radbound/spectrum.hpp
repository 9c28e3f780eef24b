#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "radbound/errors.hpp"
#include "radbound/potential.hpp"

namespace radbound {

/// Grid and convergence controls for the Numerov solver. The solver works on
/// x = ln r with u = e^{x/2} phi, so `step` is a step in ln r.
struct SolverConfig {
    double energy_tolerance = 1e-10;  // relative
    double step = 2e-3;               // largest step in ln r
    double phase_step = 0.02;         // largest step times local wave number
    double r_min_factor = 1e-6;       // in units of the natural length
    double core_barrier = 1e4;        // r^2 V at the start of a repulsive core
    double decay_exponent = 45.0;     // WKB exponent kept beyond the turning point
    double outer_factor = 20.0;       // r_max >= outer_factor * natural length
    int max_points = 400000;
    int max_iterations = 400;

    void validate() const
    {
        if (!(energy_tolerance > 0.0) || !(step > 0.0) || !(phase_step > 0.0) ||
            !(r_min_factor > 0.0) || !(core_barrier > 0.0) || !(decay_exponent > 0.0) ||
            !(outer_factor > 0.0)) {
            throw DomainError("solver tolerances and grid factors must be positive");
        }
        if (max_points < 10000) {
            throw DomainError("max_points must be at least 10000");
        }
        if (max_iterations < 10) {
            throw DomainError("max_iterations must be at least 10");
        }
    }
};

/// One bound state. Radii are in the potential's length unit, `energy` in its
/// energy unit and `epsilon` = energy / kinetic_scale. `u` is normalized so
/// that the integral of u^2 dr is one.
struct RadialState {
    int n_r = 0;
    int ell = 0;
    double energy = 0.0;
    double epsilon = 0.0;
    std::vector<double> r;
    std::vector<double> u;
    double log_step = 0.0;
    double norm_defect = 0.0;
    double msr = 0.0;
    int nodes = 0;
    double r_match = 0.0;
    std::vector<std::string> warnings;

    double r_min() const { return r.empty() ? 0.0 : r.front(); }
    double r_max() const { return r.empty() ? 0.0 : r.back(); }
};

struct BoundStateCount {
    int count = 0;
    double r_max = 0.0;
    bool borderline_tail = false;
    std::vector<std::string> warnings;
};

namespace detail {

// Uniform grid in x = ln r. n - 1 is a multiple of 4 so Simpson works at h
// and 2h; a jump of V sits on an index that is a multiple of 4.
struct LogGrid {
    double x0 = 0.0;
    double h = 0.0;
    int n = 0;
    std::vector<double> r;
    std::vector<double> r2;
    std::vector<double> r2u;  // r^2 V / kinetic_scale
    double lp2 = 0.25;        // (ell + 1/2)^2
    bool core = false;        // starts inside a repulsive core
    bool allowed = true;      // a classically allowed region exists
    int turning = -1;         // index of the outermost turning point
    std::vector<std::string> warnings;
};

inline constexpr double kRescale = 1e150;

struct RegionScan {
    bool allowed = false;
    double x_turn = 0.0;
    double max_neg_q = 0.0;
};

inline double reduced_at(const Potential& pot, double r, const std::vector<double>& jumps)
{
    const double x = r / pot.length_scale();
    for (double d : jumps) {
        if (std::abs(x - d) <= 1e-9 * d) {
            const double L = pot.length_scale();
            return 0.5 * (pot.reduced(d * L * (1.0 - 1e-12)) + pot.reduced(d * L * (1.0 + 1e-12)));
        }
    }
    return pot.reduced(r);
}

inline double start_radius(const Potential& pot, double eps, int ell, const SolverConfig& cfg)
{
    const double Ln = pot.natural_length();
    const double lp2 = (ell + 0.5) * (ell + 0.5);
    auto excess = [&](double r) { return r * r * (pot.reduced(r) - eps); };
    if (pot.traits().repulsive_origin_power > 2.0) {
        double r = Ln;
        if (excess(r) >= cfg.core_barrier) return r;
        double outer = r;
        while (excess(r) < cfg.core_barrier) {
            outer = r;
            r *= 0.8;
            if (r < 1e-30 * Ln) throw ConvergenceError("repulsive core barrier not found");
        }
        double lo = std::log(r);
        double hi = std::log(outer);
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (excess(std::exp(mid)) >= cfg.core_barrier ? lo : hi) = mid;
        }
        return std::exp(lo);
    }
    double r = cfg.r_min_factor * Ln;
    for (int k = 0; k < 80 && std::abs(excess(r)) > 1e-8 * lp2; ++k) r *= 0.1;
    return r;
}

// Coarse pass over ln r locating the outermost classically allowed point and
// the largest local wave number squared inside the allowed region.
inline RegionScan scan_region(const Potential& pot, double eps, int ell, double x_start,
                              double x_far)
{
    const double lp2 = (ell + 0.5) * (ell + 0.5);
    auto q = [&](double x) {
        const double r = std::exp(x);
        return r * r * (pot.reduced(r) - eps) + lp2;
    };
    constexpr double dx = 0.01;
    RegionScan out;
    double x = x_start;
    for (; x <= x_far; x += dx) {
        const double qv = q(x);
        if (qv < 0.0) {
            out.allowed = true;
            out.x_turn = x;
            out.max_neg_q = std::max(out.max_neg_q, -qv);
        }
    }
    if (out.allowed && out.x_turn + dx > x_far) {
        // Still allowed at the end of the scan: follow it outward.
        x = out.x_turn;
        while (q(x + dx) < 0.0) {
            x += dx;
            out.max_neg_q = std::max(out.max_neg_q, -q(x));
            if (x > x_far + 200.0) throw ConvergenceError("classically allowed region unbounded");
        }
        out.x_turn = x;
    }
    return out;
}

// Lay out grid points on [x_lo, x_hi] with step <= h_target, anchoring jumps
// on multiples of 4 and making n - 1 a multiple of 4.
inline void lay_out(LogGrid& G, const Potential& pot, double x_lo, double x_hi, double h_target,
                    const SolverConfig& cfg)
{
    const ShapeTraits traits = pot.traits();
    std::vector<double> anchors;
    for (double d : traits.discontinuities) {
        const double xd = std::log(d * pot.length_scale());
        if (xd > x_lo && xd < x_hi) anchors.push_back(xd);
    }
    double h = h_target;
    const auto span = x_hi - x_lo;
    if (span / h + 9.0 > cfg.max_points) {
        h = span / (cfg.max_points - 9.0);
        std::ostringstream os;
        os << "grid capped at " << cfg.max_points << " points; log step raised to " << h
           << " (accuracy downgraded)";
        G.warnings.push_back(os.str());
    }
    double x0 = x_lo;
    if (!anchors.empty()) {
        const double xd = anchors.front();
        const double blocks = std::ceil((xd - x_lo) / (4.0 * h));
        x0 = xd - 4.0 * h * blocks;
    }
    auto n = static_cast<std::int64_t>(std::ceil((x_hi - x0) / h)) + 1;
    n = 4 * ((n - 1 + 3) / 4) + 1;
    G.x0 = x0;
    G.h = h;
    G.n = static_cast<int>(n);
    G.r.resize(G.n);
    G.r2.resize(G.n);
    G.r2u.resize(G.n);
    for (int i = 0; i < G.n; ++i) {
        const double r = std::exp(x0 + h * i);
        G.r[i] = r;
        G.r2[i] = r * r;
        G.r2u[i] = r * r * reduced_at(pot, r, traits.discontinuities);
    }
}

/// Grid for an eigenvalue search at energy eps (in units of the kinetic scale).
inline LogGrid build_grid(const Potential& pot, double eps, int ell, const SolverConfig& cfg)
{
    LogGrid G;
    G.lp2 = (ell + 0.5) * (ell + 0.5);
    G.core = pot.traits().repulsive_origin_power > 2.0;
    const double Ln = pot.natural_length();
    const double r_start = start_radius(pot, eps, ell, cfg);
    const double x_start = std::log(r_start);
    double r_far = 1e4 * Ln;
    if (eps < 0.0) r_far = std::max(r_far, 1e3 / std::sqrt(-eps));
    const RegionScan scan = scan_region(pot, eps, ell, x_start, std::log(r_far));
    if (!scan.allowed) {
        G.allowed = false;
        return G;
    }
    const double h_target =
        std::min(cfg.step, cfg.phase_step / std::sqrt(std::max(scan.max_neg_q, 1e-300)));

    auto q = [&](double x) {
        const double r = std::exp(x);
        return r * r * (pot.reduced(r) - eps) + G.lp2;
    };
    const double r_needed =
        std::max(cfg.outer_factor * Ln, eps < 0.0 ? 40.0 / std::sqrt(-eps) : 0.0);
    constexpr double dx = 0.01;
    double x = scan.x_turn;
    double exponent = 0.0;
    bool capped = false;
    for (;;) {
        const double qv = q(x + 0.5 * dx);
        exponent += std::sqrt(std::max(qv, 0.0)) * dx;
        x += dx;
        if (exponent >= cfg.decay_exponent && std::exp(x) >= r_needed) break;
        if (exponent >= 300.0) break;
        if (h_target * h_target * q(x) / 12.0 >= 0.5) {
            capped = exponent < cfg.decay_exponent;
            break;
        }
    }
    if (capped) {
        G.warnings.push_back("outer boundary limited by Numerov stability before full decay");
    }
    lay_out(G, pot, x_start, x, h_target, cfg);
    G.turning = std::clamp(static_cast<int>(std::lround((scan.x_turn - G.x0) / G.h)), 2, G.n - 3);
    return G;
}

/// Grid for the zero-energy regular solution, out to where the potential is
/// negligible against the centrifugal term.
inline LogGrid build_zero_grid(const Potential& pot, int ell, const SolverConfig& cfg,
                               bool& borderline)
{
    LogGrid G;
    G.lp2 = (ell + 0.5) * (ell + 0.5);
    const ShapeTraits traits = pot.traits();
    G.core = traits.repulsive_origin_power > 2.0;
    const double Ln = pot.natural_length();
    const double L = pot.length_scale();
    borderline = traits.attractive_tail_power <= 2.0;

    const double x_start = std::log(start_radius(pot, 0.0, ell, cfg));
    const double r_cap = borderline ? 1e8 * L : 1e16 * Ln;
    double x = std::log(cfg.outer_factor * Ln);
    constexpr double dx = 0.01;
    auto small = [&](double r) { return r * r * std::abs(pot.reduced(r)) < 1e-10 * G.lp2; };
    while (!small(std::exp(x)) && std::exp(x) < r_cap) x += dx;
    if (std::exp(x) >= r_cap) {
        x = std::log(r_cap);
        G.warnings.push_back(
            borderline ? "tail not faster than r^-2: zero-energy count truncated at 1e8 length "
                         "units (best effort)"
                       : "potential not negligible at the zero-energy cutoff");
    }
    const RegionScan scan = scan_region(pot, 0.0, ell, x_start, x);
    G.allowed = scan.allowed;
    const double h_target =
        scan.allowed ? std::min(cfg.step, cfg.phase_step / std::sqrt(std::max(scan.max_neg_q, 1e-300)))
                     : cfg.step;
    lay_out(G, pot, x_start, x, h_target, cfg);
    return G;
}

inline std::pair<double, double> initial_values(const LogGrid& G)
{
    if (G.core) return {0.0, 1e-20};
    return {1.0, std::exp(std::sqrt(G.lp2) * G.h)};
}

inline double numerov_f(const LogGrid& G, int i, double eps, double gscale)
{
    const double q = gscale * G.r2u[i] - eps * G.r2[i] + G.lp2;
    return 1.0 - G.h * G.h * q / 12.0;
}

inline std::vector<double> numerov_f(const LogGrid& G, double eps, double gscale)
{
    std::vector<double> f(G.n);
    for (int i = 0; i < G.n; ++i) f[i] = numerov_f(G, i, eps, gscale);
    return f;
}

struct SweepResult {
    int nodes = 0;
    double last = 0.0;
    double previous = 0.0;
};

// Outward sweep over the whole grid counting sign changes. The potential term
// is scaled by gscale.
inline SweepResult outward_sweep(const LogGrid& G, double eps, double gscale)
{
    auto [p0, p1] = initial_values(G);
    double f0 = numerov_f(G, 0, eps, gscale);
    double f1 = numerov_f(G, 1, eps, gscale);
    SweepResult out;
    if ((p1 < 0.0) != (p0 < 0.0)) ++out.nodes;
    for (int i = 1; i + 1 < G.n; ++i) {
        const double f2 = numerov_f(G, i + 1, eps, gscale);
        double p2 = ((12.0 - 10.0 * f1) * p1 - f0 * p0) / f2;
        if ((p2 < 0.0) != (p1 < 0.0)) ++out.nodes;
        if (std::abs(p2) > kRescale) {
            p2 /= kRescale;
            p1 /= kRescale;
        }
        p0 = p1;
        p1 = p2;
        f0 = f1;
        f1 = f2;
    }
    out.last = p1;
    out.previous = p0;
    return out;
}

inline int count_nodes(const LogGrid& G, double eps, double gscale = 1.0)
{
    if (!G.allowed) return 0;
    return outward_sweep(G, eps, gscale).nodes;
}

inline void outward(const LogGrid& G, const std::vector<double>& f, int last,
                    std::vector<double>& phi)
{
    auto [p0, p1] = initial_values(G);
    phi[0] = p0;
    phi[1] = p1;
    for (int i = 1; i < last; ++i) {
        phi[i + 1] = ((12.0 - 10.0 * f[i]) * phi[i] - f[i - 1] * phi[i - 1]) / f[i + 1];
        if (std::abs(phi[i + 1]) > kRescale) {
            for (int k = 0; k <= i + 1; ++k) phi[k] /= kRescale;
        }
    }
}

inline void inward(const LogGrid& G, const std::vector<double>& f, int first,
                   std::vector<double>& psi)
{
    const int n = G.n;
    psi[n - 1] = 0.0;
    psi[n - 2] = 1.0;
    for (int i = n - 2; i > first; --i) {
        psi[i - 1] = ((12.0 - 10.0 * f[i]) * psi[i] - f[i + 1] * psi[i + 1]) / f[i - 1];
        if (std::abs(psi[i - 1]) > kRescale) {
            for (int k = i - 1; k < n; ++k) psi[k] /= kRescale;
        }
    }
}

// Log-derivative mismatch at index m between the outward and inward solutions.
inline double mismatch(const LogGrid& G, double eps, double gscale, int m)
{
    const std::vector<double> f = numerov_f(G, eps, gscale);
    std::vector<double> phi(G.n);
    std::vector<double> psi(G.n);
    outward(G, f, m, phi);
    inward(G, f, m, psi);
    return (f[m - 1] * phi[m - 1] / phi[m] + f[m + 1] * psi[m + 1] / psi[m] - (12.0 - 10.0 * f[m])) /
           G.h;
}

inline double simpson(const std::vector<double>& y, double h, int stride = 1)
{
    const int n = static_cast<int>(y.size());
    const int m = (n - 1) / stride;
    double s = y[0] + y[static_cast<std::size_t>(m) * stride];
    for (int k = 1; k < m; ++k) s += (k % 2 ? 4.0 : 2.0) * y[static_cast<std::size_t>(k) * stride];
    return s * h * stride / 3.0;
}

// Matched, normalized state at (eps, gscale) on grid G.
inline RadialState assemble_state(const Potential& pot, const LogGrid& G, double eps,
                                  double gscale, int n_r, int ell)
{
    const int m = G.turning;
    const std::vector<double> f = numerov_f(G, eps, gscale);
    std::vector<double> phi(G.n);
    std::vector<double> psi(G.n);
    outward(G, f, m, phi);
    inward(G, f, m, psi);
    const double scale = phi[m] / psi[m];
    for (int i = m + 1; i < G.n; ++i) phi[i] = psi[i] * scale;

    std::vector<double> w(G.n);
    std::vector<double> w2(G.n);
    for (int i = 0; i < G.n; ++i) {
        w[i] = G.r2[i] * phi[i] * phi[i];
        w2[i] = w[i] * G.r2[i];
    }
    const double norm_h = simpson(w, G.h);
    const double norm_2h = simpson(w, G.h, 2);

    RadialState s;
    s.n_r = n_r;
    s.ell = ell;
    s.epsilon = eps;
    s.energy = eps * pot.kinetic_scale();
    s.r = G.r;
    s.log_step = G.h;
    s.r_match = G.r[m];
    s.warnings = G.warnings;

    const double inv = 1.0 / std::sqrt(norm_h);
    s.u.resize(G.n);
    for (int i = 0; i < G.n; ++i) s.u[i] = std::sqrt(G.r[i]) * phi[i] * inv;

    // Contributions outside [r_min, r_max]: u ~ r^{ell+1} inside, e^{-kappa r} outside.
    const double u0 = s.u.front();
    const double r0 = G.r.front();
    const double inner = u0 * u0 * r0 / (2.0 * ell + 3.0);
    const double ue = s.u.back();
    const double re = G.r.back();
    double tail = 0.0;
    double tail_r2 = 0.0;
    if (eps < 0.0) {
        const double kappa = std::sqrt(-eps);
        tail = ue * ue / (2.0 * kappa);
        tail_r2 = ue * ue * (re * re / (2.0 * kappa) + re / (2.0 * kappa * kappa) +
                             1.0 / (4.0 * kappa * kappa * kappa));
    }
    s.norm_defect = std::abs(norm_h - norm_2h) / 15.0 / norm_h + inner + tail;
    s.msr = simpson(w2, G.h) / norm_h + tail_r2;

    double umax = 0.0;
    for (double v : s.u) umax = std::max(umax, std::abs(v));
    int nodes = 0;
    int last_sign = 0;
    for (double v : s.u) {
        if (std::abs(v) < 1e-9 * umax) continue;
        const int sg = v < 0.0 ? -1 : 1;
        if (last_sign != 0 && sg != last_sign) ++nodes;
        last_sign = sg;
    }
    s.nodes = nodes;
    return s;
}

}  // namespace detail

/// Number of bound states at angular momentum ell, from the nodes of the
/// zero-energy regular solution.
inline BoundStateCount count_bound_states(const Potential& pot, int ell,
                                          const SolverConfig& cfg = {})
{
    cfg.validate();
    if (ell < 0) throw DomainError("ell must be nonnegative");
    if (pot.traits().confining) {
        throw InapplicableError("confining potential: every state is bound");
    }
    BoundStateCount out;
    const detail::LogGrid G = detail::build_zero_grid(pot, ell, cfg, out.borderline_tail);
    out.warnings = G.warnings;
    out.r_max = G.r.back();
    const detail::SweepResult sw = detail::outward_sweep(G, 0.0, 1.0);
    out.count = sw.nodes;
    // Beyond the cutoff phi = a e^{k x} + b e^{-k x}; one more node if a has
    // the opposite sign to phi at the cutoff.
    const double k = std::sqrt(G.lp2);
    const double ekh = std::exp(k * G.h);
    const double a = (sw.last * ekh - sw.previous) / (ekh - 1.0 / ekh);
    if (a != 0.0 && sw.last != 0.0 && (a < 0.0) != (sw.last < 0.0)) ++out.count;
    return out;
}

namespace detail {

inline void require_quantum_numbers(int n_r, int ell)
{
    if (n_r < 0) throw DomainError("n_r must be nonnegative");
    if (ell < 0) throw DomainError("ell must be nonnegative");
}

// Refine an energy bracket [lo, hi] with count(lo) <= n_r < count(hi) on a
// fixed grid; returns the eigenvalue.
inline double refine_on_grid(const LogGrid& G, double lo, double hi, int n_r,
                             const SolverConfig& cfg,
                             std::vector<std::pair<double, double>>& history)
{
    auto above = [&](double e) { return count_nodes(G, e) > n_r; };
    for (int k = 0; k < 40 && above(lo); ++k) lo -= (hi - lo);
    for (int k = 0; k < 40 && !above(hi); ++k) hi += (hi - lo);
    if (above(lo) || !above(hi)) {
        throw ConvergenceError("eigenvalue bracket lost on the fixed grid", history);
    }
    for (int it = 0; it < cfg.max_iterations && (hi - lo) > 1e-6 * std::abs(hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
        history.emplace_back(lo, hi);
    }
    const int m = G.turning;
    auto d = [&](double e) { return mismatch(G, e, 1.0, m); };
    const double dlo = d(lo);
    const double dhi = d(hi);
    if (std::isfinite(dlo) && std::isfinite(dhi) && (dlo < 0.0) != (dhi < 0.0)) {
        std::uintmax_t iters = static_cast<std::uintmax_t>(cfg.max_iterations);
        auto tol = [](double a, double b) {
            return std::abs(a - b) <= 1e-14 * std::max(std::abs(a), std::abs(b));
        };
        const auto root = boost::math::tools::toms748_solve(d, lo, hi, dlo, dhi, tol, iters);
        return 0.5 * (root.first + root.second);
    }
    for (int it = 0; it < cfg.max_iterations && (hi - lo) > cfg.energy_tolerance * std::abs(hi) * 1e-3;
         ++it) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
        history.emplace_back(lo, hi);
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Bound state with n_r nodes at angular momentum ell.
inline RadialState solve_state(const Potential& pot, int n_r, int ell, const SolverConfig& cfg = {})
{
    cfg.validate();
    detail::require_quantum_numbers(n_r, ell);
    const ShapeTraits traits = pot.traits();
    const double Ln = pot.natural_length();
    const double scale = std::max(pot.strength(), 1.0) / (Ln * Ln);
    std::vector<std::pair<double, double>> history;
    std::vector<std::string> notes;

    auto count_at = [&](double e) {
        return detail::count_nodes(detail::build_grid(pot, e, ell, cfg), e);
    };

    double lo = 0.0;
    double hi = 0.0;
    if (traits.confining) {
        lo = 0.0;
        hi = scale;
        for (int k = 0; count_at(hi) <= n_r; ++k) {
            lo = hi;
            hi *= 2.0;
            if (k > 200) throw ConvergenceError("no upper energy bracket found", history);
        }
        for (int it = 0; it < 200 && (hi - lo) > 1e-4 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (count_at(mid) > n_r ? hi : lo) = mid;
            history.emplace_back(lo, hi);
        }
    } else {
        const bool finite_count = traits.attractive_tail_power > 2.0;
        if (finite_count) {
            const BoundStateCount zc = count_bound_states(pot, ell, cfg);
            if (zc.count <= n_r) throw StateAbsentError(n_r, ell, zc.count);
        }
        // Bisection on t = ln(-eps): states span many decades below threshold.
        double t_shallow = std::log(1e-18 * scale);
        if (count_at(-std::exp(t_shallow)) <= n_r) {
            if (!finite_count) {
                throw StateAbsentError(n_r, ell, count_at(-std::exp(t_shallow)));
            }
            throw ConvergenceError("state lies too close to threshold to resolve", history);
        }
        double t_deep = std::log(scale);
        for (int k = 0; count_at(-std::exp(t_deep)) > n_r; ++k) {
            t_shallow = std::max(t_shallow, t_deep);
            t_deep += std::log(4.0);
            if (k > 200) throw ConvergenceError("no lower energy bracket found", history);
        }
        for (int it = 0; it < 200 && (t_deep - t_shallow) > 1e-4; ++it) {
            const double mid = 0.5 * (t_deep + t_shallow);
            (count_at(-std::exp(mid)) > n_r ? t_shallow : t_deep) = mid;
            history.emplace_back(-std::exp(t_deep), -std::exp(t_shallow));
        }
        lo = -std::exp(t_deep);
        hi = -std::exp(t_shallow);
    }

    const detail::LogGrid G = detail::build_grid(pot, hi, ell, cfg);
    if (!G.allowed) throw ConvergenceError("no classically allowed region at the bracket", history);
    const double eps = detail::refine_on_grid(G, lo, hi, n_r, cfg, history);
    RadialState s = detail::assemble_state(pot, G, eps, 1.0, n_r, ell);
    if (s.nodes != n_r) {
        std::ostringstream os;
        os << "wave function has " << s.nodes << " nodes, expected " << n_r;
        s.warnings.push_back(os.str());
    }
    return s;
}

/// Strength g* for which state (n_r, ell) sits exactly at `energy`, and that state.
struct CoupledState {
    Potential potential;
    RadialState state;
};

inline CoupledState coupling_for_energy(const Potential& pot, double energy, int n_r, int ell,
                                        const SolverConfig& cfg = {})
{
    cfg.validate();
    detail::require_quantum_numbers(n_r, ell);
    if (!(energy < 0.0)) throw DomainError("coupling_for_energy requires a negative energy");
    if (pot.traits().confining) {
        throw InapplicableError("coupling_for_energy needs a potential vanishing at infinity");
    }
    const double eps = energy / pot.kinetic_scale();
    std::vector<std::pair<double, double>> history;

    auto count_at = [&](double g) {
        const Potential p = pot.with_strength(g);
        return detail::count_nodes(detail::build_grid(p, eps, ell, cfg), eps);
    };
    double lo = pot.strength();
    double hi = lo;
    if (count_at(hi) > n_r) {
        for (int k = 0; count_at(lo) > n_r; ++k) {
            hi = lo;
            lo *= 0.5;
            if (k > 200) throw ConvergenceError("no lower coupling bracket found", history);
        }
    } else {
        for (int k = 0; count_at(hi) <= n_r; ++k) {
            lo = hi;
            hi *= 2.0;
            if (k > 200) throw ConvergenceError("no upper coupling bracket found", history);
        }
    }

    // r^2 V is linear in g, so a grid built at g_hi serves the whole bracket.
    const double g_grid = hi;
    const Potential p_hi = pot.with_strength(g_grid);
    const detail::LogGrid G = detail::build_grid(p_hi, eps, ell, cfg);
    auto above = [&](double g) { return detail::count_nodes(G, eps, g / g_grid) > n_r; };
    for (int k = 0; k < 60 && above(lo); ++k) lo *= 0.9;
    if (above(lo) || !above(hi)) throw ConvergenceError("coupling bracket lost", history);
    for (int it = 0; it < cfg.max_iterations && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
        history.emplace_back(lo, hi);
    }
    const double g = 0.5 * (lo + hi);
    RadialState s = detail::assemble_state(p_hi, G, eps, g / g_grid, n_r, ell);
    return {pot.with_strength(g), std::move(s)};
}

inline double mean_square_radius(const RadialState& s) { return s.msr; }

/// Integral of r^k u^2 dr over the state grid.
inline double radial_moment(const RadialState& s, double k)
{
    std::vector<double> y(s.r.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::pow(s.r[i], k + 1.0) * s.u[i] * s.u[i];
    return detail::simpson(y, s.log_step);
}

struct Expectations {
    double V_mean = 0.0;
    double T_mean = 0.0;
};

/// <V> by quadrature on the state grid and <T> = E - <V>, in energy units.
inline Expectations expectations(const RadialState& s, const Potential& pot)
{
    const std::vector<double> jumps = pot.traits().discontinuities;
    std::vector<double> y(s.r.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = detail::reduced_at(pot, s.r[i], jumps) * s.r[i] * s.u[i] * s.u[i];
    }
    const double v = pot.kinetic_scale() * detail::simpson(y, s.log_step);
    if (!std::isfinite(v)) {
        throw ConvergenceError("<V> quadrature diverged; refine the grid");
    }
    return {v, s.energy - v};
}

}  // namespace radbound
