#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "radbound/errors.hpp"
#include "radbound/potential.hpp"

namespace radbound {

struct ScanConfig {
    int points = 2000;
    double lo_factor = 1e-4;  // scan range in units of the length scale
    double hi_factor = 1e4;
    bool use_analytic = true;
};

/// Supremum or infimum of a shape functional. Values are dimensionless
/// (energy * length^2 divided by the kinetic scale).
struct ScanExtremum {
    double value = 0.0;
    double location = 0.0;  // radius; 0 or inf when approached at an end
    bool finite = false;
    bool analytic = false;
    std::string note;
};

struct ShapeScan {
    ScanExtremum sup_neg_r2v;
    ScanExtremum sup_w;
    ScanExtremum inf_w;
    bool w_available = false;  // false when V has jumps (W has delta terms)
    bool w_nonnegative = false;
    struct {
        int points = 0;
        double r_lo = 0.0;
        double r_hi = 0.0;
    } scan_grid;
    std::vector<std::string> warnings;
};

namespace detail {

// Extremum of f over (0, inf) on a log grid, with the end limits probed
// further out to separate finite limits from divergence.
inline ScanExtremum scan_extremum(const std::function<double(double)>& f, double lo, double hi,
                                  int points, const std::vector<double>& jumps, bool maximize)
{
    const double sgn = maximize ? 1.0 : -1.0;
    auto g = [&](double x) {
        const double y = f(x);
        return std::isfinite(y) ? sgn * y : -kInf;
    };
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    std::vector<double> xs(points + 1);
    std::vector<double> ys(points + 1);
    for (int i = 0; i <= points; ++i) {
        xs[i] = std::exp(llo + (lhi - llo) * i / points);
        ys[i] = g(xs[i]);
    }
    const auto best = std::max_element(ys.begin(), ys.end());
    const auto ib = static_cast<int>(best - ys.begin());
    ScanExtremum out;
    double value = *best;
    double location = xs[ib];

    auto end_limit = [&](double x0, double factor, double& limit) {
        const double y0 = g(x0);
        const double y1 = g(x0 * factor);
        const double y2 = g(x0 * factor * factor);
        const double d1 = y1 - y0;
        const double d2 = y2 - y1;
        limit = std::max({y0, y1, y2});
        const double scale = std::max(1.0, std::abs(y0));
        // Still climbing without deceleration: the functional diverges.
        return !(d2 > 1e-9 * scale && d2 > 0.5 * d1);
    };

    if (ib == 0 || ib == points) {
        double limit = 0.0;
        const bool finite = ib == 0 ? end_limit(xs[0], 1e-4, limit) : end_limit(xs[points], 1e4, limit);
        if (!finite || !std::isfinite(limit)) {
            out.finite = false;
            out.note = ib == 0 ? "diverges at the origin" : "diverges at infinity";
            return out;
        }
        value = limit;
        location = ib == 0 ? 0.0 : kInf;
    } else {
        const auto r = boost::math::tools::brent_find_minima(
            [&](double lx) { return -g(std::exp(lx)); }, std::log(xs[ib - 1]), std::log(xs[ib + 1]),
            52);
        if (-r.second > value) {
            value = -r.second;
            location = std::exp(r.first);
        }
    }
    // One-sided limits at jumps belong to the closure.
    for (double d : jumps) {
        for (double x : {d * (1.0 - 1e-15), d * (1.0 + 1e-15)}) {
            const double y = g(x);
            if (y > value) {
                value = y;
                location = d;
            }
        }
    }
    out.value = sgn * value;
    out.location = location;
    out.finite = true;
    return out;
}

inline ScanExtremum from_analytic(const Extremum& e, double strength, double length)
{
    ScanExtremum s;
    s.value = strength * e.value;
    s.location = e.location * length;
    s.finite = true;
    s.analytic = true;
    return s;
}

}  // namespace detail

/// Suprema/infima of -r^2 V(r) and W(r) over (0, inf), in units of the
/// kinetic scale.
inline ShapeScan shape_scan(const Potential& pot, const ScanConfig& cfg = {})
{
    ShapeScan out;
    const double g = pot.strength();
    const double L = pot.length_scale();
    const ShapeTraits traits = pot.traits();
    out.scan_grid = {cfg.points, cfg.lo_factor * L, cfg.hi_factor * L};

    auto x2v = [&](double x) { return x * x * pot.shape_value(x); };
    auto wx = [&](double x) { return (6.0 * pot.shape_value(x) + x * pot.shape_derivative(x)) * x * x; };

    std::optional<Extremum> a_sup_x2v, a_sup_w, a_inf_w;
    if (cfg.use_analytic) {
        std::visit(
            [&](const auto& s) {
                a_sup_x2v = s.sup_x2v();
                a_sup_w = s.sup_w();
                a_inf_w = s.inf_w();
            },
            pot.shape());
    }

    if (a_sup_x2v) {
        out.sup_neg_r2v = detail::from_analytic(*a_sup_x2v, g, L);
    } else {
        out.sup_neg_r2v = detail::scan_extremum(x2v, cfg.lo_factor, cfg.hi_factor, cfg.points,
                                                traits.discontinuities, true);
        out.sup_neg_r2v.value *= g;
        out.sup_neg_r2v.location *= L;
    }

    out.w_available = traits.discontinuities.empty();
    if (!out.w_available) {
        const std::string why = "W carries delta terms at the jumps of V";
        out.sup_w.note = why;
        out.inf_w.note = why;
    } else {
        auto fill = [&](const std::optional<Extremum>& a, bool maximize) {
            if (a) return detail::from_analytic(*a, g, L);
            ScanExtremum e =
                detail::scan_extremum(wx, cfg.lo_factor, cfg.hi_factor, cfg.points, {}, maximize);
            e.value *= g;
            e.location *= L;
            return e;
        };
        out.sup_w = fill(a_sup_w, true);
        out.inf_w = fill(a_inf_w, false);
        out.w_nonnegative = out.inf_w.finite && out.inf_w.value >= -1e-12 * g;
    }

    if (traits.attractive_tail_power == 2.0) {
        out.warnings.push_back(
            "attractive r^-2 tail: finiteness of the angular-momentum limit L+ is not established "
            "for this class");
    }
    return out;
}

/// L+ defined by sup[-r^2 V] = (L+ + 1/2)^2, an upper limit on the largest
/// angular momentum with a bound state.
inline double l_plus(const ShapeScan& scan)
{
    if (!scan.sup_neg_r2v.finite) {
        throw InapplicableError("L+ undefined: sup[-r^2 V] " + scan.sup_neg_r2v.note);
    }
    if (scan.sup_neg_r2v.value < 0.0) {
        throw InapplicableError("L+ undefined: sup[-r^2 V] is negative");
    }
    return std::sqrt(scan.sup_neg_r2v.value) - 0.5;
}

inline double l_plus(const Potential& pot) { return l_plus(shape_scan(pot)); }

}  // namespace radbound
