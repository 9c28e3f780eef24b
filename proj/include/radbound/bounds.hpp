#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "radbound/errors.hpp"
#include "radbound/functionals.hpp"
#include "radbound/potential.hpp"
#include "radbound/shape_scan.hpp"
#include "radbound/spectrum.hpp"

namespace radbound {

enum class BoundKind { upper, lower };
enum class BoundStatus { applicable, trivial, inapplicable };

inline std::string to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }

inline std::string to_string(BoundStatus s)
{
    switch (s) {
    case BoundStatus::applicable: return "applicable";
    case BoundStatus::trivial: return "trivial";
    case BoundStatus::inapplicable: return "inapplicable";
    }
    return "unknown";
}

/// Limits on -E<r^2> (dimensionless) or on <r^2> itself (length^2), by id.
/// kinetic, kinetic-power, bertlmann-martin bound <r^2>; the rest bound -E<r^2>.
struct BoundEntry {
    std::string id;
    BoundKind kind = BoundKind::upper;
    std::string quantity;  // "-E<r2>" or "<r2>"
    double value = std::numeric_limits<double>::quiet_NaN();
    BoundStatus status = BoundStatus::inapplicable;
    bool satisfied = false;
    double margin = std::numeric_limits<double>::quiet_NaN();  // (value - exact) / |exact|
    std::string note;

    bool applicable() const { return status != BoundStatus::inapplicable; }
};

struct BoundsReport {
    int n_r = 0;
    int ell = 0;
    double epsilon = 0.0;  // E / kinetic_scale
    double exact = 0.0;    // -E<r^2>, dimensionless
    double exact_msr = 0.0;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& id) const
    {
        for (const auto& e : entries) {
            if (e.id == id) return &e;
        }
        return nullptr;
    }
};

inline constexpr double kBoundSlack = 1e-9;

/// <r^2> >= (2 ell + 3)^2 / (4 <T>), with <T> in units of the kinetic scale.
inline double kinetic_lower(const RadialState& s, const Potential& pot)
{
    const double t = expectations(s, pot).T_mean / pot.kinetic_scale();
    if (!(t > 0.0)) throw InapplicableError("kinetic bound needs a positive mean kinetic energy");
    const double k = 2.0 * s.ell + 3.0;
    return k * k / (4.0 * t);
}

/// Power-law form of the kinetic bound via the virial theorem:
/// <r^2> >= (2 ell + 3)^2 (p + 2) / (4 p E).
inline double kinetic_lower_power(const RadialState& s, const Potential& pot)
{
    const auto* pl = std::get_if<PowerLaw>(&pot.shape());
    if (!pl) throw InapplicableError("virial form of the kinetic bound needs a power law");
    const double p = pl->p;
    const double k = 2.0 * s.ell + 3.0;
    return k * k * (p + 2.0) / (4.0 * p * s.epsilon);
}

/// Ground-state <r^2> <= 3 / (E(ell=1) - E(ell=0)) in units of the kinetic scale.
inline double bertlmann_martin(const Potential& pot, const SolverConfig& cfg = {})
{
    const RadialState s0 = solve_state(pot, 0, 0, cfg);
    RadialState s1;
    try {
        s1 = solve_state(pot, 0, 1, cfg);
    } catch (const StateAbsentError& e) {
        throw InapplicableError(std::string("Bertlmann-Martin bound needs an ell=1 state: ") +
                                e.what());
    }
    return 3.0 / (s1.epsilon - s0.epsilon);
}

inline double centrifugal(int ell) { return ell * (ell + 1.0); }

/// -E<r^2> <= 1 + sup[-r^2 V] - ell(ell+1).
inline double simple_upper(const ShapeScan& scan, int ell)
{
    if (!scan.sup_neg_r2v.finite) {
        throw InapplicableError("sup[-r^2 V] " + scan.sup_neg_r2v.note);
    }
    return 1.0 + scan.sup_neg_r2v.value - centrifugal(ell);
}

/// The same limit written with L+: 5/4 + L+^2 - ell^2 + L+ - ell.
inline double simple_upper_lplus(const ShapeScan& scan, int ell)
{
    const double lp = l_plus(scan);
    return 1.25 + lp * lp - ell * ell + lp - ell;
}

/// -E<r^2> <= 1/2 + sup W / 6 - (2/3) ell(ell+1).
inline double main_upper(const ShapeScan& scan, int ell)
{
    if (!scan.w_available) throw InapplicableError(scan.sup_w.note);
    if (!scan.sup_w.finite) throw InapplicableError("sup W " + scan.sup_w.note);
    return 0.5 + scan.sup_w.value / 6.0 - 2.0 / 3.0 * centrifugal(ell);
}

/// -E<r^2> >= 1/2 + inf W / 6 - (2/3) ell(ell+1).
inline double main_lower(const ShapeScan& scan, int ell)
{
    if (!scan.w_available) throw InapplicableError(scan.inf_w.note);
    if (!scan.inf_w.finite) throw InapplicableError("inf W " + scan.inf_w.note);
    return 0.5 + scan.inf_w.value / 6.0 - 2.0 / 3.0 * centrifugal(ell);
}

/// -2E<r^2> >= 1 for S waves when W >= 0 everywhere, or for finite-range wells.
inline double positive_w_lower(const Potential& pot, const ShapeScan& scan, int ell)
{
    if (ell != 0) throw InapplicableError("the -2E<r^2> >= 1 limit holds for S waves only");
    const bool finite_range = pot.traits().finite_range;
    if (!(scan.w_available && scan.w_nonnegative) && !finite_range) {
        throw InapplicableError("W is not nonnegative everywhere");
    }
    return 0.5;
}

/// -E<r^2> < 1 + (I/3) J - ell(ell+1), for nodeless states.
inline double nodeless_upper(const IntegralFunctionals& f, int n_r, int ell)
{
    if (n_r != 0) throw InapplicableError("nodeless-state limit needs n_r = 0");
    for (const Functional* x : {&f.I, &f.J, &f.K}) {
        if (!x->finite) throw InapplicableError(x->note);
    }
    if (!(f.I.value > 0.0)) throw InapplicableError("I <= 0: no bound state by the Jost-Pais condition");
    return 1.0 + f.I.value / 3.0 * f.J.value - centrifugal(ell);
}

namespace detail {

template <class F>
BoundEntry evaluate_bound(std::string id, BoundKind kind, std::string quantity, double exact, F&& f)
{
    BoundEntry e;
    e.id = std::move(id);
    e.kind = kind;
    e.quantity = std::move(quantity);
    try {
        e.value = f();
    } catch (const InapplicableError& ex) {
        e.status = BoundStatus::inapplicable;
        e.note = ex.what();
        return e;
    } catch (const StateAbsentError& ex) {
        e.status = BoundStatus::inapplicable;
        e.note = ex.what();
        return e;
    }
    const bool vacuous = kind == BoundKind::lower && e.value <= 0.0;
    e.status = vacuous ? BoundStatus::trivial : BoundStatus::applicable;
    e.satisfied = kind == BoundKind::upper ? exact <= e.value + kBoundSlack
                                           : exact >= e.value - kBoundSlack;
    e.margin = (e.value - exact) / std::abs(exact);
    return e;
}

}  // namespace detail

/// Every limit evaluated against a solved state. Inapplicable limits are
/// reported with a reason rather than thrown.
inline BoundsReport report(const Potential& pot, const RadialState& s, const SolverConfig& cfg = {},
                           const ScanConfig& scan_cfg = {})
{
    BoundsReport r;
    r.n_r = s.n_r;
    r.ell = s.ell;
    r.epsilon = s.epsilon;
    r.exact = -s.epsilon * s.msr;
    r.exact_msr = s.msr;

    const ShapeScan scan = shape_scan(pot, scan_cfg);
    const IntegralFunctionals fn = integral_functionals(pot);
    const int ell = s.ell;
    const std::string msr = "<r2>";
    const std::string emsr = "-E<r2>";

    r.entries.push_back(detail::evaluate_bound("kinetic", BoundKind::lower, msr, r.exact_msr,
                                               [&] { return kinetic_lower(s, pot); }));
    if (pot.is<PowerLaw>()) {
        r.entries.push_back(detail::evaluate_bound("kinetic-power", BoundKind::lower, msr,
                                                   r.exact_msr,
                                                   [&] { return kinetic_lower_power(s, pot); }));
    }
    r.entries.push_back(detail::evaluate_bound("bertlmann-martin", BoundKind::upper, msr,
                                               r.exact_msr, [&] {
                                                   if (s.n_r != 0 || s.ell != 0) {
                                                       throw InapplicableError(
                                                           "applies to the ell=0 ground state");
                                                   }
                                                   return bertlmann_martin(pot, cfg);
                                               }));
    r.entries.push_back(detail::evaluate_bound("simple-upper", BoundKind::upper, emsr, r.exact,
                                               [&] { return simple_upper(scan, ell); }));
    r.entries.push_back(detail::evaluate_bound("simple-upper-lplus", BoundKind::upper, emsr,
                                               r.exact,
                                               [&] { return simple_upper_lplus(scan, ell); }));
    r.entries.push_back(detail::evaluate_bound("main-upper", BoundKind::upper, emsr, r.exact,
                                               [&] { return main_upper(scan, ell); }));
    r.entries.push_back(detail::evaluate_bound("main-lower", BoundKind::lower, emsr, r.exact,
                                               [&] { return main_lower(scan, ell); }));
    r.entries.push_back(detail::evaluate_bound("positive-w-lower", BoundKind::lower, emsr, r.exact,
                                               [&] { return positive_w_lower(pot, scan, ell); }));
    r.entries.push_back(detail::evaluate_bound("nodeless-upper", BoundKind::upper, emsr, r.exact,
                                               [&] { return nodeless_upper(fn, s.n_r, ell); }));
    return r;
}

}  // namespace radbound
