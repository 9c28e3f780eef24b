#pragma once

// Reference computations written independently of the library, used to
// freeze expected values in the unit tests.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000)
{
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-14)
{
    double fa = f(a);
    for (int it = 0; it < 300 && std::abs(b - a) > tol * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Stirling series after shifting the argument above 15.
inline double gamma(double x)
{
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    double shift = 1.0;
    while (x < 15.0) {
        shift *= x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series = inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0 -
                          inv * inv2 * inv2 * inv2 / 1680.0;
    const double lg = (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
    return std::exp(lg) / shift;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// S-wave square well of depth U0 (units hbar^2/2m = 1) and radius R:
/// ground-state energy from k cot(kR) = -kappa.
inline double square_well_energy(double U0, double R)
{
    auto f = [&](double kappa) {
        const double k = std::sqrt(U0 - kappa * kappa);
        return k * std::cos(k * R) + kappa * std::sin(k * R);
    };
    // The ground state has the largest kappa: scan down from sqrt(U0).
    const double top = std::sqrt(U0) * (1.0 - 1e-15);
    const int steps = 20000;
    double hi = top;
    for (int i = 1; i <= steps; ++i) {
        const double lo = top * (1.0 - static_cast<double>(i) / steps);
        if ((f(lo) < 0.0) != (f(hi) < 0.0)) {
            const double kappa = bisect(f, lo, hi);
            return -kappa * kappa;
        }
        hi = lo;
    }
    return 0.0;
}

/// <r^2> of the same state from the closed-form wave function.
inline double square_well_msr(double U0, double R)
{
    const double kappa = std::sqrt(-square_well_energy(U0, R));
    const double k = std::sqrt(U0 - kappa * kappa);
    const double B = std::sin(k * R) * std::exp(kappa * R);
    auto in2 = [&](double r) { return std::pow(std::sin(k * r), 2); };
    auto in4 = [&](double r) { return r * r * std::pow(std::sin(k * r), 2); };
    // Outside: int_R^inf r^m e^{-2 kappa r} dr in closed form.
    const double a = 2.0 * kappa;
    const double e = std::exp(-a * R);
    const double out0 = e / a;
    const double out2 = e * (R * R / a + 2.0 * R / (a * a) + 2.0 / (a * a * a));
    const double norm = simpson(in2, 0.0, R) + B * B * out0;
    return (simpson(in4, 0.0, R) + B * B * out2) / norm;
}

struct FdLevel {
    double energy;
    double msr;
};

/// Dirichlet box [0, r_max] with n interior points: second-order finite
/// differences, eigenvalue by Sturm-sequence bisection, <r^2> by inverse
/// iteration. U(r) includes the centrifugal term.
inline FdLevel finite_difference_level(const std::function<double(double)>& U, double r_max, int n,
                                       int index)
{
    const double h = r_max / (n + 1);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = 2.0 / (h * h) + U((i + 1) * h);
    const double off = -1.0 / (h * h);
    auto below = [&](double e) {
        int count = 0;
        double q = d[0] - e;
        if (q < 0.0) ++count;
        for (int i = 1; i < n; ++i) {
            if (q == 0.0) q = 1e-300;
            q = d[i] - e - off * off / q;
            if (q < 0.0) ++count;
        }
        return count;
    };
    double lo = -1.0;
    while (below(lo) > index) lo *= 2.0;
    double hi = 1.0;
    while (below(hi) <= index) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (lo + hi);
        (below(m) > index ? hi : lo) = m;
    }
    const double e = 0.5 * (lo + hi);

    const double shift = e + 1e-9 * std::max(1.0, std::abs(e));
    std::vector<double> x(n, 1.0);
    for (int sweep = 0; sweep < 6; ++sweep) {
        std::vector<double> c(n), y(n);
        double denom = d[0] - shift;
        c[0] = off / denom;
        y[0] = x[0] / denom;
        for (int i = 1; i < n; ++i) {
            denom = d[i] - shift - off * c[i - 1];
            c[i] = off / denom;
            y[i] = (x[i] - off * y[i - 1]) / denom;
        }
        for (int i = n - 2; i >= 0; --i) y[i] -= c[i] * y[i + 1];
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = (i + 1) * h;
        num += r * r * x[i] * x[i];
        den += x[i] * x[i];
    }
    return {e, num / den};
}

/// Richardson-extrapolated finite-difference level (errors O(h^2)).
inline FdLevel fd_extrapolated(const std::function<double(double)>& U, double r_max, int n, int index)
{
    const FdLevel a = finite_difference_level(U, r_max, n, index);
    const FdLevel b = finite_difference_level(U, r_max, 2 * n + 1, index);
    return {(4.0 * b.energy - a.energy) / 3.0, (4.0 * b.msr - a.msr) / 3.0};
}

}  // namespace oracle
