#include <cmath>

#include <gtest/gtest.h>

#include "radbound/shape_scan.hpp"

using namespace radbound;

namespace {

// Dense log-grid maximum of f, independent of the library scan.
double dense_max(const std::function<double(double)>& f, double lo, double hi, double sign = 1.0)
{
    double best = -1e300;
    const int n = 400000;
    for (int i = 0; i <= n; ++i) {
        const double x = lo * std::pow(hi / lo, static_cast<double>(i) / n);
        best = std::max(best, sign * f(x));
    }
    return sign * best;
}

}  // namespace

TEST(ShapeScan, RationalCubedSupremaMatchDenseScan)
{
    const double g = 2.0;
    const ShapeScan s = shape_scan(rational_cubed(g, 1.0));
    auto x2v = [](double x) { return x * x / (1.0 + x * x * x); };
    auto w = [](double x) {
        const double d = 1.0 + x * x * x;
        return x * x * (6.0 + 3.0 * x * x * x) / (d * d);
    };
    EXPECT_NEAR(s.sup_neg_r2v.value, g * dense_max(x2v, 1e-3, 1e3), 1e-9);
    EXPECT_NEAR(s.sup_neg_r2v.location, std::cbrt(2.0), 1e-8);
    EXPECT_NEAR(s.sup_w.value, g * dense_max(w, 1e-3, 1e3), 1e-9);
    EXPECT_TRUE(s.w_nonnegative);
    EXPECT_NEAR(s.inf_w.value, 0.0, 1e-12);
}

TEST(ShapeScan, LPlusForRationalCubed)
{
    EXPECT_NEAR(l_plus(rational_cubed(5.0, 1.0)), std::sqrt(5.0 * std::pow(2.0, 2.0 / 3.0) / 3.0) - 0.5,
                1e-10);
    EXPECT_NEAR(l_plus(rational_cubed(5.0, 1.0)), 1.1266, 1e-4);
}

TEST(ShapeScan, YukawaWExtremaFromClosedForm)
{
    // W/g = x e^{-x} (5 - x); stationary where x^2 - 7x + 5 = 0.
    const ShapeScan s = shape_scan(yukawa(1.0, 1.0));
    auto w = [](double x) { return x * std::exp(-x) * (5.0 - x); };
    const double x_max = (7.0 - std::sqrt(29.0)) / 2.0;
    const double x_min = (7.0 + std::sqrt(29.0)) / 2.0;
    EXPECT_NEAR(s.sup_w.value, w(x_max), 1e-9);
    EXPECT_NEAR(s.inf_w.value, w(x_min), 1e-9);
    EXPECT_NEAR(s.inf_w.location, x_min, 1e-5);
    EXPECT_FALSE(s.w_nonnegative);
    EXPECT_NEAR(s.sup_neg_r2v.value, std::exp(-1.0), 1e-10);
}

TEST(ShapeScan, AnalyticAndScannedAgree)
{
    ScanConfig numeric;
    numeric.use_analytic = false;
    for (const Potential& p : {rational_cubed(3.0, 1.0), yukawa(2.0, 1.0), lj_paired(6.0, 10.0, 1.0),
                               exp_n(2.0, 3.0, 1.0), mixed_rep4(6.0, 2.0, 1.0)}) {
        const ShapeScan a = shape_scan(p);
        const ShapeScan b = shape_scan(p, numeric);
        EXPECT_NEAR(a.sup_neg_r2v.value, b.sup_neg_r2v.value, 1e-8) << p.describe();
        EXPECT_NEAR(a.sup_w.value, b.sup_w.value, 1e-8) << p.describe();
        EXPECT_NEAR(a.inf_w.value, b.inf_w.value, 1e-8) << p.describe();
    }
}

TEST(ShapeScan, CrossingInequality)
{
    for (const Potential& p : {rational_cubed(3.0, 1.0), yukawa(2.0, 1.0), lj_pair(5.0, 3.0, 10.0, 1.0),
                               exp_n(1.0, 3.0, 1.0), rational_n(10.0, 2.0, 1.0),
                               w_constant(1.0, 1.0, 1.0)}) {
        const ShapeScan s = shape_scan(p);
        ASSERT_TRUE(s.sup_neg_r2v.finite && s.sup_w.finite) << p.describe();
        EXPECT_GE(s.sup_w.value, 4.0 * s.sup_neg_r2v.value - 1e-9) << p.describe();
    }
    // W = 4 g x^-8 for the paired n = 6 form: no finite supremum.
    EXPECT_FALSE(shape_scan(lj_paired(6.0, 10.0, 1.0)).sup_w.finite);
}

TEST(ShapeScan, ScaleInvariantValues)
{
    const ShapeScan a = shape_scan(yukawa(2.0, 1.0));
    for (double R : {0.5, 3.0}) {
        const ShapeScan b = shape_scan(yukawa(2.0, R));
        EXPECT_NEAR(b.sup_w.value, a.sup_w.value, 1e-10);
        EXPECT_NEAR(b.sup_neg_r2v.value, a.sup_neg_r2v.value, 1e-10);
        EXPECT_NEAR(b.inf_w.location, R * a.inf_w.location, 1e-6 * R);
    }
}

TEST(ShapeScan, JumpsDisableW)
{
    const ShapeScan s = shape_scan(square_well(10.0, 1.0));
    EXPECT_FALSE(s.w_available);
    EXPECT_NEAR(s.sup_neg_r2v.value, 10.0, 1e-9);
}

TEST(ShapeScan, WConstantIsFlat)
{
    const ShapeScan s = shape_scan(w_constant(1.0, 2.0, 1.0));
    EXPECT_NEAR(s.sup_w.value, 8.0, 1e-12);
    EXPECT_NEAR(s.inf_w.value, 8.0, 1e-12);
}
