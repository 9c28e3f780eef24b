#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "radbound/functionals.hpp"

using namespace radbound;

TEST(Functionals, RationalCubedI)
{
    // int x / (1 + x^3) dx = 2 pi / (3 sqrt 3).
    const IntegralFunctionals f = integral_functionals(rational_cubed(1.0, 1.0));
    EXPECT_NEAR(f.I.value, -1.0 + 2.0 * std::numbers::pi / (3.0 * std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(f.I.value, 0.20920, 1e-5);
}

TEST(Functionals, RationalCubedBetaForms)
{
    const double g = 2.0;
    const IntegralFunctionals f = integral_functionals(rational_cubed(g, 1.0));
    const double third = 1.0 / 3.0;
    // int x^3 (1+x^3)^-2 dx = B(4/3, 2/3) / 3, int (1+x^3)^-2 dx = B(1/3, 5/3) / 3.
    const double j = oracle::gamma(4 * third) * oracle::gamma(2 * third) / 3.0;
    const double k = oracle::gamma(third) * oracle::gamma(5 * third) / 3.0;
    EXPECT_NEAR(f.J.value, g * g * j, 1e-10);
    EXPECT_NEAR(f.K.value, g * g * k, 1e-10);
    // int (1+x^3)^-1/2 dx = B(1/3, 1/6) / 3.
    const double b = oracle::gamma(third) * oracle::gamma(0.5 * third) / (3.0 * oracle::gamma(0.5));
    EXPECT_NEAR(f.B.value, b, 1e-10);
}

TEST(Functionals, NumericMatchesClosedForms)
{
    FunctionalOptions numeric;
    numeric.use_analytic = false;
    for (const Potential& p : {rational_cubed(2.0, 1.0), rational_n(7.0, 2.0, 1.0), yukawa(2.0, 1.0),
                               exp_n(2.0, 1.5, 1.0), lj_paired(6.0, 3.0, 1.0),
                               mixed_rep4(6.0, 2.0, 1.0)}) {
        const IntegralFunctionals a = integral_functionals(p);
        const IntegralFunctionals b = integral_functionals(p, numeric);
        for (auto [x, y] : {std::pair{&a.I, &b.I}, std::pair{&a.J, &b.J}, std::pair{&a.B, &b.B},
                            std::pair{&a.K, &b.K}}) {
            ASSERT_EQ(x->finite, y->finite) << p.describe();
            if (x->finite) EXPECT_NEAR(x->value, y->value, 1e-8 * std::max(1.0, std::abs(x->value))) << p.describe();
        }
    }
}

TEST(Functionals, YukawaClosedForms)
{
    const IntegralFunctionals f = integral_functionals(yukawa(2.0, 1.0));
    EXPECT_NEAR(f.I.value, 1.0, 1e-14);
    EXPECT_NEAR(f.J.value, 1.0, 1e-14);
    EXPECT_NEAR(f.B.value, std::sqrt(2.0 * std::numbers::pi), 1e-14);
    EXPECT_FALSE(f.K.finite);
}

TEST(Functionals, DivergenceDetected)
{
    EXPECT_FALSE(integral_functionals(power_law(-1.0, 1.0)).I.finite);
    EXPECT_FALSE(integral_functionals(w_constant(1.0, 1.0, 1.0)).I.finite);
    EXPECT_TRUE(integral_functionals(exp_n(1.0, 1.0, 1.0)).I.finite);
}
