#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "radbound/family_spec.hpp"
#include "radbound/potential.hpp"

using namespace radbound;

TEST(Potential, YukawaValueAndDerivative)
{
    const Potential p = yukawa(2.0, 1.0);
    EXPECT_NEAR(p.eval(1.0), -2.0 * std::exp(-1.0), 1e-15);
    EXPECT_NEAR(p.derivative(1.5), 2.0 * std::exp(-1.5) * 2.5 / 2.25, 1e-14);
}

TEST(Potential, PowerLawOscillator)
{
    const Potential p = power_law(2.0, 3.0);
    EXPECT_DOUBLE_EQ(p.eval(2.0), 12.0);
    EXPECT_DOUBLE_EQ(p.derivative(2.0), 12.0);
    EXPECT_TRUE(p.traits().confining);
    const Potential c = power_law(-1.0, 1.0);
    EXPECT_DOUBLE_EQ(c.eval(4.0), -0.25);
}

TEST(Potential, DerivativesMatchFiniteDifferences)
{
    const std::vector<Potential> pots = {
        yukawa(1.7, 1.3),        rational_cubed(2.0, 0.7), rational_n(7.0, 3.0, 1.0),
        mixed_rep4(6.0, 5.0, 1.0), exp_n(2.0, 4.0, 1.0),    lj_paired(6.0, 60.0, 1.0),
        lj_pair(12.0, 6.0, 40.0, 2.0), w_constant(1.0, 2.0, 1.0),
        wood_saxon(50.0, 1.27 * std::cbrt(10.0), 0.67, nuclear_units(10.0)),
    };
    for (const auto& p : pots) {
        for (double r : {0.6, 1.0, 1.9, 3.1}) {
            const double fd = oracle::central_difference([&](double x) { return p.eval(x); }, r, 1e-5);
            EXPECT_NEAR(p.derivative(r), fd, 1e-6 * std::max(1.0, std::abs(fd))) << p.describe() << " r=" << r;
        }
    }
}

TEST(Potential, WoodSaxonDerivativeAtRadius)
{
    const double R = 3.0, a = 0.67;
    const Potential p = wood_saxon(50.0, R, a, UnitContext::physical(20.7355, "MeV", "fm"));
    const double analytic = 50.0 * std::exp(0.0) / (a * 4.0);
    EXPECT_NEAR(p.derivative(R), analytic, 1e-10);
    EXPECT_NEAR(p.eval(R), -25.0, 1e-12);
}

TEST(Potential, DiscontinuityRejectsDerivative)
{
    const Potential sw = square_well(10.0, 2.0);
    EXPECT_THROW(sw.derivative(2.0), DomainError);
    EXPECT_DOUBLE_EQ(sw.derivative(1.0), 0.0);
    const Potential te = truncated_exp(3.0, 1.0);
    EXPECT_THROW(te.derivative(1.0), DomainError);
    EXPECT_NEAR(te.eval(0.5), -3.0 * std::exp(-0.5), 1e-14);
    EXPECT_DOUBLE_EQ(te.eval(1.5), 0.0);
}

TEST(Potential, InvalidParametersRejected)
{
    EXPECT_THROW(yukawa(-1.0, 1.0), DomainError);
    EXPECT_THROW(yukawa(1.0, 0.0), DomainError);
    EXPECT_THROW(rational_n(2.5, 1.0, 1.0), DomainError);
    EXPECT_THROW(mixed_rep4(4.5, 1.0, 1.0), DomainError);
    EXPECT_THROW(lj_pair(6.0, 12.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(yukawa(1.0, 1.0).eval(0.0), DomainError);
}

TEST(Potential, ScaleCovariance)
{
    for (double lambda : {0.5, 3.0}) {
        const Potential a = rational_cubed(2.0, 1.0);
        const Potential b = rational_cubed(2.0, lambda);
        for (double r : {0.3, 1.0, 2.5}) {
            EXPECT_NEAR(b.eval(lambda * r), a.eval(r) / (lambda * lambda), 1e-14);
        }
    }
}

TEST(Potential, PairedFormExponents)
{
    const Potential p = lj_paired(6.0, 1.0, 1.0);
    const auto& lj = p.as<LjPair>();
    EXPECT_DOUBLE_EQ(lj.p_rep, 10.0);
    EXPECT_DOUBLE_EQ(lj.p_att, 6.0);
    EXPECT_TRUE(lj.is_paired_form());
    EXPECT_FALSE(lj_pair(12.0, 6.0, 1.0, 1.0).as<LjPair>().is_paired_form());
}

TEST(ClassicalRadius, YukawaLargestRoot)
{
    const Potential p = yukawa(2.0, 1.0);
    const double r0 = classical_radius(p, -0.25);
    EXPECT_NEAR(r0, 1.6058119963, 1e-9);
    for (int i = 1; i <= 50; ++i) {
        const double r = r0 * (1.0 + 0.1 * i);
        EXPECT_GT(p.eval(r), -0.25);
    }
}

TEST(ClassicalRadius, PairedFormOuterRoot)
{
    const Potential p = lj_paired(6.0, 60.0, 1.0);
    const double r0 = classical_radius(p, -1.0);
    EXPECT_NEAR(p.eval(r0), -1.0, 1e-9);
    EXPECT_GT(r0, 1.0);
}

TEST(ClassicalRadius, SquareWellJump)
{
    EXPECT_DOUBLE_EQ(classical_radius(square_well(10.0, 2.0), -1.0), 2.0);
    EXPECT_THROW(classical_radius(square_well(10.0, 2.0), -20.0), NoRootError);
    EXPECT_THROW(classical_radius(yukawa(1.0, 1.0), 0.5), DomainError);
}

TEST(Units, NuclearReducedMass)
{
    EXPECT_NEAR(nuclear_units(1.0).kinetic_scale, 2.0 * 20.7355, 1e-12);
    EXPECT_NEAR(nuclear_units(10.0).kinetic_scale, 1.1 * 20.7355, 1e-12);
    EXPECT_THROW(nuclear_units(0.5), std::invalid_argument);
}

TEST(FamilySpec, BuildsEveryFamily)
{
    EXPECT_EQ(make_potential({"yukawa", {{"g", 2.0}}}).family(), "yukawa");
    EXPECT_EQ(make_potential({"rational_cubed", {{"g", 2.0}}}).family(), "rational");
    EXPECT_EQ(make_potential({"lj-paired", {{"n", 6.0}, {"g", 2.0}}}).family(), "lj-pair");
    const Potential ws = make_potential({"wood-saxon", {{"A", 50.0}}});
    EXPECT_EQ(ws.units().energy_unit, "MeV");
    EXPECT_NEAR(ws.eval(1.27 * std::cbrt(50.0)), -25.0, 1e-10);
}

TEST(FamilySpec, RejectsBadSpecs)
{
    EXPECT_THROW(make_potential({"nope", {}}), DomainError);
    EXPECT_THROW(make_potential({"yukawa", {}}), DomainError);
    EXPECT_THROW(make_potential({"yukawa", {{"g", 1.0}, {"q", 2.0}}}), DomainError);
    EXPECT_THROW(make_potential({"rational", {{"n", 2.0}, {"g", 1.0}}}), DomainError);
}
