#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "radbound/spectrum.hpp"

using namespace radbound;

TEST(Spectrum, OscillatorLevels)
{
    const Potential p = power_law(2.0, 1.0);
    for (int n_r : {0, 1, 2}) {
        for (int ell : {0, 1, 3}) {
            const RadialState s = solve_state(p, n_r, ell);
            const double e = 4.0 * n_r + 2.0 * ell + 3.0;
            EXPECT_NEAR(s.epsilon, e, 1e-8 * e);
            EXPECT_NEAR(s.msr, e / 2.0, 1e-7 * e);  // <V> = E/2
            EXPECT_EQ(s.nodes, n_r);
        }
    }
}

TEST(Spectrum, CoulombLevels)
{
    const Potential p = power_law(-1.0, 1.0);
    for (int n_r : {0, 1}) {
        for (int ell : {0, 1}) {
            const RadialState s = solve_state(p, n_r, ell);
            const double n = n_r + ell + 1.0;
            EXPECT_NEAR(s.epsilon, -1.0 / (4.0 * n * n), 1e-9);
            // <r^2> = n^2 (5 n^2 + 1 - 3 l(l+1)) a^2 / 2 with a = 2.
            const double msr = 2.0 * n * n * (5.0 * n * n + 1.0 - 3.0 * ell * (ell + 1.0));
            EXPECT_NEAR(s.msr, msr, 1e-7 * msr);
        }
    }
    EXPECT_NEAR(-solve_state(p, 0, 0).epsilon * solve_state(p, 0, 0).msr, 3.0, 1e-7);
}

TEST(Spectrum, VirialTheoremForPowerLaws)
{
    for (double p : {1.0, 2.0}) {
        const Potential pot = power_law(p, 1.7);
        const RadialState s = solve_state(pot, 1, 1);
        const Expectations ex = expectations(s, pot);
        EXPECT_NEAR(2.0 * ex.T_mean, p * ex.V_mean, 1e-7 * std::abs(s.energy));
    }
}

TEST(Spectrum, MatchesFiniteDifferenceOracle)
{
    struct Case {
        Potential pot;
        int n_r, ell;
        double r_max;
    };
    const std::vector<Case> cases = {
        {yukawa(2.0, 1.0), 0, 0, 140.0},
        {rational_cubed(2.0, 1.0), 0, 0, 120.0},
        {rational_cubed(10.0, 1.0), 0, 1, 40.0},
        {exp_n(1.0, 20.0, 1.0), 1, 0, 40.0},
        {lj_paired(6.0, 60.0, 1.0), 0, 0, 20.0},
    };
    for (const auto& c : cases) {
        const RadialState s = solve_state(c.pot, c.n_r, c.ell);
        auto U = [&](double r) { return c.pot.reduced(r) + c.ell * (c.ell + 1.0) / (r * r); };
        const oracle::FdLevel fd = oracle::fd_extrapolated(U, c.r_max, 20000, c.n_r);
        EXPECT_NEAR(s.epsilon, fd.energy, 1e-8 * std::max(1.0, std::abs(fd.energy))) << c.pot.describe();
        EXPECT_NEAR(s.msr, fd.msr, 1e-6 * fd.msr) << c.pot.describe();
    }
}

TEST(Spectrum, SquareWellTranscendental)
{
    const RadialState s = solve_state(square_well(100.0, 1.0), 0, 0);
    EXPECT_NEAR(s.epsilon, oracle::square_well_energy(100.0, 1.0), 2e-6 * 92.0);
    EXPECT_NEAR(s.msr, oracle::square_well_msr(100.0, 1.0), 2e-5);
}

TEST(Spectrum, DeepSquareWellLimit)
{
    const double infinite_well = 1.0 / 3.0 - 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
    const RadialState s = solve_state(square_well(1e5, 1.0), 0, 0);
    EXPECT_NEAR(s.msr, infinite_well, 2e-3);
    EXPECT_LT(s.msr, solve_state(square_well(1e3, 1.0), 0, 0).msr);
}

TEST(Spectrum, NodeCountsAndNormalisation)
{
    const Potential p = exp_n(1.0, 40.0, 1.0);
    for (int n_r = 0; n_r < 3; ++n_r) {
        const RadialState s = solve_state(p, n_r, 0);
        EXPECT_EQ(s.nodes, n_r);
        EXPECT_LE(s.norm_defect, 1e-8);
        EXPECT_NEAR(radial_moment(s, 0.0), 1.0, 1e-9);
        EXPECT_NEAR(radial_moment(s, 2.0), s.msr, 1e-9 * s.msr);
    }
}

TEST(Spectrum, GridRefinementWellBound)
{
    SolverConfig fine;
    fine.step /= 2.0;
    fine.phase_step /= 2.0;
    for (const Potential& p : {yukawa(5.0, 1.0), rational_cubed(4.0, 1.0)}) {
        const RadialState a = solve_state(p, 0, 0);
        const RadialState b = solve_state(p, 0, 0, fine);
        EXPECT_NEAR(a.epsilon, b.epsilon, 1e-8 * std::abs(a.epsilon));
        EXPECT_NEAR(a.msr, b.msr, 1e-8 * a.msr);
    }
}

TEST(Spectrum, ScaleInvariantMinusEMsr)
{
    const RadialState ref = solve_state(yukawa(3.0, 1.0), 0, 0);
    for (double R : {0.5, 3.0}) {
        const RadialState s = solve_state(yukawa(3.0, R), 0, 0);
        EXPECT_NEAR(s.epsilon * s.msr, ref.epsilon * ref.msr, 1e-8 * std::abs(ref.epsilon * ref.msr));
        EXPECT_NEAR(s.epsilon, ref.epsilon / (R * R), 1e-8 * std::abs(ref.epsilon) / (R * R));
    }
}

TEST(Spectrum, AbsentStateReportsCount)
{
    try {
        solve_state(yukawa(1.0, 1.0), 0, 0);
        FAIL() << "expected StateAbsentError";
    } catch (const StateAbsentError& e) {
        EXPECT_EQ(e.zero_energy_count(), 0);
    }
    EXPECT_THROW(solve_state(rational_cubed(2.0, 1.0), 1, 0), StateAbsentError);
}

TEST(Spectrum, BoundStateCounts)
{
    EXPECT_EQ(count_bound_states(rational_cubed(1.35, 1.0), 0).count, 1);
    EXPECT_EQ(count_bound_states(rational_cubed(1.3326, 1.0), 0).count, 0);
    EXPECT_EQ(count_bound_states(yukawa(1.7, 1.0), 0).count, 1);
    EXPECT_EQ(count_bound_states(yukawa(1.6, 1.0), 0).count, 0);
    EXPECT_THROW(count_bound_states(power_law(2.0, 1.0), 0), InapplicableError);
}

TEST(Spectrum, CouplingForEnergy)
{
    const CoupledState cs = coupling_for_energy(yukawa(1.0, 1.0), -0.1, 0, 0);
    EXPECT_NEAR(cs.state.epsilon, -0.1, 1e-9);
    EXPECT_NEAR(solve_state(cs.potential, 0, 0).epsilon, -0.1, 1e-8);
}

TEST(Spectrum, InvalidRequests)
{
    EXPECT_THROW(solve_state(yukawa(2.0, 1.0), -1, 0), DomainError);
    EXPECT_THROW(solve_state(yukawa(2.0, 1.0), 0, -1), DomainError);
    SolverConfig bad;
    bad.step = 0.0;
    EXPECT_THROW(solve_state(yukawa(2.0, 1.0), 0, 0, bad), DomainError);
}
