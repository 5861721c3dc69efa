#include "fourier_eigen/eigenfunctions.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace fe = fourier_eigen;

TEST(RadialEigenfunction, MatchesOracleValues)
{
    for (const auto& row : oracle::radial) {
        const fe::RadialEigenfunction fn(row.d);
        SCOPED_TRACE(testing::Message() << "d=" << row.d << " r=" << row.r);
        // f_6(1) = 0 exactly, so the tolerance carries an absolute floor.
        EXPECT_NEAR(fn.f(row.r), row.f, 1e-11 * std::abs(row.f) + 1e-14);
        EXPECT_NEAR(fn.phi(row.r), row.phi, 1e-11 * std::abs(row.phi) + 1e-14);
    }
    EXPECT_NEAR(fe::phi_d(fe::RadialEigenfunction(2), 1.0), oracle::phi2_at_one, 1e-14);
}

TEST(RadialEigenfunction, ElementaryCases)
{
    const fe::RadialEigenfunction f4(4);
    const fe::RadialEigenfunction f6(6);
    for (double r : {0.2, 1.0, 3.0}) {
        const double u = r * r;
        EXPECT_NEAR(f4.f(r), (1.0 - 2.0 * std::exp(-u)) / u, 1e-13 / u);
        EXPECT_NEAR(f4.phi(r), (1.0 - 2.0 * std::exp(-0.5 * u)) / u, 1e-13 / u);
        EXPECT_NEAR(f6.f(r), (u - 1.0) / (u * u), 1e-12 / (u * u));
    }
}

TEST(RadialEigenfunction, WeightedFormAvoidsOverflow)
{
    const fe::RadialEigenfunction fn(8);
    for (double r : {1e-3, 0.5, 2.0}) {
        EXPECT_NEAR(fn.f_weighted(r), std::pow(r, 7) * fn.f(r), 1e-12 * std::abs(fn.f_weighted(r)));
    }
    EXPECT_TRUE(std::isfinite(fn.f_weighted(1e-60)));
}

TEST(RadialEigenfunction, PhiIsRescaledF)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> r_dist(0.05, 12.0);
    for (int d = 1; d <= 8; ++d) {
        const fe::RadialEigenfunction fn(d);
        for (int i = 0; i < 10; ++i) {
            const double r = r_dist(rng);
            EXPECT_LE(fe::phi_from_f_consistency(fn, r), 1e-12 * std::abs(fn.phi(r)) + 1e-15) << d << " " << r;
        }
    }
}

TEST(RadialEigenfunction, SignChangeRadius)
{
    for (const auto& row : oracle::sign_change) {
        const fe::RadialEigenfunction fn(row.d);
        const double r0 = fn.sign_change_radius();
        EXPECT_NEAR(r0, row.r0, 1e-12) << row.d;
        EXPECT_LT(fn.f(0.9 * r0), 0.0);
        EXPECT_GT(fn.f(1.1 * r0), 0.0);
    }
}

TEST(RadialEigenfunction, Asymptotics)
{
    for (int d = 1; d <= 8; ++d) {
        const fe::RadialEigenfunction fn(d);
        EXPECT_NEAR(fn.f(100.0) * 1e4, 1.0, 0.01) << d;
        if (d >= 3) {
            const double r = 1e-5;
            EXPECT_NEAR(fn.f(r) * std::pow(r, d - 2) / -std::tgamma(1.0 - fn.delta()), 1.0, 0.01) << d;
        }
    }
    const fe::RadialEigenfunction f1(1);
    EXPECT_NEAR(f1.f(1e-5), -2.0, 1e-3);
    // 2 ln r dominates f_2 only when |ln r| is large.
    const fe::RadialEigenfunction f2(2);
    EXPECT_NEAR(f2.f(1e-13) / (2.0 * std::log(1e-13)), 1.0, 0.01);
    EXPECT_NEAR(f2.f(1e-4), 2.0 * std::log(1e-4) + 0.57721566490153286, 1e-6);
}

TEST(RadialEigenfunction, RegularizedFamily)
{
    const fe::RadialEigenfunction fn(4);
    const fe::RegularizedFunction rf(fn, 1.0);
    EXPECT_NEAR(fe::f_d_alpha(rf, 1.0), std::exp(-1.0) * (1.0 - 2.0 * std::exp(-1.0)), 1e-14);
    EXPECT_DOUBLE_EQ(rf.alpha(), 1.0);
    EXPECT_THROW(fe::RegularizedFunction(fn, 0.0), fe::DomainError);
    EXPECT_THROW(fe::RegularizedFunction(fn, -1.0), fe::DomainError);
}

TEST(RadialEigenfunction, RejectsBadArguments)
{
    EXPECT_THROW(fe::RadialEigenfunction(0), fe::DomainError);
    const fe::RadialEigenfunction fn(3);
    EXPECT_THROW(static_cast<void>(fn.f(0.0)), fe::DomainError);
    EXPECT_THROW(static_cast<void>(fn.phi(-1.0)), fe::DomainError);
}

TEST(LpMembership, TruthTable)
{
    for (int p = 1; p <= 10; ++p) {
        EXPECT_TRUE(fe::lp_membership(1, p).member) << p;
        EXPECT_EQ(fe::lp_membership(2, p).member, p >= 2) << p;
        EXPECT_EQ(fe::lp_membership(3, p).member, p == 2) << p;
        for (int d = 4; d <= 8; ++d) {
            EXPECT_FALSE(fe::lp_membership(d, p).member) << d << " " << p;
        }
    }
    EXPECT_EQ(fe::lp_membership(2, 1).reason, fe::LpReason::infinity_divergence);
    EXPECT_EQ(fe::lp_membership(3, 3).reason, fe::LpReason::origin_divergence);
    EXPECT_EQ(fe::lp_membership(5, 2).reason, fe::LpReason::both);
    EXPECT_EQ(fe::to_string(fe::LpReason::origin_divergence), "origin-divergence");
    EXPECT_THROW(fe::lp_membership(1, 0), fe::DomainError);
}

TEST(LpMembership, ProbeAgreesWithExactVerdict)
{
    for (int d = 1; d <= 5; ++d) {
        for (int p = 1; p <= 5; ++p) {
            const auto exact = fe::lp_membership(d, p);
            const auto probe = fe::integrability_probe(d, p);
            EXPECT_EQ(probe.verdict.member, exact.member) << d << " " << p;
            EXPECT_EQ(probe.verdict.reason, exact.reason) << d << " " << p;
            EXPECT_GT(probe.body, 0.0);
        }
    }
}

TEST(TemperedConstant, MatchesOracle)
{
    for (const auto& row : oracle::tempered) {
        EXPECT_NEAR(fe::tempered_constant(fe::RadialEigenfunction(row.d)), row.c, 1e-9 * row.c) << row.d;
    }
}

TEST(TemperedConstant, DampedGapShrinksWithAlpha)
{
    const fe::RadialEigenfunction fn(5);
    double previous = HUGE_VAL;
    for (double alpha : {1.0, 0.1, 0.01, 0.001}) {
        const double c = fe::tempered_constant_alpha(fn, alpha);
        EXPECT_LT(c, previous);
        EXPECT_GT(c, 0.0);
        previous = c;
    }
    EXPECT_LT(previous, 0.01 * fe::tempered_constant(fn));
}
