#include "fourier_eigen/bessel.hpp"
#include "fourier_eigen/radial_fourier.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace fe = fourier_eigen;

TEST(Bessel, MatchesOracle)
{
    for (const auto& row : oracle::bessel) {
        EXPECT_NEAR(fe::bessel::j(row.nu, row.x), row.j, 1e-13 * std::abs(row.j) + 1e-300) << row.nu << " " << row.x;
    }
    for (const auto& row : oracle::bessel_zero) {
        EXPECT_NEAR(fe::bessel::zero(row.nu, row.s), row.z, 1e-12 * row.z) << row.nu << " " << row.s;
    }
    EXPECT_NEAR(fe::bessel::zero(0.5, 3), 3.0 * fe::pi, 1e-14);
    EXPECT_NEAR(fe::bessel::zero(-0.5, 3), 2.5 * fe::pi, 1e-14);
}

TEST(Bessel, ScaledKernelSmallArgument)
{
    // Lambda_nu(z) = z^{-nu} J_nu(z) -> 1 / (2^nu Gamma(nu + 1)) at 0.
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
        const double limit = 1.0 / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
        EXPECT_NEAR(fe::bessel::lambda(nu, 0.0), limit, 1e-15 * limit);
        EXPECT_NEAR(fe::bessel::lambda(nu, 2e-3), fe::bessel::j(nu, 2e-3) * std::pow(2e-3, -nu), 1e-14 * limit);
    }
}

TEST(RadialFourier, GaussianClosedForm)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> a_dist(0.3, 3.0);
    std::uniform_real_distribution<double> rho_dist(0.0, 4.0);
    for (int d = 1; d <= 8; ++d) {
        const fe::RadialTransformPlan plan(d);
        for (int i = 0; i < 5; ++i) {
            const double a = a_dist(rng);
            // keep exp(-rho^2/4a) far above the roundoff floor of the quadrature
            const double rho = rho_dist(rng) * std::sqrt(a);
            const double expected = fe::gaussian_transform(a, d, rho);
            EXPECT_NEAR(fe::radial_fourier(plan, fe::gaussian_profile(a), rho), expected, 1e-9 * expected)
                << d << " " << a << " " << rho;
        }
    }
}

TEST(RadialFourier, EigenRelationRegularCases)
{
    for (int d = 1; d <= 3; ++d) {
        const fe::RadialTransformPlan plan(d);
        const fe::RadialEigenfunction fn(d);
        const auto profile = fe::phi_d_profile(fn);
        for (double rho : {0.2, 0.7, 1.5, 4.0, 10.0}) {
            const double phi = fn.phi(rho);
            EXPECT_NEAR(fe::radial_fourier(plan, profile, rho), fe::eigenvalue(d) * phi, 1e-8 * (1.0 + std::abs(phi)))
                << d << " " << rho;
        }
    }
}

TEST(RadialFourier, FixedGridModeAgrees)
{
    fe::RadialTransformPlan plan(3);
    plan.quadrature = fe::QuadratureMode::fixed_grid;
    const fe::RadialEigenfunction fn(3);
    for (double rho : {0.5, 3.0}) {
        const double expected = fe::limit_f_hat(3, rho);
        EXPECT_NEAR(fe::radial_fourier(plan, fe::f_d_profile(fn), rho), expected, 1e-7 * std::abs(expected));
    }
}

TEST(RadialFourier, DampedTransformMatchesOracle)
{
    for (const auto& row : oracle::damped_transform) {
        const fe::RegularizedFunction rf(fe::RadialEigenfunction(row.d), row.alpha);
        const fe::RadialTransformPlan plan(row.d);
        const double direct = fe::radial_fourier(plan, fe::f_d_alpha_profile(rf), row.rho);
        EXPECT_NEAR(direct, row.value, 1e-9 * std::abs(row.value)) << row.d << " " << row.alpha << " " << row.rho;
        EXPECT_NEAR(fe::f_hat_alpha(row.d, row.alpha, row.rho), row.value, 1e-9 * std::abs(row.value));
    }
}

TEST(RadialFourier, DecompositionAgreesWithDirectTransform)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> log_alpha(std::log(0.05), std::log(2.0));
    std::uniform_real_distribution<double> rho_dist(0.3, 6.0);
    for (int d : {2, 3, 5, 7}) {
        const fe::RadialTransformPlan plan(d);
        for (int i = 0; i < 3; ++i) {
            const double alpha = std::exp(log_alpha(rng));
            const double rho = rho_dist(rng);
            const fe::RegularizedFunction rf(fe::RadialEigenfunction(d), alpha);
            const double direct = fe::radial_fourier(plan, fe::f_d_alpha_profile(rf), rho);
            const double split = fe::f_hat_alpha(d, alpha, rho);
            EXPECT_NEAR(direct, split, 1e-7 * std::abs(split)) << d << " " << alpha << " " << rho;
        }
    }
}

TEST(RadialFourier, HHatProperties)
{
    for (int d = 1; d <= 8; ++d) {
        const double bound = fe::h_hat_uniform_bound(d);
        EXPECT_NEAR(fe::h_hat_alpha(d, 0.0, 0.0), bound, 1e-12 * bound) << d;
        for (double rho : {0.5, 2.0, 7.0}) {
            EXPECT_NEAR(fe::h_hat_alpha(d, 0.0, rho), fe::h_hat_limit_form(d, rho), 1e-12 * bound);
            for (double alpha : {0.01, 1.0}) {
                const double h = fe::h_hat_alpha(d, alpha, rho);
                EXPECT_GT(h, 0.0);
                EXPECT_LE(h, bound);
            }
        }
    }
    EXPECT_NEAR(fe::h_hat_uniform_bound(2), fe::pi * std::log(2.0), 1e-15);
}

TEST(RadialFourier, AlphaLimitConvergesMonotonically)
{
    const double target = fe::limit_f_hat(3, 2.0);
    double previous = HUGE_VAL;
    for (int e = 1; e <= 5; ++e) {
        const double gap = std::abs(fe::f_hat_alpha(3, std::pow(10.0, -e), 2.0) - target) / std::abs(target);
        EXPECT_LT(gap, previous) << e;
        previous = gap;
    }
    EXPECT_LT(previous, 1e-4);
}

TEST(RadialFourier, LimitAndEigenvalue)
{
    EXPECT_NEAR(fe::limit_f_hat(1, 0.0), 2.0 * std::sqrt(fe::pi), 1e-15);
    EXPECT_THROW(fe::limit_f_hat(2, 0.0), fe::DivergenceError);
    EXPECT_NEAR(fe::limit_f_hat(4, 2.0), -fe::pi * fe::pi * (1.0 - 2.0 * std::exp(-1.0)), 1e-13);
    EXPECT_NEAR(fe::eigenvalue(2), -2.0 * fe::pi, 1e-14);
    EXPECT_NEAR(fe::scaling_eigen(3.0, 4.0, 2), 0.75, 1e-15);
    EXPECT_THROW(fe::scaling_eigen(1.0, 0.0, 2), fe::DomainError);
}

TEST(RadialFourier, RejectsBadInput)
{
    fe::RadialTransformPlan plan(2);
    const auto g = fe::gaussian_profile(1.0);
    EXPECT_THROW(fe::radial_fourier(plan, g, -1.0), fe::DomainError);
    plan.grid_points = 4;
    EXPECT_THROW(fe::radial_fourier(plan, g, 1.0), fe::PreconditionError);
    const fe::RadialTransformPlan plan3(3);
    EXPECT_THROW(fe::radial_fourier(plan3, fe::f_d_profile(fe::RadialEigenfunction(3)), 0.0), fe::DivergenceError);
    EXPECT_THROW(fe::g_hat_alpha(3, 0.0, 0.0), fe::DivergenceError);
    EXPECT_THROW(fe::h_hat_alpha(3, -0.1, 1.0), fe::DomainError);
    EXPECT_THROW(fe::gaussian_profile(0.0), fe::DomainError);
}
