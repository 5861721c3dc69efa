#include "fourier_eigen/thermal_lens.hpp"
#include "fourier_eigen/verify.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace fe = fourier_eigen;

TEST(ThermalLens, FieldsMatchOracle)
{
    for (const auto& row : oracle::lens) {
        const fe::LensState state(row.t);
        EXPECT_NEAR(fe::e_th(state, row.x), row.e_th, 1e-12 * std::abs(row.e_th)) << row.t << " " << row.x;
        EXPECT_NEAR(fe::e_s(state, row.x), row.e_s, 1e-12 * std::abs(row.e_s)) << row.t << " " << row.x;
    }
}

TEST(ThermalLens, FieldIsPositiveAfterHeating)
{
    for (double t : {0.1, 1.0, 10.0}) {
        const fe::LensState state(t);
        for (double r : {0.05, 0.5, 2.0, 5.0}) {
            EXPECT_GT(fe::e_th(state, r), 0.0) << t << " " << r;
        }
    }
    EXPECT_EQ(fe::e_th(fe::LensState(0.0), 1.0), 0.0);
}

TEST(ThermalLens, PlanarSeedIdentity)
{
    for (double rho : {0.5, 1.0, 2.0, 4.0}) {
        EXPECT_LT(fe::planar_eigenrelation_residual(rho), 1e-6) << rho;
    }
}

TEST(ThermalLens, SpectrumIsHalfScaledFarField)
{
    // F_2[E_th](rho) = pi E_s(rho / 2) exactly, so the fit recovers c = pi and sigma = 1/2.
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const fe::LensState state(t);
        const auto fit = fe::fourier_consistency(state, fe::log_grid(0.2, 6.0, 16));
        EXPECT_LT(fit.residual, 1e-4) << t;
        EXPECT_NEAR(fit.amplitude, fe::pi, 1e-5) << t;
        EXPECT_NEAR(fit.scale, 0.5, 1e-5) << t;
        for (std::size_t i = 0; i < fit.rho.size(); ++i) {
            const double expected = fe::pi * fe::e_s(state, 0.5 * fit.rho[i]);
            EXPECT_NEAR(fit.transform[i], expected, 1e-8 * std::abs(expected) + 1e-12);
        }
    }
}

TEST(ThermalLens, RejectsDegenerateInput)
{
    EXPECT_THROW(fe::LensState(-1.0), fe::DomainError);
    EXPECT_THROW(fe::e_th(fe::LensState(1.0), 0.0), fe::DomainError);
    EXPECT_THROW(fe::e_s(fe::LensState(1.0), -2.0), fe::DomainError);
    EXPECT_THROW(fe::fourier_consistency(fe::LensState(0.0), {1.0}), fe::PreconditionError);
    EXPECT_THROW(fe::fourier_consistency(fe::LensState(1.0), {}), fe::PreconditionError);
    EXPECT_THROW(fe::planar_eigenrelation_residual(1.0, fe::RadialTransformPlan(3)), fe::PreconditionError);
}
