#pragma once

// Bessel kernels for the radial Fourier transform in R^d. Only the orders
// nu = d/2 - 1 for d = 1..8 occur. The two orders reached by d = 1 and d = 3
// reduce to trigonometric closed forms; the rest go through Boost.Math.

#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>

namespace fourier_eigen::bessel {

/// Order of the radial kernel in dimension d.
inline double order_for_dimension(int d) { return 0.5 * d - 1.0; }

/// J_nu(x) for x >= 0.
inline double j(double nu, double x)
{
    if (x < 0.0) {
        fourier_eigen::detail::raise<DomainError>("bessel::j", "negative argument");
    }
    if (nu == -0.5) {
        return x == 0.0 ? HUGE_VAL : std::sqrt(2.0 / (pi * x)) * std::cos(x);
    }
    if (nu == 0.5) {
        return std::sqrt(2.0 / (pi * x)) * std::sin(x);
    }
    return boost::math::cyl_bessel_j(nu, x);
}

/// Lambda_nu(z) = z^{-nu} J_nu(z), entire in z and equal to 1 / (2^nu Gamma(nu + 1)) at 0.
/// The radial transform kernel is (2 pi)^{d/2} Lambda_nu(rho r).
inline double lambda(double nu, double z)
{
    if (nu == -0.5) {
        return std::sqrt(2.0 / pi) * std::cos(z);
    }
    if (nu == 0.5) {
        // sin(z)/z with the removable point handled by the series.
        const double sinc = (std::abs(z) < 1e-4) ? 1.0 - z * z / 6.0 : std::sin(z) / z;
        return std::sqrt(2.0 / pi) * sinc;
    }
    const double lead = 1.0 / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
    if (std::abs(z) < 1e-3) {
        const double q = 0.25 * z * z;
        return lead * (1.0 - q / (nu + 1.0) + q * q / (2.0 * (nu + 1.0) * (nu + 2.0)));
    }
    return boost::math::cyl_bessel_j(nu, z) * std::pow(z, -nu);
}

/// s-th positive zero of J_nu (s >= 1).
inline double zero(double nu, int s)
{
    if (s < 1) {
        fourier_eigen::detail::raise<DomainError>("bessel::zero", "zero index must be >= 1");
    }
    if (nu == -0.5) {
        return (s - 0.5) * pi;
    }
    if (nu == 0.5) {
        return s * pi;
    }
    return boost::math::cyl_bessel_j_zero(nu, s);
}

} // namespace fourier_eigen::bessel
