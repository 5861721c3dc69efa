#pragma once

#include <cmath>
#include <numbers>

namespace fourier_eigen {

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;  // 0.57721566490153286...

/// Surface area of the unit sphere S^{d-1} in R^d: 2 pi^{d/2} / Gamma(d/2).
inline double sphere_area(int d)
{
    const double half = 0.5 * d;
    return 2.0 * std::pow(pi, half) / std::tgamma(half);
}

} // namespace fourier_eigen
