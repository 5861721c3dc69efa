#pragma once

// Thermal-lens fields with the physical constants stripped:
//
//   E_th(r)   = e^{-r^2/2} [Ei(-r^2) - Ei(-r^2/(4t+1))]
//   E_s(rho)  = 2 e^{-2 rho^2} [Ei(4 rho^2/3) - Ei(4 rho^2/(4t+3))]
//
// with Ei the classical exponential integral (delta = 1). The planar
// transform of E_th is compared with E_s up to a fitted amplitude and scale.

#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/expint.hpp"
#include "fourier_eigen/radial_fourier.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace fourier_eigen {

struct LensState {
    double t = 0.0;

    explicit LensState(double time = 0.0) : t(time)
    {
        if (!(t >= 0.0)) {
            detail::raise<DomainError>("LensState", "t must be >= 0");
        }
    }
};

namespace detail {

inline const DeltaExpEvaluator& classical_ei()
{
    static const DeltaExpEvaluator ev{DeltaParam(1.0)};
    return ev;
}

} // namespace detail

inline double e_th(const LensState& state, double r)
{
    if (!(r > 0.0)) {
        detail::raise<DomainError>("e_th", "r must be > 0");
    }
    const auto& ei = detail::classical_ei();
    const double u = r * r;
    return std::exp(-0.5 * u) * (ei.ei(-u) - ei.ei(-u / (4.0 * state.t + 1.0)));
}

inline double e_s(const LensState& state, double rho)
{
    if (!(rho > 0.0)) {
        detail::raise<DomainError>("e_s", "rho must be > 0");
    }
    const auto& ei = detail::classical_ei();
    const double q = rho * rho;
    // e^{-2q} Ei(x) = e^{x - 2q} [e^{-x} Ei(x)], and x <= 4q/3 keeps the exponent negative.
    auto damped = [&](double x) { return std::exp(x - 2.0 * q) * ei.ei_scaled(x); };
    return 2.0 * (damped(4.0 * q / 3.0) - damped(4.0 * q / (4.0 * state.t + 3.0)));
}

inline RadialProfile e_th_profile(const LensState& state)
{
    return {[state](double r) { return e_th(state, r); }, {0.0, 0.0, true}};
}

/// |F_2[e^{-r^2} Ei(r^2)](rho) + pi e^{-rho^2/4} Ei(rho^2/4)|; the profile is f_2.
inline double planar_eigenrelation_residual(double rho, const RadialTransformPlan& plan = RadialTransformPlan(2))
{
    if (!(rho > 0.0)) {
        detail::raise<DomainError>("planar_eigenrelation_residual", "rho must be > 0");
    }
    if (plan.d != 2) {
        detail::raise<PreconditionError>("planar_eigenrelation_residual", "plan must be two-dimensional");
    }
    const RadialEigenfunction f2(2);
    const double transformed = radial_fourier(plan, f_d_profile(f2), rho);
    const double target = pi * detail::classical_ei().ei_scaled(0.25 * rho * rho);
    return std::abs(transformed + target);
}

struct FitReport {
    double amplitude = 0.0;   // c
    double scale = 0.0;       // sigma
    double residual = 0.0;    // relative RMS of T - c E_s(sigma .)
    std::vector<double> rho;
    std::vector<double> transform;
};

/// Fits F_2[E_th](rho) ~ c E_s(sigma rho) over the grid. For fixed sigma the
/// optimal c is linear least squares; sigma is found by a scan plus Brent.
inline FitReport fourier_consistency(const LensState& state, const std::vector<double>& rho_grid,
                                     const RadialTransformPlan& plan = RadialTransformPlan(2))
{
    if (!(state.t > 0.0)) {
        detail::raise<PreconditionError>("fourier_consistency", "t = 0 gives identically zero fields");
    }
    if (rho_grid.empty()) {
        detail::raise<PreconditionError>("fourier_consistency", "rho grid must be nonempty");
    }
    FitReport out;
    out.rho = rho_grid;
    const auto profile = e_th_profile(state);
    double norm = 0.0;
    for (double rho : rho_grid) {
        out.transform.push_back(radial_fourier(plan, profile, rho));
        norm += out.transform.back() * out.transform.back();
    }
    if (norm == 0.0) {
        detail::raise<PreconditionError>("fourier_consistency", "transform vanishes on the grid");
    }

    auto solve = [&](double sigma, double& amplitude) {
        double st = 0.0;
        double ss = 0.0;
        std::vector<double> model(rho_grid.size());
        for (std::size_t i = 0; i < rho_grid.size(); ++i) {
            model[i] = e_s(state, sigma * rho_grid[i]);
            st += model[i] * out.transform[i];
            ss += model[i] * model[i];
        }
        amplitude = (ss > 0.0) ? st / ss : 0.0;
        double sse = 0.0;
        for (std::size_t i = 0; i < rho_grid.size(); ++i) {
            const double e = out.transform[i] - amplitude * model[i];
            sse += e * e;
        }
        return std::sqrt(sse / norm);
    };
    auto objective = [&](double log_sigma) {
        double amplitude = 0.0;
        return solve(std::exp(log_sigma), amplitude);
    };

    constexpr int n = 60;
    const double lo = std::log(0.05);
    const double hi = std::log(5.0);
    const double step = (hi - lo) / n;
    double best_x = lo;
    double best = objective(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + i * step;
        const double v = objective(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    std::uintmax_t iterations = 200;
    const auto [x_min, f_min] =
        boost::math::tools::brent_find_minima(objective, best_x - step, best_x + step, 52, iterations);
    out.scale = std::exp(x_min);
    out.residual = solve(out.scale, out.amplitude);
    return out;
}

} // namespace fourier_eigen
