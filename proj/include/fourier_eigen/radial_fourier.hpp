#pragma once

// d-dimensional Fourier transform of radial profiles, with the convention
// F[f](u) = int e^{-i<u,x>} f(x) dx. For f(x) = f(|x|) and rho = |u|:
//
//   F[f](rho) = (2 pi)^{d/2} int_0^inf f(r) Lambda_nu(rho r) r^{d-1} dr,
//   Lambda_nu(z) = z^{-nu} J_nu(z),  nu = d/2 - 1.
//
// Also the closed-form Gaussian transform and the semi-analytic pieces
// g_hat, h_hat of the regularized family f_d^alpha.

#include "fourier_eigen/bessel.hpp"
#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/eigenfunctions.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace fourier_eigen {

enum class QuadratureMode { adaptive, fixed_grid };

struct RadialTransformPlan {
    int d = 1;
    double truncation_radius = 60.0;   // panels beyond this are fed to the Wynn accelerator
    QuadratureMode quadrature = QuadratureMode::adaptive;
    int grid_points = 4096;            // nodes on [0, split] in fixed-grid mode
    double singularity_split = 1.0;    // [0, split] gets the endpoint-singular rule
    double rel_tol = 1e-10;            // agreement required of the accelerated tail
    int max_tail_panels = 20000;

    explicit RadialTransformPlan(int dimension = 1) : d(dimension) {}

    void validate() const
    {
        if (d < 1) {
            detail::raise<PreconditionError>("RadialTransformPlan", "dimension must be >= 1");
        }
        if (!(singularity_split > 0.0 && truncation_radius > singularity_split)) {
            detail::raise<PreconditionError>("RadialTransformPlan",
                                             "need truncation_radius > singularity_split > 0");
        }
        if (grid_points < 16) {
            detail::raise<PreconditionError>("RadialTransformPlan", "grid_points must be >= 16");
        }
        if (!(rel_tol > 0.0) || max_tail_panels < 8) {
            detail::raise<PreconditionError>("RadialTransformPlan", "bad tail settings");
        }
    }
};

/// Endpoint behaviour of a profile: f(r) ~ r^origin_exponent as r -> 0 and
/// f(r) ~ r^{-decay_exponent} as r -> inf (or faster than any power).
struct ProfileHints {
    double origin_exponent = 0.0;
    double decay_exponent = 2.0;
    bool rapid_decay = false;
};

struct RadialProfile {
    std::function<double(double)> value;
    ProfileHints hints;
};

struct SpectralValue {
    double rho = 0.0;
    double value = 0.0;
};

namespace detail {

inline void check_hints(const RadialTransformPlan& plan, const ProfileHints& hints)
{
    if (!(hints.origin_exponent > -plan.d)) {
        raise<PreconditionError>("radial_fourier", "profile not integrable at the origin in this dimension");
    }
    if (!hints.rapid_decay && !(hints.decay_exponent > 0.5 * (plan.d - 1) - 1.0)) {
        raise<PreconditionError>("radial_fourier", "profile decays too slowly for an oscillatory tail");
    }
}

/// [0, split] as geometric levels of ratio 1/2, each cut into equal Gauss panels.
template <class F>
quad::Estimate graded_fixed(F&& f, double split, int grid_points)
{
    constexpr int levels = 40;
    const int per_level = std::max(1, grid_points / (20 * (levels + 1)));
    quad::Estimate out;
    double hi = split;
    for (int level = 0; level < levels; ++level) {
        const double lo = 0.5 * hi;
        const double width = (hi - lo) / per_level;
        for (int i = 0; i < per_level; ++i) {
            out.value += quad::gauss_panel(f, lo + i * width, lo + (i + 1) * width);
        }
        hi = lo;
    }
    out.value += quad::gauss_panel(f, 0.0, hi);
    return out;
}

} // namespace detail

/// Numerical F[f](rho). The origin panel [0, split] uses tanh-sinh (or graded
/// Gauss panels in fixed-grid mode); beyond it the kernel's zeros delimit panels,
/// summed directly up to truncation_radius and Wynn-accelerated afterwards until
/// three successive accelerated sums agree to rel_tol.
inline quad::Estimate radial_fourier_estimate(const RadialTransformPlan& plan, const RadialProfile& profile,
                                              double rho)
{
    plan.validate();
    detail::check_hints(plan, profile.hints);
    if (rho < 0.0) {
        detail::raise<DomainError>("radial_fourier", "rho must be >= 0");
    }
    const int d = plan.d;
    const double nu = bessel::order_for_dimension(d);
    const double prefactor = std::pow(2.0 * pi, 0.5 * d);
    // The integrand is O(r^{p+d-1}) at the origin, so [0, r_min] carries mass
    // O(1e-20); below r_min the profile itself may overflow (f_d ~ r^{2-d}).
    const double r_min = std::pow(10.0, -20.0 / (profile.hints.origin_exponent + d));
    auto integrand = [&](double r) {
        if (r < r_min) {
            return 0.0;
        }
        const double f = profile.value(r);
        // Decayed-to-zero profiles would otherwise meet an overflowing r^{d-1}.
        return f == 0.0 ? 0.0 : f * bessel::lambda(nu, rho * r) * std::pow(r, d - 1);
    };
    const bool fixed = plan.quadrature == QuadratureMode::fixed_grid;
    const double split = plan.singularity_split;
    const double tol = 0.1 * plan.rel_tol;

    quad::Estimate head = fixed ? detail::graded_fixed(integrand, split, plan.grid_points)
                                : quad::endpoint_singular(integrand, 0.0, split, tol);

    if (rho == 0.0) {
        if (!profile.hints.rapid_decay && !(profile.hints.decay_exponent > d)) {
            detail::raise<DivergenceError>("radial_fourier", "transform at rho = 0 diverges for this profile");
        }
        const auto tail = quad::half_line(integrand, split, tol);
        return {prefactor * (head.value + tail.value), prefactor * (head.error + tail.error)};
    }

    auto panel = [&](double lo, double hi) -> quad::Estimate {
        if (fixed) {
            return {quad::gauss_panel(integrand, lo, hi), 0.0};
        }
        return quad::smooth(integrand, lo, hi, tol);
    };

    // First kernel zero beyond the split.
    int s = 1;
    double lo = split;
    double zero = bessel::zero(nu, s) / rho;
    while (zero <= split) {
        zero = bessel::zero(nu, ++s) / rho;
    }

    quad::Estimate body;
    double l1 = std::abs(head.value);
    while (zero <= plan.truncation_radius) {
        const auto piece = panel(lo, zero);
        body += piece;
        l1 += std::abs(piece.value);
        lo = zero;
        zero = bessel::zero(nu, ++s) / rho;
    }

    // Accelerated tail: partial sums of the alternating panel contributions.
    quad::WynnEpsilon wynn;
    double partial = 0.0;
    double tail_error = 0.0;
    double accelerated[3] = {0.0, 0.0, 0.0};
    for (int n = 0; n < plan.max_tail_panels; ++n) {
        const auto piece = panel(lo, zero);
        partial += piece.value;
        tail_error += piece.error;
        l1 += std::abs(piece.value);
        lo = zero;
        zero = bessel::zero(nu, ++s) / rho;

        accelerated[0] = accelerated[1];
        accelerated[1] = accelerated[2];
        accelerated[2] = wynn.push(partial);
        if (n < 2) {
            continue;
        }
        const double total = std::abs(head.value + body.value + accelerated[2]);
        const double bar = plan.rel_tol * total + 1e-15 * l1;
        const bool settled = std::abs(accelerated[2] - accelerated[1]) <= bar &&
                             std::abs(accelerated[1] - accelerated[0]) <= bar;
        if (settled) {
            const double value = head.value + body.value + accelerated[2];
            const double error = head.error + body.error + tail_error +
                                 std::abs(accelerated[2] - accelerated[1]) + 1e-16 * l1;
            return {prefactor * value, prefactor * error};
        }
    }
    detail::raise<ConvergenceError>("radial_fourier",
                                    "oscillatory tail did not settle within max_tail_panels at rho = " +
                                        std::to_string(rho));
}

inline double radial_fourier(const RadialTransformPlan& plan, const RadialProfile& profile, double rho)
{
    return radial_fourier_estimate(plan, profile, rho).value;
}

// ---------------------------------------------------------------------------
// Profiles of the eigenfunction family

inline RadialProfile gaussian_profile(double a)
{
    if (!(a > 0.0)) {
        detail::raise<DomainError>("gaussian_profile", "a must be > 0");
    }
    return {[a](double r) { return std::exp(-a * r * r); }, {0.0, 0.0, true}};
}

/// Origin exponent of f_d: bounded for d = 1, logarithmic for d = 2 (any
/// negative exponent bounds it), r^{2-d} beyond.
inline double eigen_origin_exponent(int d)
{
    return d == 1 ? 0.0 : (d == 2 ? -0.5 : 2.0 - d);
}

inline RadialProfile f_d_profile(const RadialEigenfunction& fn)
{
    return {[fn](double r) { return fn.f(r); }, {eigen_origin_exponent(fn.dimension()), 2.0, false}};
}

inline RadialProfile phi_d_profile(const RadialEigenfunction& fn)
{
    return {[fn](double r) { return fn.phi(r); }, {eigen_origin_exponent(fn.dimension()), 2.0, false}};
}

inline RadialProfile f_d_alpha_profile(const RegularizedFunction& rf)
{
    return {[rf](double r) { return rf(r); }, {eigen_origin_exponent(rf.base().dimension()), 0.0, true}};
}

// ---------------------------------------------------------------------------
// Closed forms and the semi-analytic transforms

/// F[e^{-a r^2}](rho) = (pi/a)^{d/2} exp(-rho^2 / (4a)).
inline double gaussian_transform(double a, int d, double rho)
{
    if (!(a > 0.0)) {
        detail::raise<DomainError>("gaussian_transform", "a must be > 0");
    }
    return std::pow(pi / a, 0.5 * d) * std::exp(-rho * rho / (4.0 * a));
}

namespace detail {

inline void check_alpha(int d, double alpha, double rho, const char* where)
{
    if (d < 1) {
        raise<DomainError>(where, "dimension must be >= 1");
    }
    if (alpha < 0.0) {
        raise<DomainError>(where, "alpha must be >= 0");
    }
    if (rho < 0.0) {
        raise<DomainError>(where, "rho must be >= 0");
    }
}

} // namespace detail

/// Transform of h_d^alpha(r) = r^{2-d} e^{-(1+alpha) r^2} H^(delta)(r^2):
///   pi^{d/2} int_1^inf (1+alpha+t)^{-d/2} t^{-delta} exp(-rho^2 / (4(1+alpha+t))) dt.
/// With s = 1/t the weight s^{d/2+delta-2} is identically 1, leaving a smooth
/// integrand on [0, 1].
inline double h_hat_alpha(int d, double alpha, double rho)
{
    detail::check_alpha(d, alpha, rho, "h_hat_alpha");
    const double c = 1.0 + alpha;
    const double q = 0.25 * rho * rho;
    auto integrand = [=](double s) {
        const double w = 1.0 + c * s;
        return std::pow(w, -0.5 * d) * std::exp(-q * s / w);
    };
    return std::pow(pi, 0.5 * d) * quad::smooth(integrand, 0.0, 1.0, 1e-14).value;
}

/// The alpha = 0 value through s = t/(1+t): pi^{d/2} e^{-rho^2/4} int_{1/2}^1 e^{rho^2 s/4} s^{-delta} ds.
inline double h_hat_limit_form(int d, double rho)
{
    detail::check_alpha(d, 0.0, rho, "h_hat_limit_form");
    const double delta = 2.0 - 0.5 * d;
    const double q = 0.25 * rho * rho;
    auto integrand = [=](double s) { return std::exp(q * (s - 1.0)) * std::pow(s, -delta); };
    return std::pow(pi, 0.5 * d) * quad::smooth(integrand, 0.5, 1.0, 1e-14).value;
}

/// pi^{d/2} int_1^inf (1+t)^{-d/2} t^{-delta} dt, a bound on |h_hat_alpha| for all alpha, rho >= 0.
inline double h_hat_uniform_bound(int d)
{
    const double delta = 2.0 - 0.5 * d;
    const double integral = (delta == 1.0) ? std::log(2.0)
                                           : (1.0 - std::pow(2.0, delta - 1.0)) / (1.0 - delta);
    return std::pow(pi, 0.5 * d) * integral;
}

/// The g_hat integrand y^{-delta} [phi_A(-y) - phi_A(y)], phi_A(y) = (1+y)^{-d/2} e^{-A/(1+y)},
/// A = rho^2 / (4(1+alpha)). Below y = 1e-4 the difference is fused as
/// e^{L(y)} expm1(L(-y) - L(y)) with L(-y) - L(y) = d atanh(y) - 2Ay/(1-y^2).
inline double g_hat_integrand(int d, double alpha, double rho, double y)
{
    const double big_a = rho * rho / (4.0 * (1.0 + alpha));
    const double half_d = 0.5 * d;
    const double delta = 2.0 - half_d;
    auto log_phi = [=](double v) { return -half_d * std::log1p(v) - big_a / (1.0 + v); };
    // Returned as y^{1-delta} (bracket / y) so tiny y cannot overflow y^{-delta}.
    double slope;
    if (y < 1e-100) {
        slope = std::exp(-big_a) * (d - 2.0 * big_a);
    } else if (y < 1e-4) {
        const double gap = d * std::atanh(y) - 2.0 * big_a * y / (1.0 - y * y);
        slope = std::exp(log_phi(y)) * std::expm1(gap) / y;
    } else {
        slope = (std::exp(log_phi(-y)) - std::exp(log_phi(y))) / y;
    }
    return std::pow(y, 1.0 - delta) * slope;
}

/// Transform of g_d^alpha(r) = r^{2-d} e^{-(1+alpha) r^2} G^(delta)(r^2):
///   pi^{d/2}/(1+alpha) int_0^{1/(1+alpha)} g_hat_integrand dy.
inline double g_hat_alpha(int d, double alpha, double rho)
{
    detail::check_alpha(d, alpha, rho, "g_hat_alpha");
    if (alpha == 0.0 && rho == 0.0) {
        detail::raise<DivergenceError>("g_hat_alpha", "alpha = 0 requires rho > 0");
    }
    auto integrand = [=](double y) { return y == 0.0 ? 0.0 : g_hat_integrand(d, alpha, rho, y); };
    const double upper = 1.0 / (1.0 + alpha);
    const auto est = quad::endpoint_singular(integrand, 0.0, upper, 1e-13);
    return std::pow(pi, 0.5 * d) / (1.0 + alpha) * est.value;
}

/// F[f_d^alpha](rho) = g_hat_alpha - h_hat_alpha.
inline double f_hat_alpha(int d, double alpha, double rho)
{
    return g_hat_alpha(d, alpha, rho) - h_hat_alpha(d, alpha, rho);
}

/// The alpha -> 0 limit: -pi^{d/2} f_d(rho/2). At rho = 0 only d = 1 is finite (f_1(0+) = -2).
inline double limit_f_hat(int d, double rho)
{
    if (rho < 0.0) {
        detail::raise<DomainError>("limit_f_hat", "rho must be >= 0");
    }
    const double scale = -std::pow(pi, 0.5 * d);
    if (rho == 0.0) {
        if (d == 1) {
            return scale * -2.0;
        }
        detail::raise<DivergenceError>("limit_f_hat", "f_d is singular at the origin for d >= 2");
    }
    return scale * RadialEigenfunction(d).f(0.5 * rho);
}

/// If F[f] = lambda f(beta .) then f(sqrt(beta) .) is an eigenfunction with eigenvalue lambda beta^{-d/2}.
inline double scaling_eigen(double lambda, double beta, int d)
{
    if (!(beta > 0.0)) {
        detail::raise<DomainError>("scaling_eigen", "beta must be > 0");
    }
    return lambda * std::pow(beta, -0.5 * d);
}

/// The eigenvalue of phi_d: -(2 pi)^{d/2}.
inline double eigenvalue(int d) { return scaling_eigen(-std::pow(pi, 0.5 * d), 0.5, d); }

} // namespace fourier_eigen
