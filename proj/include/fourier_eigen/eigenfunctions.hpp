#pragma once

// The radial eigenfunction family phi_d, the working family f_d and the
// Gaussian-damped family f_d^alpha, plus their integrability classification.
//
//   f_d(r)   = r^{2-d} e^{-r^2} Ei^(delta)(r^2),      delta = 2 - d/2
//   phi_d(r) = (sqrt 2)^{2-d} f_d(r / sqrt 2)
//   f_d^a(r) = f_d(r) e^{-a r^2}

#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/expint.hpp"
#include "fourier_eigen/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>
#include <utility>

namespace fourier_eigen {

class RadialEigenfunction {
public:
    explicit RadialEigenfunction(int d, EvalOptions options = {})
        : d_(checked_dimension(d)), delta_(2.0 - 0.5 * d), ei_(DeltaParam(delta_), options)
    {
    }

    [[nodiscard]] int dimension() const { return d_; }
    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] const DeltaExpEvaluator& evaluator() const { return ei_; }

    /// f_d(r), formed from e^{-x} Ei^(delta)(x) so nothing overflows.
    [[nodiscard]] double f(double r) const
    {
        check_radius(r, "f_d");
        return std::pow(r, 2.0 - d_) * ei_.ei_scaled(r * r);
    }

    /// r^{d-1} f_d(r) = r e^{-r^2} Ei^(delta)(r^2): the integrand of radial pairings,
    /// finite where f_d alone overflows (d >= 5, tiny r).
    [[nodiscard]] double f_weighted(double r) const
    {
        check_radius(r, "f_d");
        return r * ei_.ei_scaled(r * r);
    }

    /// phi_d(r) = r^{2-d} e^{-r^2/2} Ei^(delta)(r^2 / 2).
    [[nodiscard]] double phi(double r) const
    {
        check_radius(r, "phi_d");
        return std::pow(r, 2.0 - d_) * ei_.ei_scaled(0.5 * r * r);
    }

    /// The unique r0 > 0 with Ei^(delta)(r0^2) = 0; f_d < 0 below it and > 0 above.
    [[nodiscard]] double sign_change_radius() const
    {
        auto fn = [this](double x) { return ei_.ei_scaled(x); };
        // Ei^(delta) is negative near 0 for every delta < 2 and positive by x = 2.
        double lo = 1e-8;
        double hi = 4.0;
        std::uintmax_t iterations = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(
            fn, lo, hi, boost::math::tools::eps_tolerance<double>(52), iterations);
        return std::sqrt(0.5 * (a + b));
    }

private:
    static int checked_dimension(int d)
    {
        if (d < 1) {
            detail::raise<DomainError>("RadialEigenfunction", "dimension must be >= 1");
        }
        return d;
    }

    static void check_radius(double r, const char* where)
    {
        if (!(r > 0.0)) {
            detail::raise<DomainError>(where, "radius must be > 0");
        }
    }

    int d_;
    double delta_;
    DeltaExpEvaluator ei_;
};

class RegularizedFunction {
public:
    RegularizedFunction(RadialEigenfunction base, double alpha) : base_(std::move(base)), alpha_(alpha)
    {
        if (!(alpha > 0.0)) {
            detail::raise<DomainError>("RegularizedFunction", "alpha must be > 0");
        }
    }

    [[nodiscard]] const RadialEigenfunction& base() const { return base_; }
    [[nodiscard]] double alpha() const { return alpha_; }

    [[nodiscard]] double operator()(double r) const
    {
        return base_.f(r) * std::exp(-alpha_ * r * r);
    }

private:
    RadialEigenfunction base_;
    double alpha_;
};

inline double phi_d(const RadialEigenfunction& fn, double r) { return fn.phi(r); }
inline double f_d(const RadialEigenfunction& fn, double r) { return fn.f(r); }
inline double f_d_alpha(const RegularizedFunction& rf, double r) { return rf(r); }

/// |phi_d(r) - (sqrt 2)^{2-d} f_d(r / sqrt 2)|. The factor follows from
/// f_d(r / sqrt 2) = (r / sqrt 2)^{2-d} e^{-r^2/2} Ei^(delta)(r^2 / 2).
inline double phi_from_f_consistency(const RadialEigenfunction& fn, double r)
{
    const double scale = std::pow(std::numbers::sqrt2, 2 - fn.dimension());
    return std::abs(fn.phi(r) - scale * fn.f(r / std::numbers::sqrt2));
}

// ---------------------------------------------------------------------------
// L^p classification

enum class LpReason { member, origin_divergence, infinity_divergence, both };

inline std::string_view to_string(LpReason reason)
{
    switch (reason) {
    case LpReason::member: return "member";
    case LpReason::origin_divergence: return "origin-divergence";
    case LpReason::infinity_divergence: return "infinity-divergence";
    case LpReason::both: return "both";
    }
    return "unknown";
}

struct LpVerdict {
    int d = 0;
    int p = 0;
    bool member = false;
    LpReason reason = LpReason::both;
};

inline LpVerdict make_verdict(int d, int p, bool origin_ok, bool infinity_ok)
{
    LpVerdict v{d, p, origin_ok && infinity_ok, LpReason::member};
    if (!origin_ok && !infinity_ok) {
        v.reason = LpReason::both;
    } else if (!origin_ok) {
        v.reason = LpReason::origin_divergence;
    } else if (!infinity_ok) {
        v.reason = LpReason::infinity_divergence;
    }
    return v;
}

/// Exact verdict: f_d ~ r^{2-d} at 0 (log for d = 2) and ~ r^{-2} at infinity, so
/// f_d is in L^p iff p > d/2 and (d <= 2 or p < d/(d-2)). Integer arithmetic only.
inline LpVerdict lp_membership(int d, int p)
{
    if (d < 1 || p < 1) {
        detail::raise<DomainError>("lp_membership", "need d >= 1 and p >= 1");
    }
    const bool infinity_ok = 2 * p > d;
    const bool origin_ok = d <= 2 || p * (d - 2) < d;
    return make_verdict(d, p, origin_ok, infinity_ok);
}

struct IntegrabilityProbe {
    LpVerdict verdict;
    double origin_shell_ratio = 0.0;    // last dyadic shell integral / previous one, near 0
    double infinity_shell_ratio = 0.0;  // same, near infinity
    double body = 0.0;                  // integral of |f_d|^p r^{d-1} on [inner, outer]
};

/// Numerical cross-check of lp_membership. Integrates |f_d|^p r^{d-1} on
/// [inner, outer] and then on dyadic shells beyond each cutoff. An end is
/// declared divergent when a refinement's shell fails to shrink by 10% relative
/// to the previous shell; integrable ends shrink geometrically.
inline IntegrabilityProbe integrability_probe(int d, int p, double inner = 1e-6, double outer = 1e3,
                                              int refinements = 4)
{
    const RadialEigenfunction fn(d);
    auto integrand = [&](double r) {
        return std::pow(std::abs(fn.f_weighted(r)), p) * std::pow(r, (d - 1) * (1 - p));
    };
    constexpr double growth_limit = 0.9;

    IntegrabilityProbe out;
    // The body spans many decades; integrate in log r.
    auto in_log = [&](double u) {
        const double r = std::exp(u);
        return integrand(r) * r;
    };
    const double r0 = fn.sign_change_radius();
    out.body = quad::smooth(in_log, std::log(inner), std::log(r0), 1e-10).value +
               quad::smooth(in_log, std::log(r0), std::log(outer), 1e-10).value;

    double shell = quad::smooth(integrand, 0.5 * inner, inner, 1e-10).value;
    double lo = 0.5 * inner;
    for (int k = 0; k < refinements; ++k) {
        const double next = quad::smooth(integrand, 0.5 * lo, lo, 1e-10).value;
        out.origin_shell_ratio = next / shell;
        shell = next;
        lo *= 0.5;
    }
    shell = quad::smooth(integrand, outer, 2.0 * outer, 1e-10).value;
    double hi = 2.0 * outer;
    for (int k = 0; k < refinements; ++k) {
        const double next = quad::smooth(integrand, hi, 2.0 * hi, 1e-10).value;
        out.infinity_shell_ratio = next / shell;
        shell = next;
        hi *= 2.0;
    }
    out.verdict = make_verdict(d, p, out.origin_shell_ratio < growth_limit,
                               out.infinity_shell_ratio < growth_limit);
    return out;
}

// ---------------------------------------------------------------------------
// Tempered-distribution constants

namespace detail {

/// omega_{d-1} * int_0^inf |f_d(r)| w(r) r^{d-1} / (1 + r^{2d}) dr, split at the sign change of f_d.
template <class Weight>
double tempered_integral(const RadialEigenfunction& fn, Weight&& weight)
{
    const int d = fn.dimension();
    auto integrand = [&](double r) {
        // The integrand is O(r) at 0 and O(r^{-d-3}) at infinity; outside
        // [1e-150, 1e20] it is negligible and r^2 or r^{2d} would under/overflow.
        if (r < 1e-150 || r > 1e20) {
            return 0.0;
        }
        return std::abs(fn.f_weighted(r)) * weight(r) / (1.0 + std::pow(r, 2 * d));
    };
    const double r0 = fn.sign_change_radius();
    const auto total = quad::endpoint_singular(integrand, 0.0, r0, 1e-12) +
                       quad::endpoint_singular(integrand, r0, 2.0 * r0 + 1.0, 1e-12) +
                       quad::half_line(integrand, 2.0 * r0 + 1.0, 1e-12);
    return sphere_area(d) * total.value;
}

} // namespace detail

/// C_d = int_{R^d} |f_d(x)| / (1 + |x|^{2d}) dx, so |<f_d, phi>| <= C_d sup (1 + |x|^{2d}) |phi|.
inline double tempered_constant(const RadialEigenfunction& fn)
{
    return detail::tempered_integral(fn, [](double) { return 1.0; });
}

/// C_d^alpha = int |f_d - f_d^alpha| / (1 + |x|^{2d}) dx, which bounds the S' gap
/// between f_d^alpha and f_d. Zero at alpha = 0.
inline double tempered_constant_alpha(const RadialEigenfunction& fn, double alpha)
{
    if (alpha < 0.0) {
        detail::raise<DomainError>("tempered_constant_alpha", "alpha must be >= 0");
    }
    if (alpha == 0.0) {
        return 0.0;
    }
    return detail::tempered_integral(fn, [alpha](double r) { return -std::expm1(-alpha * r * r); });
}

} // namespace fourier_eigen
