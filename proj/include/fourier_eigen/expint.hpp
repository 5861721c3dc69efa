#pragma once

// The delta-exponential integral
//
//     Ei^(delta)(x) = PV int_{-inf}^{x} e^t / t^delta dt,   delta < 2,
//
// with t^delta read as -|t|^delta for t < 0. For x > 0 it is evaluated through
// the split Ei = G - H,
//
//     G(x) = int_0^x 2 sinh(t) / t^delta dt,     H(x) = int_x^inf e^{-t} / t^delta dt,
//
// which removes the principal value. H is the upper incomplete gamma function
// Gamma(1 - delta, x). For x < 0 the definition gives Ei(x) = -H(-x).

#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace fourier_eigen {

/// Exponent delta of the generalized exponential integral; delta < 2.
class DeltaParam {
public:
    explicit DeltaParam(double delta) : delta_(delta)
    {
        if (!(delta < 2.0)) {  // also rejects NaN
            detail::raise<DomainError>("DeltaParam", "delta must satisfy delta < 2, got " +
                                                         std::to_string(delta));
        }
    }

    [[nodiscard]] double value() const { return delta_; }
    explicit operator double() const { return delta_; }

private:
    double delta_;
};

struct EvalOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_series_terms = 500;
    /// Switch point between the power series and the quadrature/asymptotic branches.
    double series_asymptotic_crossover = 30.0;

    void validate() const
    {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_series_terms < 1 ||
            !(series_asymptotic_crossover > 0.0)) {
            detail::raise<PreconditionError>("EvalOptions", "invalid tolerance or series settings");
        }
    }
};

/// Cutoff pairs (a, b) for the two-sided truncation
/// { int_{-inf}^{-a} + int_b^x } e^t / t^delta dt.
struct PvSchedule {
    std::vector<std::pair<double, double>> cutoff_pairs;

    void validate() const
    {
        if (cutoff_pairs.empty()) {
            detail::raise<PreconditionError>("PvSchedule", "empty schedule");
        }
        double previous = std::numeric_limits<double>::infinity();
        for (const auto& [a, b] : cutoff_pairs) {
            if (!(a > 0.0) || !(b > 0.0)) {
                detail::raise<PreconditionError>("PvSchedule", "cutoffs must be positive");
            }
            const double c = std::max(a, b);
            if (!(c < previous)) {
                detail::raise<PreconditionError>("PvSchedule",
                                                 "max(a, b) must be strictly decreasing");
            }
            previous = c;
        }
    }

    /// Symmetric schedule a = b = 10^{-n}, n = first..last.
    static PvSchedule symmetric(int first, int last)
    {
        PvSchedule s;
        for (int n = first; n <= last; ++n) {
            const double eps = std::pow(10.0, -n);
            s.cutoff_pairs.emplace_back(eps, eps);
        }
        return s;
    }

    /// Asymmetric schedule a = 10^{-n}, b = a + a^2.
    static PvSchedule asymmetric(int first, int last)
    {
        PvSchedule s;
        for (int n = first; n <= last; ++n) {
            const double eps = std::pow(10.0, -n);
            s.cutoff_pairs.emplace_back(eps, eps + eps * eps);
        }
        return s;
    }
};

struct PvReport {
    double delta = 0.0;
    double x = 0.0;
    /// Observed max |a - b| / min(a, b)^2 over the schedule.
    double k_declared = 0.0;
    double reference = 0.0;  // ei_delta(delta, x)
    double tolerance = 0.0;
    std::vector<std::pair<double, double>> cutoff_pairs;
    std::vector<double> values;
    std::vector<double> distances;
    std::vector<double> error_estimates;
    bool converged = false;
};

namespace detail {

inline double log_euler_e1(double x, const EvalOptions& opt)
{
    // E_1(x) = -gamma - ln x - sum_{n>=1} (-x)^n / (n n!)
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= opt.max_series_terms; ++n) {
        term *= -x / n;
        const double contribution = term / n;
        sum += contribution;
        if (std::abs(contribution) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
            return -euler_gamma - std::log(x) - sum;
        }
    }
    raise<ConvergenceError>("h_delta", "log-Euler series did not converge");
}

// Gamma(a, x) for -1 < a <= 1, a != 0, through the analytic continuation
// Gamma(a, x) = [Gamma(1+a) - 1]/a - expm1(a ln x)/a - x^a sum_{n>=1} (-x)^n / (n! (a+n)).
inline double upper_gamma_small_a(double a, double x, const EvalOptions& opt)
{
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= opt.max_series_terms; ++n) {
        term *= -x / n;
        const double contribution = term / (a + n);
        sum += contribution;
        if (std::abs(contribution) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) {
            const double head = boost::math::tgamma1pm1(a) / a - std::expm1(a * std::log(x)) / a;
            return head - std::pow(x, a) * sum;
        }
    }
    raise<ConvergenceError>("h_delta", "small-order incomplete gamma series did not converge");
}

// Gamma(a) - gamma(a, x) for a > 1 and x <= a + 1; the lower part is a
// positive-term series.
inline double upper_gamma_by_complement(double a, double x, const EvalOptions& opt)
{
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n <= opt.max_series_terms; ++n) {
        term *= x / (a + n);
        sum += term;
        if (term <= std::numeric_limits<double>::epsilon() * sum) {
            const double lower = std::exp(-x + a * std::log(x)) * sum;
            return std::tgamma(a) - lower;
        }
    }
    raise<ConvergenceError>("h_delta", "lower incomplete gamma series did not converge");
}

// Modified Lentz evaluation of the Legendre continued fraction for Gamma(a, x).
inline double upper_gamma_continued_fraction(double a, double x, const EvalOptions& opt)
{
    constexpr double tiny = 1e-300;
    const double eps = std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= opt.max_series_terms; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double step = d * c;
        h *= step;
        if (std::abs(step - 1.0) <= eps) {
            return std::exp(-x + a * std::log(x)) * h;
        }
    }
    raise<ConvergenceError>("h_delta", "incomplete gamma continued fraction did not converge");
}

// Power series G(x) = 2 sum_k x^{2k+2-delta} / ((2k+1)! (2k+2-delta)).
inline double g_series(double delta, double x, const EvalOptions& opt)
{
    if (x == 0.0) {
        return 0.0;
    }
    double term = 2.0 * std::pow(x, 2.0 - delta) / (2.0 - delta);
    double sum = term;
    const double x2 = x * x;
    for (int k = 0; k < opt.max_series_terms; ++k) {
        if (term < opt.rel_tol * sum || term < opt.abs_tol) {
            return sum;
        }
        const double kk = 2.0 * k;
        term *= x2 / ((kk + 2.0) * (kk + 3.0)) * (kk + 2.0 - delta) / (kk + 4.0 - delta);
        sum += term;
    }
    raise<ConvergenceError>("g_delta", "power series exceeded max_series_terms at x = " +
                                           std::to_string(x));
}

// H^(delta)(x) for x > 0.
inline double h_positive(double delta, double x, const EvalOptions& opt)
{
    const double a = 1.0 - delta;
    if (x > std::max(1.0, a + 1.0)) {
        return upper_gamma_continued_fraction(a, x, opt);
    }
    if (delta == 1.0) {
        return log_euler_e1(x, opt);
    }
    if (std::abs(a) < 0.1) {
        return upper_gamma_small_a(a, x, opt);
    }
    if (delta > 1.0) {
        // Integration by parts lowers delta by one:
        // H^(d)(x) = e^{-x} / ((d-1) x^{d-1}) - H^(d-1)(x) / (d-1).
        const double dm1 = delta - 1.0;
        return std::exp(-x) / (dm1 * std::pow(x, dm1)) - h_positive(dm1, x, opt) / dm1;
    }
    if (a <= 1.0) {
        return upper_gamma_small_a(a, x, opt);
    }
    return upper_gamma_by_complement(a, x, opt);
}

// e^{-x} G(x) via G(1) + int_1^x 2 sinh(t) t^{-delta} dt, integrand pre-scaled by e^{-x}.
inline double g_scaled_quadrature(double delta, double x, const EvalOptions& opt)
{
    const double head = std::exp(-x) * g_series(delta, 1.0, opt);
    // u = x - t keeps the mass of e^{t-x} at the left end of [0, x - 1].
    auto integrand = [=](double u) {
        const double t = x - u;
        return (std::exp(-u) - std::exp(-2.0 * x + u)) * std::pow(t, -delta);
    };
    const auto body = quad::smooth(integrand, 0.0, x - 1.0, 1e-15);
    return head + body.value;
}

struct AsymptoticSum {
    double value;           // x^{-delta} sum_k (delta)_k / x^k
    double relative_error;  // truncation plus exponentially small remainder, relative
};

// Divergent series e^{-x} Ei^(delta)(x) ~ x^{-delta} sum_k (delta)_k / x^k,
// truncated just before its smallest term.
// The expansion fixes e^{-x} Ei only up to an O(e^{-x}) constant, so the error
// estimate carries a 10 e^{-x} x^delta term next to the smallest omitted term.
inline AsymptoticSum asymptotic_scaled(double delta, double x, const EvalOptions& opt)
{
    double term = 1.0;
    double sum = 1.0;
    double omitted = 0.0;
    for (int k = 0; k < opt.max_series_terms; ++k) {
        const double next = term * (delta + k) / x;
        if (next == 0.0) {  // terminating series: delta is a non-positive integer
            omitted = 0.0;
            break;
        }
        if (std::abs(next) >= std::abs(term)) {
            omitted = std::abs(term);
            break;
        }
        term = next;
        sum += term;
        omitted = std::abs(term);
        if (omitted <= 0.25 * std::numeric_limits<double>::epsilon() * std::abs(sum)) {
            break;
        }
    }
    const double remainder = 10.0 * std::exp(-x + delta * std::log(x));
    return {std::pow(x, -delta) * sum, (omitted + remainder) / std::abs(sum)};
}

} // namespace detail

/// Evaluator for Ei^(delta), G^(delta), H^(delta) at a fixed delta. Immutable;
/// safe to share across threads.
class DeltaExpEvaluator {
public:
    explicit DeltaExpEvaluator(DeltaParam delta, EvalOptions options = {})
        : delta_(delta.value()), options_(options)
    {
        options_.validate();
    }

    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] const EvalOptions& options() const { return options_; }

    /// G^(delta)(x) = int_0^x 2 sinh(t) t^{-delta} dt. Overflows to +inf past x ~ 709.
    [[nodiscard]] double g(double x) const
    {
        if (!(x >= 0.0)) {
            detail::raise<DomainError>("g_delta", "x must be >= 0");
        }
        if (x < options_.series_asymptotic_crossover) {
            return detail::g_series(delta_, x, options_);
        }
        const double scaled = detail::g_scaled_quadrature(delta_, x, options_);
        return x > 709.0 ? scaled * std::exp(x - 709.0) * std::exp(709.0) : scaled * std::exp(x);
    }

    /// H^(delta)(x) = Gamma(1 - delta, x).
    [[nodiscard]] double h(double x) const
    {
        if (!(x >= 0.0)) {
            detail::raise<DomainError>("h_delta", "x must be >= 0");
        }
        if (x == 0.0) {
            if (delta_ >= 1.0) {
                detail::raise<DivergenceError>("h_delta", "H^(delta)(0) is infinite for delta >= 1");
            }
            return std::tgamma(1.0 - delta_);
        }
        return detail::h_positive(delta_, x, options_);
    }

    [[nodiscard]] double ei(double x) const
    {
        if (std::isnan(x)) {
            detail::raise<DomainError>("ei_delta", "x is NaN");
        }
        if (x == 0.0) {
            if (delta_ >= 1.0) {
                detail::raise<DivergenceError>("ei_delta", "Ei^(delta)(0) diverges for delta >= 1");
            }
            return -std::tgamma(1.0 - delta_);
        }
        if (x < 0.0) {
            return -h(-x);
        }
        return g(x) - h(x);
    }

    /// e^{-x} Ei^(delta)(x) for x > 0 without forming e^x.
    [[nodiscard]] double ei_scaled(double x) const
    {
        if (!(x > 0.0)) {
            detail::raise<DomainError>("ei_delta_scaled", "x must be > 0");
        }
        if (x < options_.series_asymptotic_crossover) {
            return std::exp(-x) * (detail::g_series(delta_, x, options_) - h(x));
        }
        const auto asym = detail::asymptotic_scaled(delta_, x, options_);
        if (asym.relative_error <= 0.1 * options_.rel_tol) {
            return asym.value;
        }
        return detail::g_scaled_quadrature(delta_, x, options_) - std::exp(-x) * h(x);
    }

    /// Leading small-x model of Ei^(delta)(x).
    [[nodiscard]] double near_zero(double x) const
    {
        if (!(x > 0.0)) {
            detail::raise<DomainError>("near_zero_model", "x must be > 0");
        }
        if (delta_ < 1.0) {
            return -std::tgamma(1.0 - delta_);
        }
        if (delta_ == 1.0) {
            return std::log(x);
        }
        return -1.0 / ((delta_ - 1.0) * std::pow(x, delta_ - 1.0));
    }

private:
    double delta_;
    EvalOptions options_;
};

inline double g_delta(DeltaParam delta, double x, const EvalOptions& opt = {})
{
    return DeltaExpEvaluator(delta, opt).g(x);
}

inline double h_delta(DeltaParam delta, double x, const EvalOptions& opt = {})
{
    return DeltaExpEvaluator(delta, opt).h(x);
}

inline double ei_delta(DeltaParam delta, double x, const EvalOptions& opt = {})
{
    return DeltaExpEvaluator(delta, opt).ei(x);
}

inline double ei_delta_scaled(DeltaParam delta, double x, const EvalOptions& opt = {})
{
    return DeltaExpEvaluator(delta, opt).ei_scaled(x);
}

inline double near_zero_model(DeltaParam delta, double x)
{
    return DeltaExpEvaluator(delta).near_zero(x);
}

/// Evaluates the two-sided truncated integrals for every cutoff pair and
/// measures their distance to ei_delta(delta, x).
///
/// The truncated integral is rearranged exactly (reflect t -> -t on the left
/// piece) into three well-conditioned quadratures:
///   int_b^x 2 sinh(t) t^{-delta} dt - int_a^b e^{-s} s^{-delta} ds - int_x^inf e^{-t} t^{-delta} dt.
/// Pairs must satisfy |a - b| <= max_k * min(a, b)^2 and b < x.
inline PvReport pv_limit_check(DeltaParam delta, double x, const PvSchedule& schedule,
                               double tolerance = 1e-8, double max_k = 10.0)
{
    if (!(x > 0.0)) {
        detail::raise<DomainError>("pv_limit_check", "x must be > 0");
    }
    schedule.validate();
    const double d = delta.value();

    PvReport report;
    report.delta = d;
    report.x = x;
    report.tolerance = tolerance;
    report.cutoff_pairs = schedule.cutoff_pairs;
    for (const auto& [a, b] : schedule.cutoff_pairs) {
        const double m = std::min(a, b);
        report.k_declared = std::max(report.k_declared, std::abs(a - b) / (m * m));
        if (!(b < x)) {
            detail::raise<PreconditionError>("pv_limit_check", "cutoff b must be below x");
        }
    }
    if (report.k_declared > max_k) {
        detail::raise<PreconditionError>(
            "pv_limit_check", "schedule violates |a - b| = O(min(a, b)^2): observed K = " +
                                  std::to_string(report.k_declared));
    }

    report.reference = ei_delta(delta, x);

    // log-variable substitution t = e^u turns the t^{1-delta} endpoint behaviour
    // into a smooth exponential in u.
    auto log_integral = [](auto&& f, double lo, double hi) {
        if (lo == hi) {
            return quad::Estimate{};
        }
        const double sign = lo < hi ? 1.0 : -1.0;
        const double a = std::min(lo, hi);
        const double b = std::max(lo, hi);
        quad::Estimate e;
        if (b < 2.0 * a) {
            // Narrow gap: ln b - ln a would lose the width to cancellation.
            e = quad::smooth(f, a, b, 1e-13);
        } else {
            auto g = [&](double u) {
                const double t = std::exp(u);
                return f(t) * t;
            };
            e = quad::smooth(g, std::log(a), std::log(b), 1e-13);
        }
        e.value *= sign;
        return e;
    };
    auto odd_part = [d](double t) { return 2.0 * std::sinh(t) * std::pow(t, -d); };
    auto decaying = [d](double t) { return std::exp(-t) * std::pow(t, -d); };
    const auto tail = quad::half_line(decaying, x, 1e-14);

    for (const auto& [a, b] : schedule.cutoff_pairs) {
        const auto right = log_integral(odd_part, b, x);
        const auto gap = log_integral(decaying, a, b);
        const double value = right.value - gap.value - tail.value;
        report.values.push_back(value);
        report.error_estimates.push_back(right.error + gap.error + tail.error);
        report.distances.push_back(std::abs(value - report.reference));
    }

    const auto& dist = report.distances;
    bool settling = true;
    const std::size_t n = dist.size();
    for (std::size_t i = (n > 3 ? n - 3 : 0); i + 1 < n; ++i) {
        settling = settling && (dist[i + 1] <= dist[i] || dist[i + 1] <= tolerance);
    }
    report.converged = settling && dist.back() <= tolerance;
    return report;
}

} // namespace fourier_eigen
