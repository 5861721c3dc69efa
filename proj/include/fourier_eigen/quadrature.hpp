#pragma once

// Thin adapters over Boost.Math quadrature plus the Wynn epsilon accelerator
// used for oscillatory tails. Every routine reports an error estimate so the
// verification layer can fold quadrature noise into its pass/fail margins.

#include "fourier_eigen/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourier_eigen::quad {

struct Estimate {
    double value = 0.0;
    double error = 0.0;

    Estimate& operator+=(const Estimate& other)
    {
        value += other.value;
        error += other.error;
        return *this;
    }
};

inline Estimate operator+(Estimate lhs, const Estimate& rhs) { return lhs += rhs; }

namespace detail {

inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_engine()
{
    thread_local boost::math::quadrature::tanh_sinh<double> engine(15);
    return engine;
}

inline boost::math::quadrature::exp_sinh<double>& exp_sinh_engine()
{
    thread_local boost::math::quadrature::exp_sinh<double> engine(12);
    return engine;
}

inline void check(const Estimate& e, double tol, const char* where)
{
    if (!std::isfinite(e.value)) {
        fourier_eigen::detail::raise<ConvergenceError>(where, "non-finite quadrature value");
    }
    // Boost's estimates are conservative; accept up to 1e3 x the requested
    // tolerance (floored at 1e-13) before declaring failure.
    const double scale = std::max(std::abs(e.value), 1e-300);
    if (e.error > 1e3 * std::max(tol, 1e-13) * scale && e.error > 1e-14) {
        char buffer[128];
        std::snprintf(buffer, sizeof buffer, "error estimate %.3e exceeds tolerance for value %.6e",
                      e.error, e.value);
        fourier_eigen::detail::raise<ConvergenceError>(where, buffer);
    }
}

} // namespace detail

/// Double-exponential rule on [a, b]; tolerant of integrable endpoint singularities.
template <class F>
Estimate endpoint_singular(F&& f, double a, double b, double tol = 1e-13)
{
    if (a == b) {
        return {};
    }
    Estimate out;
    double l1 = 0.0;
    try {
        out.value = detail::tanh_sinh_engine().integrate(f, a, b, tol, &out.error, &l1);
    } catch (const std::exception& ex) {
        fourier_eigen::detail::raise<ConvergenceError>("quad::endpoint_singular", ex.what());
    }
    out.error = std::max(out.error, std::numeric_limits<double>::epsilon() * l1);
    detail::check(out, tol, "quad::endpoint_singular");
    return out;
}

/// Globally adaptive Gauss-Kronrod (15/31) on a finite interval. Bisects the
/// panel with the largest error until the summed error meets tol * |value| or
/// drops to the roundoff floor of 50 eps * L1.
template <class F>
Estimate smooth(F&& f, double a, double b, double tol = 1e-13, int max_panels = 4000)
{
    if (a == b) {
        return {};
    }
    struct Panel {
        double lo, hi, value, error, l1;
        bool operator<(const Panel& other) const { return error < other.error; }
    };
    auto evaluate = [&f](double lo, double hi) {
        Panel p{lo, hi, 0.0, 0.0, 0.0};
        p.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0,
                                                                                &p.error, &p.l1);
        // Boost 1.74 reports the single-panel error on the reference interval
        // [-1, 1]; L1 is rescaled but the error is not.
        p.error *= 0.5 * (hi - lo);
        return p;
    };
    std::priority_queue<Panel> panels;
    panels.push(evaluate(a, b));
    double value = panels.top().value;
    double error = panels.top().error;
    double l1 = panels.top().l1;
    const double eps = std::numeric_limits<double>::epsilon();
    while (error > tol * std::abs(value) && error > 50.0 * eps * l1 &&
           static_cast<int>(panels.size()) < max_panels) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            panels.push(worst);
            break;
        }
        const Panel left = evaluate(worst.lo, mid);
        const Panel right = evaluate(mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        panels.push(left);
        panels.push(right);
    }
    // Re-sum to shed the drift of the incremental updates.
    value = 0.0;
    error = 0.0;
    l1 = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        l1 += panels.top().l1;
        panels.pop();
    }
    Estimate out{value, std::max(error, eps * l1)};
    detail::check(out, tol, "quad::smooth");
    return out;
}

/// Fixed 20-point Gauss-Legendre panel; no error estimate beyond rounding.
template <class F>
double gauss_panel(F&& f, double a, double b)
{
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

/// exp-sinh rule on [a, inf).
template <class F>
Estimate half_line(F&& f, double a, double tol = 1e-13)
{
    Estimate out;
    double l1 = 0.0;
    try {
        out.value = detail::exp_sinh_engine().integrate(f, a, std::numeric_limits<double>::infinity(),
                                                        tol, &out.error, &l1);
    } catch (const std::exception& ex) {
        fourier_eigen::detail::raise<ConvergenceError>("quad::half_line", ex.what());
    }
    out.error = std::max(out.error, std::numeric_limits<double>::epsilon() * l1);
    detail::check(out, tol, "quad::half_line");
    return out;
}

/// Wynn epsilon algorithm over a stream of partial sums. Each push extends the
/// last anti-diagonal of the epsilon table in O(n).
class WynnEpsilon {
public:
    /// Adds the next partial sum and returns the current accelerated estimate.
    double push(double partial_sum)
    {
        std::vector<double> next;
        next.reserve(diagonal_.size() + 1);
        next.push_back(partial_sum);
        for (std::size_t j = 1; j <= diagonal_.size(); ++j) {
            const double diff = next[j - 1] - diagonal_[j - 1];
            if (diff == 0.0 || !std::isfinite(diff)) {
                break;
            }
            const double before = (j >= 2) ? diagonal_[j - 2] : 0.0;
            const double value = before + 1.0 / diff;
            if (!std::isfinite(value)) {
                break;
            }
            next.push_back(value);
        }
        diagonal_ = std::move(next);
        // Even columns carry the estimates; odd columns are auxiliary.
        const std::size_t last_even = (diagonal_.size() - 1) & ~std::size_t{1};
        return diagonal_[last_even];
    }

    [[nodiscard]] std::size_t size() const { return diagonal_.size(); }

private:
    std::vector<double> diagonal_;
};

} // namespace fourier_eigen::quad
