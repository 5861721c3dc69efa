#pragma once

// Verification of F[f_d] = -pi^{d/2} f_d(./2) in the sense of tempered
// distributions, <f_d, F[probe]> = <-pi^{d/2} f_d(./2), probe>, with radial
// Gaussian-polynomial probes whose transforms are known in closed form; and
// the calibrated uniform bound |F[f_d^alpha](rho)| <= A/rho^2 + B rho^4.

#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/eigenfunctions.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/quadrature.hpp"
#include "fourier_eigen/radial_fourier.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace fourier_eigen {

inline constexpr int max_probe_order = 4;

/// phi(x) = |x|^{2k} e^{-a |x|^2} on R^d.
struct SchwartzProbe {
    int d = 1;
    double a = 1.0;
    int k = 0;

    void validate() const
    {
        if (d < 1 || !(a > 0.0) || k < 0) {
            detail::raise<PreconditionError>("SchwartzProbe", "need d >= 1, a > 0, k >= 0");
        }
        if (k > max_probe_order) {
            detail::raise<UnsupportedError>("SchwartzProbe", "probe order k above 4");
        }
    }

    [[nodiscard]] double operator()(double r) const
    {
        const double g = std::exp(-a * r * r);
        return g == 0.0 ? 0.0 : std::pow(r * r, k) * g;
    }
};

/// One term c rho^{2j} e^{-w rho^2} of a probe transform.
struct ProbeTerm {
    double coefficient;
    double width;
    int power;
};

/// F[r^{2k} e^{-a r^2}] = (-1)^k (d/da)^k [(pi/a)^{d/2} e^{-b/a}], b = rho^2/4. Each derivative
/// maps c b^j a^{-q} e^{-b/a} (q = d/2 + k + j) to -q c b^j a^{-q-1} + c b^{j+1} a^{-q-2},
/// all times e^{-b/a}; the coefficients are dyadic rationals and exact in double.
inline std::vector<ProbeTerm> probe_hat_terms(const SchwartzProbe& probe)
{
    probe.validate();
    const double m = 0.5 * probe.d;
    std::array<double, max_probe_order + 1> c{};
    c[0] = 1.0;
    for (int k = 0; k < probe.k; ++k) {
        std::array<double, max_probe_order + 1> next{};
        for (int j = 0; j <= k; ++j) {
            next[j] += -(m + k + j) * c[j];
            next[j + 1] += c[j];
        }
        c = next;
    }
    const double sign = (probe.k % 2 == 0) ? 1.0 : -1.0;
    std::vector<ProbeTerm> terms;
    for (int j = 0; j <= probe.k; ++j) {
        // b^j a^{-m-k-j} = rho^{2j} 4^{-j} a^{-m-k-j}
        const double coefficient = sign * c[j] * std::pow(pi, m) * std::pow(probe.a, -m - probe.k - j) *
                                   std::pow(0.25, j);
        terms.push_back({coefficient, 0.25 / probe.a, j});
    }
    return terms;
}

inline double probe_hat(const SchwartzProbe& probe, double rho)
{
    if (rho < 0.0) {
        detail::raise<DomainError>("probe_hat", "rho must be >= 0");
    }
    double sum = 0.0;
    const double rho2 = rho * rho;
    for (const auto& t : probe_hat_terms(probe)) {
        sum += t.coefficient * std::pow(rho2, t.power);
    }
    const double g = std::exp(-0.25 * rho2 / probe.a);
    return g == 0.0 ? 0.0 : sum * g;
}

/// F[F[probe]](r) (2 pi)^{-d}, which equals probe(r) by Fourier inversion.
inline double probe_double_transform(const SchwartzProbe& probe, double r)
{
    double sum = 0.0;
    for (const auto& t : probe_hat_terms(probe)) {
        sum += t.coefficient * probe_hat(SchwartzProbe{probe.d, t.width, t.power}, r);
    }
    return sum * std::pow(2.0 * pi, -probe.d);
}

// ---------------------------------------------------------------------------
// Pairings

namespace detail {

/// omega_{d-1} int_0^inf w(r) dr, where w already carries r^{d-1}; the integrand must be
/// exponentially damped. [0, knee] by tanh-sinh, the rest by exp-sinh.
template <class W>
quad::Estimate pair_weighted(int d, W&& w, double knee)
{
    auto integrand = [&](double r) { return (r < 1e-150) ? 0.0 : w(r); };
    const auto total = quad::endpoint_singular(integrand, 0.0, knee, 1e-13) +
                       quad::half_line(integrand, knee, 1e-13);
    const double omega = sphere_area(d);
    return {omega * total.value, omega * total.error};
}

} // namespace detail

/// <profile, probe> = omega_{d-1} int_0^inf profile(r) probe(r) r^{d-1} dr.
template <class Profile, class Probe>
double pair_radial(int d, Profile&& profile, Probe&& probe)
{
    if (d < 1) {
        detail::raise<DomainError>("pair_radial", "dimension must be >= 1");
    }
    auto w = [&](double r) {
        const double p = probe(r);
        return p == 0.0 ? 0.0 : profile(r) * p * std::pow(r, d - 1);
    };
    return detail::pair_weighted(d, w, 1.0).value;
}

struct PairingResult {
    double lhs = 0.0;                        // <f_d, F[probe]>
    double rhs = 0.0;                        // <-pi^{d/2} f_d(./2), probe>
    double residual = 0.0;                   // |lhs - rhs|
    double quadrature_error_estimate = 0.0;
};

inline PairingResult eigen_pairing_residual(int d, const SchwartzProbe& probe)
{
    if (probe.d != d) {
        detail::raise<PreconditionError>("eigen_pairing_residual", "probe dimension mismatch");
    }
    probe.validate();
    const RadialEigenfunction fn(d);
    const double r0 = fn.sign_change_radius();
    // r^{d-1} f_d(r) and r^{d-1} f_d(r/2) = 2^{d-1} (r/2)^{d-1} f_d(r/2), both finite at small r.
    auto lhs_w = [&](double r) {
        const double p = probe_hat(probe, r);
        return p == 0.0 ? 0.0 : fn.f_weighted(r) * p;
    };
    const double scale = std::pow(2.0, d - 1);
    auto rhs_w = [&](double r) {
        const double p = probe(r);
        return p == 0.0 ? 0.0 : scale * fn.f_weighted(0.5 * r) * p;
    };
    const auto lhs = detail::pair_weighted(d, lhs_w, r0);
    const auto rhs = detail::pair_weighted(d, rhs_w, 2.0 * r0);
    const double factor = -std::pow(pi, 0.5 * d);
    PairingResult out;
    out.lhs = lhs.value;
    out.rhs = factor * rhs.value;
    out.residual = std::abs(out.lhs - out.rhs);
    out.quadrature_error_estimate = lhs.error + std::abs(factor) * rhs.error;
    return out;
}

/// Both sides of the d = 4 pairing in closed form, from f_4(r) = r^{-2}(1 - 2 e^{-r^2})
/// and int_0^inf r^{2j+1} e^{-c r^2} dr = j! / (2 c^{j+1}).
inline PairingResult pairing_closed_form_d4(const SchwartzProbe& probe)
{
    if (probe.d != 4) {
        detail::raise<PreconditionError>("pairing_closed_form_d4", "probe must live in d = 4");
    }
    auto moment = [](int j, double c) { return std::tgamma(j + 1.0) / (2.0 * std::pow(c, j + 1)); };
    const double omega = 2.0 * pi * pi;
    double lhs = 0.0;
    for (const auto& t : probe_hat_terms(probe)) {
        // f_4(r) r^3 = r - 2 r e^{-r^2}
        lhs += t.coefficient * (moment(t.power, t.width) - 2.0 * moment(t.power, t.width + 1.0));
    }
    lhs *= omega;
    // f_4(r/2) r^3 = 4 r (1 - 2 e^{-r^2/4})
    const double rhs = -pi * pi * omega * 4.0 *
                       (moment(probe.k, probe.a) - 2.0 * moment(probe.k, probe.a + 0.25));
    return {lhs, rhs, std::abs(lhs - rhs), 0.0};
}

// ---------------------------------------------------------------------------
// Continuity of f_d as a tempered distribution

/// sup_r (1 + r^{2d}) |c probe(r)|, by a log-grid scan refined with Brent.
inline double probe_seminorm(const SchwartzProbe& probe, double scale = 1.0)
{
    probe.validate();
    auto g = [&](double log_r) {
        const double r = std::exp(log_r);
        return -(1.0 + std::pow(r, 2 * probe.d)) * probe(r);
    };
    double best_x = -10.0;
    double best = g(best_x);
    constexpr int n = 400;
    for (int i = 1; i <= n; ++i) {
        const double x = -10.0 + 14.0 * i / n;
        if (g(x) < best) {
            best = g(x);
            best_x = x;
        }
    }
    const double step = 14.0 / n;
    std::uintmax_t iterations = 100;
    const auto [x_min, f_min] =
        boost::math::tools::brent_find_minima(g, best_x - step, best_x + step, 52, iterations);
    // The scan's lower edge covers k = 0, where the supremum is approached at r -> 0 (value 1).
    return std::abs(scale) * std::max({-f_min, -best, probe.k == 0 ? 1.0 : 0.0});
}

struct ContinuityCheck {
    double pairing = 0.0;      // |<f_d, c probe>|
    double constant = 0.0;     // C_d
    double seminorm = 0.0;     // sup (1 + r^{2d}) |c probe|
    bool holds = false;
};

inline ContinuityCheck continuity_bound_check(int d, const SchwartzProbe& probe, double scale = 1.0)
{
    const RadialEigenfunction fn(d);
    ContinuityCheck out;
    auto w = [&](double r) {
        const double p = probe(r);
        return p == 0.0 ? 0.0 : fn.f_weighted(r) * p;
    };
    out.pairing = std::abs(scale * detail::pair_weighted(d, w, fn.sign_change_radius()).value);
    out.constant = tempered_constant(fn);
    out.seminorm = probe_seminorm(probe, scale);
    out.holds = out.pairing <= out.constant * out.seminorm;
    return out;
}

struct SPrimeGap {
    double alpha = 0.0;
    double gap = 0.0;     // <f_d, probe> - <f_d^alpha, probe>
    double bound = 0.0;   // C_d^alpha sup (1 + r^{2d}) |probe|
};

/// Distance between f_d^alpha and f_d tested against one probe, with its a-priori bound.
inline std::vector<SPrimeGap> sprime_convergence(int d, const SchwartzProbe& probe,
                                                 const std::vector<double>& alphas)
{
    const RadialEigenfunction fn(d);
    const double seminorm = probe_seminorm(probe);
    std::vector<SPrimeGap> out;
    for (double alpha : alphas) {
        auto w = [&](double r) {
            const double p = probe(r);
            return p == 0.0 ? 0.0 : -std::expm1(-alpha * r * r) * fn.f_weighted(r) * p;
        };
        const double gap = detail::pair_weighted(d, w, 1.0).value;
        out.push_back({alpha, gap, tempered_constant_alpha(fn, alpha) * seminorm});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Uniform bound on F[f_d^alpha]

struct BoundCheck {
    int d = 0;
    std::vector<double> alpha_grid;
    std::vector<double> rho_grid;
    double fitted_A = 0.0;
    double fitted_B = 0.0;
    double max_violation_ratio = 0.0;
    double worst_rho = 0.0;
    double worst_alpha = 0.0;
};

namespace detail {

struct Envelope {
    double rho;
    double value;   // max over alpha of |F[f_d^alpha](rho)|
    double alpha;   // where the max is attained
};

/// Minimal (A, B) >= 0 with A/rho^2 + B rho^4 >= y at every point, minimising
/// sum (A/rho^2 + B rho^4)/y. The LP optimum sits on a vertex of the feasible
/// region, so enumerate one- and two-constraint vertices.
inline std::pair<double, double> fit_envelope(const std::vector<Envelope>& pts)
{
    auto feasible = [&](double A, double B) {
        for (const auto& p : pts) {
            const double bound = A / (p.rho * p.rho) + B * std::pow(p.rho, 4);
            if (bound < p.value * (1.0 - 1e-12)) {
                return false;
            }
        }
        return A >= 0.0 && B >= 0.0;
    };
    auto cost = [&](double A, double B) {
        double s = 0.0;
        for (const auto& p : pts) {
            s += (A / (p.rho * p.rho) + B * std::pow(p.rho, 4)) / p.value;
        }
        return s;
    };
    std::vector<std::pair<double, double>> candidates;
    double a_only = 0.0;
    double b_only = 0.0;
    for (const auto& p : pts) {
        a_only = std::max(a_only, p.value * p.rho * p.rho);
        b_only = std::max(b_only, p.value / std::pow(p.rho, 4));
    }
    candidates.emplace_back(a_only, 0.0);
    candidates.emplace_back(0.0, b_only);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            // A u_i + B v_i = y_i, A u_j + B v_j = y_j
            const double ui = 1.0 / (pts[i].rho * pts[i].rho), vi = std::pow(pts[i].rho, 4);
            const double uj = 1.0 / (pts[j].rho * pts[j].rho), vj = std::pow(pts[j].rho, 4);
            const double det = ui * vj - uj * vi;
            if (det == 0.0) {
                continue;
            }
            const double A = (pts[i].value * vj - pts[j].value * vi) / det;
            const double B = (ui * pts[j].value - uj * pts[i].value) / det;
            candidates.emplace_back(A, B);
        }
    }
    std::pair<double, double> best{a_only, 0.0};
    double best_cost = cost(a_only, 0.0);
    for (const auto& [A, B] : candidates) {
        if (feasible(A, B) && cost(A, B) < best_cost) {
            best_cost = cost(A, B);
            best = {A, B};
        }
    }
    return best;
}

} // namespace detail

/// Calibrate (A, B) on the even-indexed rho values (max over alpha), then test
/// |F[f_d^alpha]| <= 2A/rho^2 + 2B rho^4 on the odd-indexed ones. A single rho
/// serves as both halves.
inline BoundCheck uniform_bound_check(int d, const std::vector<double>& alpha_grid,
                                      const std::vector<double>& rho_grid)
{
    if (alpha_grid.empty() || rho_grid.empty()) {
        detail::raise<PreconditionError>("uniform_bound_check", "grids must be nonempty");
    }
    for (double a : alpha_grid) {
        if (!(a > 0.0 && a <= 1.0)) {
            detail::raise<PreconditionError>("uniform_bound_check", "alpha must lie in (0, 1]");
        }
    }
    for (double r : rho_grid) {
        if (!(r > 0.0)) {
            detail::raise<PreconditionError>("uniform_bound_check", "rho must be > 0");
        }
    }
    std::vector<detail::Envelope> calibration;
    std::vector<detail::Envelope> holdout;
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        detail::Envelope e{rho_grid[i], 0.0, alpha_grid.front()};
        for (double alpha : alpha_grid) {
            const double v = std::abs(f_hat_alpha(d, alpha, rho_grid[i]));
            if (v > e.value) {
                e.value = v;
                e.alpha = alpha;
            }
        }
        (i % 2 == 0 ? calibration : holdout).push_back(e);
    }
    if (holdout.empty()) {
        holdout = calibration;
    }
    BoundCheck out;
    out.d = d;
    out.alpha_grid = alpha_grid;
    out.rho_grid = rho_grid;
    std::tie(out.fitted_A, out.fitted_B) = detail::fit_envelope(calibration);
    for (const auto& e : holdout) {
        const double bound = 2.0 * out.fitted_A / (e.rho * e.rho) + 2.0 * out.fitted_B * std::pow(e.rho, 4);
        const double ratio = e.value / bound;
        if (ratio > out.max_violation_ratio) {
            out.max_violation_ratio = ratio;
            out.worst_rho = e.rho;
            out.worst_alpha = e.alpha;
        }
    }
    return out;
}

} // namespace fourier_eigen
