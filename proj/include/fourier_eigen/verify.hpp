#pragma once

// The per-dimension verification suite: every identity the library can check
// for a given d, collected into one VerificationReport.

#include "fourier_eigen/distribution.hpp"
#include "fourier_eigen/eigenfunctions.hpp"
#include "fourier_eigen/parallel.hpp"
#include "fourier_eigen/radial_fourier.hpp"
#include "fourier_eigen/report.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace fourier_eigen {

struct VerifyOptions {
    double transform_tol = 1e-6;      // direct transform checks, relative
    double pairing_tol = 1e-7;        // distributional pairings, relative to |lhs| + |rhs|
    double decomposition_tol = 1e-7;  // F[f_d^alpha] against g_hat - h_hat
    int threads = 1;
};

/// n points from lo to hi, geometrically spaced.
inline std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return g;
}

namespace detail {

struct CheckSpec {
    std::string id;
    std::string reference;
    double tolerance;
    std::function<void(CheckRecord&)> run;   // fills residual, passed, detail
};

inline std::string short_real(double v)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", v);
    return buffer;
}

} // namespace detail

inline VerificationReport run_verification(int d, const VerifyOptions& opt = {})
{
    if (d < 1 || d > 8) {
        detail::raise<PreconditionError>("run_verification", "dimension must be in 1..8");
    }
    const RadialEigenfunction fn(d);
    const double lambda = -std::pow(2.0 * pi, 0.5 * d);
    std::vector<detail::CheckSpec> specs;

    specs.push_back({"phi_f_consistency", "phi_d against rescaled f_d", 1e-12, [&](CheckRecord& rec) {
        double worst = 0.0;
        for (double r : {0.3, 1.0, 3.0, 7.0}) {
            worst = std::max(worst, phi_from_f_consistency(fn, r) / std::abs(fn.phi(r)));
        }
        rec.residual = worst;
        rec.passed = worst <= rec.tolerance;
    }});

    if (d <= 3) {
        specs.push_back({"direct_transform", "F[phi_d] = -(2 pi)^{d/2} phi_d", opt.transform_tol,
                         [&](CheckRecord& rec) {
            const RadialTransformPlan plan(d);
            const auto profile = phi_d_profile(fn);
            double worst = 0.0;
            for (double rho : log_grid(0.2, 10.0, 25)) {
                const double phi = fn.phi(rho);
                worst = std::max(worst, std::abs(radial_fourier(plan, profile, rho) - lambda * phi) /
                                            (1.0 + std::abs(phi)));
            }
            rec.residual = worst;
            rec.passed = worst <= rec.tolerance;
        }});
        specs.push_back({"transform_relation", "F[f_d] = -pi^{d/2} f_d(./2)", opt.transform_tol,
                         [&](CheckRecord& rec) {
            const RadialTransformPlan plan(d);
            const auto profile = f_d_profile(fn);
            double worst = 0.0;
            for (double rho : log_grid(0.2, 10.0, 25)) {
                const double expected = limit_f_hat(d, rho);
                worst = std::max(worst, std::abs(radial_fourier(plan, profile, rho) - expected) /
                                            std::abs(expected));
            }
            rec.residual = worst;
            rec.passed = worst <= rec.tolerance;
        }});
    }

    specs.push_back({"pairing", "<f_d, F[probe]> = <-pi^{d/2} f_d(./2), probe>", opt.pairing_tol,
                     [&](CheckRecord& rec) {
        double worst = 0.0;
        bool ok = true;
        for (double a : {1.0, 2.0}) {
            for (int k = 0; k <= 2; ++k) {
                const auto r = eigen_pairing_residual(d, SchwartzProbe{d, a, k});
                const double scale = std::abs(r.lhs) + std::abs(r.rhs);
                worst = std::max(worst, r.residual / scale);
                ok = ok && r.residual <= rec.tolerance * scale + 3.0 * r.quadrature_error_estimate;
            }
        }
        rec.residual = worst;
        rec.passed = ok;
        rec.detail = "6 probes a in {1,2}, k in {0,1,2}";
    }});

    specs.push_back({"decomposition", "F[f_d^alpha] = g_hat - h_hat", opt.decomposition_tol,
                     [&](CheckRecord& rec) {
        const RadialTransformPlan plan(d);
        double worst = 0.0;
        for (double alpha : {0.5, 0.1}) {
            const RegularizedFunction rf(fn, alpha);
            for (double rho : {0.5, 2.0}) {
                const double expected = f_hat_alpha(d, alpha, rho);
                const double direct = radial_fourier(plan, f_d_alpha_profile(rf), rho);
                worst = std::max(worst, std::abs(direct - expected) / std::abs(expected));
            }
        }
        rec.residual = worst;
        rec.passed = worst <= rec.tolerance;
    }});

    specs.push_back({"alpha_limit", "F[f_d^alpha](rho) -> -pi^{d/2} f_d(rho/2) as alpha -> 0", 1e-4,
                     [&](CheckRecord& rec) {
        // rho/2 = 1.5 lies beyond every sign change of f_d (r0 <= 1.15 for d <= 8),
        // so the relative gap is well defined.
        const double rho = 3.0;
        const double target = limit_f_hat(d, rho);
        double previous = HUGE_VAL;
        bool decreasing = true;
        double gap = 0.0;
        for (int e = 1; e <= 5; ++e) {
            gap = std::abs(f_hat_alpha(d, std::pow(10.0, -e), rho) - target) / std::abs(target);
            decreasing = decreasing && gap < previous;
            previous = gap;
        }
        rec.residual = gap;
        rec.passed = decreasing && gap < rec.tolerance;
        rec.detail = decreasing ? "strictly decreasing" : "not monotone";
    }});

    specs.push_back({"lp_table", "L^p membership of f_d", 0.0, [&](CheckRecord& rec) {
        int mismatches = 0;
        for (int p = 1; p <= 5; ++p) {
            const auto exact = lp_membership(d, p);
            const auto probe = integrability_probe(d, p);
            mismatches += (exact.member != probe.verdict.member || exact.reason != probe.verdict.reason) ? 1 : 0;
        }
        std::string members;
        for (int p = 1; p <= 10; ++p) {
            if (lp_membership(d, p).member) {
                members += (members.empty() ? "" : " ") + std::to_string(p);
            }
        }
        rec.residual = mismatches;
        rec.passed = mismatches == 0;
        rec.detail = "members p<=10: " + (members.empty() ? std::string("none") : members);
    }});

    specs.push_back({"asymptotics_infinity", "f_d(r) r^2 -> 1", 0.01, [&](CheckRecord& rec) {
        rec.residual = std::abs(fn.f(30.0) * 900.0 - 1.0);
        rec.passed = rec.residual <= rec.tolerance;
        rec.detail = "r = 30";
    }});

    specs.push_back({"asymptotics_origin", "near-zero law of f_d", d == 1 ? 1e-3 : (d == 2 ? 1e-6 : 0.01),
                     [&](CheckRecord& rec) {
        if (d == 1) {
            rec.residual = std::abs(fn.f(1e-5) + 2.0);
            rec.detail = "|f_1(1e-5) + 2|";
        } else if (d == 2) {
            const double r = 1e-4;
            rec.residual = std::abs(fn.f(r) - (2.0 * std::log(r) + euler_gamma));
            rec.detail = "|f_2(r) - 2 ln r - gamma| at r = 1e-4";
        } else {
            const double r = 1e-5;
            const double limit = -std::tgamma(1.0 - fn.delta());
            rec.residual = std::abs(fn.f(r) * std::pow(r, d - 2) / limit - 1.0);
            rec.detail = "f_d r^{d-2} / (-Gamma(1 - delta)) at r = 1e-5";
        }
        rec.passed = rec.residual <= rec.tolerance;
    }});

    specs.push_back({"uniform_bound", "|F[f_d^alpha]| <= A/rho^2 + B rho^4", 1.0, [&](CheckRecord& rec) {
        const auto b = uniform_bound_check(d, {1.0, 0.3, 0.1, 0.03, 0.01}, log_grid(0.1, 20.0, 20));
        rec.residual = b.max_violation_ratio;
        rec.passed = b.max_violation_ratio <= rec.tolerance;
        rec.detail = "A = " + detail::short_real(b.fitted_A) + ", B = " + detail::short_real(b.fitted_B);
    }});

    specs.push_back({"tempered_constant", "int |f_d| / (1 + |x|^{2d}) finite", 0.0, [&](CheckRecord& rec) {
        const double c = tempered_constant(fn);
        rec.residual = 0.0;
        rec.passed = std::isfinite(c) && c > 0.0;
        rec.detail = "C_d = " + detail::short_real(c);
    }});

    VerificationReport report;
    report.suite = "verify-d" + std::to_string(d);
    report.checks.resize(specs.size());
    parallel_for(specs.size(), opt.threads, [&](std::size_t i) {
        auto& rec = report.checks[i];
        rec.id = specs[i].id;
        rec.reference = specs[i].reference;
        rec.tolerance = specs[i].tolerance;
        const auto start = std::chrono::steady_clock::now();
        specs[i].run(rec);
        rec.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });
    return report;
}

} // namespace fourier_eigen
