// fourier_eigen: evaluate, transform and verify the radial Fourier
// eigenfunction family from the command line.
//
//   fourier_eigen eval      --fn f_d --d 4 --grid 1:10:10
//   fourier_eigen verify    --d 2 --format json --out report.json
//   fourier_eigen transform --fn f_d --d 3 --grid 0.2:10:40:log --compare
//   fourier_eigen thermal   --t 1
//   fourier_eigen report    --format csv
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 numerical or convergence error.

#include "cli_support.hpp"

#include "fourier_eigen/fourier_eigen.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fe = fourier_eigen;
namespace cli = fourier_eigen::cli;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    int d = 2;
    std::string grid;
    std::string fn;
    double delta = 0.0;
    double alpha = 0.1;
    double a = 1.0;
    double t = 1.0;
    bool compare = false;
    bool timings = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Writes the rendered document to --out or stdout.
void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file " + cfg.out);
    }
    file << text;
}

std::vector<double> grid_or(const RunConfig& cfg, const std::string& fallback)
{
    try {
        return cli::parse_grid(cfg.grid.empty() ? fallback : cfg.grid).points();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string render_table(const RunConfig& cfg, const std::string& command, json meta, const cli::Table& table)
{
    std::ostringstream os;
    if (cfg.format == "json") {
        json doc;
        doc["schema_version"] = cli::schema_version;
        doc["command"] = command;
        for (auto& [k, v] : meta.items()) {
            doc[k] = v;
        }
        doc["columns"] = table.columns;
        doc["rows"] = cli::table_json(table);
        os << doc.dump(2) << '\n';
    } else {
        cli::write_table_csv(os, table);
    }
    return os.str();
}

/// Evaluates fn at every grid point in parallel; rows stay in grid order.
template <class Fn>
cli::Table tabulate(const std::vector<double>& xs, int threads, std::vector<std::string> columns, Fn&& fn)
{
    cli::Table table{std::move(columns), std::vector<std::vector<double>>(xs.size())};
    fe::parallel_for(xs.size(), threads, [&](std::size_t i) { table.rows[i] = fn(xs[i]); });
    return table;
}

void require_dimension(int d, int hi = 8)
{
    if (d < 1 || d > hi) {
        throw UsageError("--d must lie in 1.." + std::to_string(hi));
    }
}

int cmd_eval(const RunConfig& cfg, int threads)
{
    const auto xs = grid_or(cfg, "0.5:5:10");
    json meta;
    meta["fn"] = cfg.fn;
    std::function<double(double)> f;
    if (cfg.fn == "ei_delta" || cfg.fn == "g_delta" || cfg.fn == "h_delta") {
        const fe::DeltaExpEvaluator ev{fe::DeltaParam(cfg.delta)};
        meta["delta"] = cfg.delta;
        if (cfg.fn == "ei_delta") {
            f = [ev](double x) { return ev.ei(x); };
        } else if (cfg.fn == "g_delta") {
            f = [ev](double x) { return ev.g(x); };
        } else {
            f = [ev](double x) { return ev.h(x); };
        }
    } else if (cfg.fn == "phi_d" || cfg.fn == "f_d" || cfg.fn == "f_d_alpha") {
        require_dimension(cfg.d, 64);
        const fe::RadialEigenfunction fn(cfg.d);
        meta["d"] = cfg.d;
        if (cfg.fn == "phi_d") {
            f = [fn](double r) { return fn.phi(r); };
        } else if (cfg.fn == "f_d") {
            f = [fn](double r) { return fn.f(r); };
        } else {
            const fe::RegularizedFunction rf(fn, cfg.alpha);
            meta["alpha"] = cfg.alpha;
            f = [rf](double r) { return rf(r); };
        }
    } else if (cfg.fn == "e_th" || cfg.fn == "e_s") {
        const fe::LensState state(cfg.t);
        meta["t"] = cfg.t;
        if (cfg.fn == "e_th") {
            f = [state](double r) { return fe::e_th(state, r); };
        } else {
            f = [state](double rho) { return fe::e_s(state, rho); };
        }
    } else {
        throw UsageError("unknown --fn '" + cfg.fn +
                         "' (expected ei_delta, g_delta, h_delta, phi_d, f_d, f_d_alpha, e_th, e_s)");
    }
    const auto table = tabulate(xs, threads, {"argument", "value"},
                                [&](double x) { return std::vector<double>{x, f(x)}; });
    emit(cfg, render_table(cfg, "eval", meta, table));
    return cli::ok;
}

std::string render_reports(const RunConfig& cfg, const std::string& command,
                           const std::vector<fe::VerificationReport>& reports)
{
    std::ostringstream os;
    if (cfg.format == "json") {
        json doc;
        doc["schema_version"] = cli::schema_version;
        doc["command"] = command;
        auto suites = json::array();
        int total = 0;
        int passed = 0;
        for (const auto& r : reports) {
            suites.push_back(cli::report_json(r, cfg.timings));
            total += static_cast<int>(r.checks.size());
            passed += r.passed_count();
        }
        doc["suites"] = std::move(suites);
        doc["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}};
        os << doc.dump(2) << '\n';
    } else {
        // One CSV; the suite column tells the dimensions apart.
        bool header = true;
        for (const auto& r : reports) {
            std::ostringstream part;
            fe::write_csv(part, r, cfg.timings);
            std::string text = part.str();
            if (!header) {
                text.erase(0, text.find('\n') + 1);
            }
            header = false;
            os << text;
        }
    }
    return os.str();
}

fe::VerifyOptions verify_options(const RunConfig& cfg, int threads)
{
    fe::VerifyOptions opt;
    if (cfg.tol) {
        opt.transform_tol = *cfg.tol;
    }
    opt.threads = threads;
    return opt;
}

int cmd_verify(const RunConfig& cfg, int threads)
{
    require_dimension(cfg.d);
    const auto report = fe::run_verification(cfg.d, verify_options(cfg, threads));
    emit(cfg, render_reports(cfg, "verify", {report}));
    return report.all_passed() ? cli::ok : cli::verification_failed;
}

int cmd_report(const RunConfig& cfg, int threads)
{
    std::vector<fe::VerificationReport> reports(8);
    const auto opt = verify_options(cfg, 1);
    fe::parallel_for(reports.size(), threads,
                     [&](std::size_t i) { reports[i] = fe::run_verification(static_cast<int>(i) + 1, opt); });
    emit(cfg, render_reports(cfg, "report", reports));
    for (const auto& r : reports) {
        if (!r.all_passed()) {
            return cli::verification_failed;
        }
    }
    return cli::ok;
}

int cmd_transform(const RunConfig& cfg, int threads)
{
    const auto rhos = grid_or(cfg, "0.2:10:25:log");
    const double tol = cfg.tol.value_or(1e-6);
    json meta;
    meta["fn"] = cfg.fn;
    int d = cfg.d;
    fe::RadialProfile profile;
    std::function<double(double)> reference;
    if (cfg.fn == "f_d" || cfg.fn == "phi_d" || cfg.fn == "f_d_alpha") {
        require_dimension(d);
        const fe::RadialEigenfunction fn(d);
        if (cfg.fn == "f_d") {
            profile = fe::f_d_profile(fn);
            reference = [d](double rho) { return fe::limit_f_hat(d, rho); };
        } else if (cfg.fn == "phi_d") {
            profile = fe::phi_d_profile(fn);
            reference = [fn, d](double rho) { return fe::eigenvalue(d) * fn.phi(rho); };
        } else {
            const fe::RegularizedFunction rf(fn, cfg.alpha);
            meta["alpha"] = cfg.alpha;
            profile = fe::f_d_alpha_profile(rf);
            const double alpha = cfg.alpha;
            reference = [d, alpha](double rho) { return fe::f_hat_alpha(d, alpha, rho); };
        }
    } else if (cfg.fn == "gaussian") {
        require_dimension(d);
        profile = fe::gaussian_profile(cfg.a);
        meta["a"] = cfg.a;
        const double a = cfg.a;
        reference = [a, d](double rho) { return fe::gaussian_transform(a, d, rho); };
    } else if (cfg.fn == "e_th") {
        d = 2;
        const fe::LensState state(cfg.t);
        meta["t"] = cfg.t;
        profile = fe::e_th_profile(state);
        reference = [state](double rho) { return fe::pi * fe::e_s(state, 0.5 * rho); };
    } else {
        throw UsageError("unknown --fn '" + cfg.fn + "' (expected f_d, phi_d, f_d_alpha, gaussian, e_th)");
    }
    meta["d"] = d;
    const fe::RadialTransformPlan plan(d);
    std::vector<std::string> columns{"rho", "value"};
    if (cfg.compare) {
        columns.insert(columns.end(), {"reference", "residual"});
        meta["tolerance"] = tol;
    }
    const auto table = tabulate(rhos, threads, columns, [&](double rho) {
        const double v = fe::radial_fourier(plan, profile, rho);
        if (!cfg.compare) {
            return std::vector<double>{rho, v};
        }
        const double ref = reference(rho);
        return std::vector<double>{rho, v, ref, std::abs(v - ref) / std::abs(ref)};
    });
    emit(cfg, render_table(cfg, "transform", meta, table));
    if (cfg.compare) {
        for (const auto& row : table.rows) {
            if (!(row[3] <= tol)) {
                return cli::verification_failed;
            }
        }
    }
    return cli::ok;
}

int cmd_thermal(const RunConfig& cfg, int threads)
{
    if (!(cfg.t > 0.0)) {
        throw UsageError("--t must be > 0 (t = 0 gives identically zero fields)");
    }
    const double tol = cfg.tol.value_or(1e-4);
    const auto xs = grid_or(cfg, "0.2:4:25:log");
    const fe::LensState state(cfg.t);
    const auto fit = fe::fourier_consistency(state, xs);
    cli::Table full{{"x", "e_th", "e_s", "transform", "model"}, std::vector<std::vector<double>>(xs.size())};
    fe::parallel_for(xs.size(), threads, [&](std::size_t i) {
        const double x = xs[i];
        full.rows[i] = {x, fe::e_th(state, x), fe::e_s(state, x), fit.transform[i],
                        fit.amplitude * fe::e_s(state, fit.scale * x)};
    });
    std::ostringstream os;
    if (cfg.format == "json") {
        json doc;
        doc["schema_version"] = cli::schema_version;
        doc["command"] = "thermal";
        doc["t"] = cfg.t;
        doc["fit"] = {{"amplitude", fit.amplitude}, {"scale", fit.scale}, {"residual", fit.residual},
                      {"tolerance", tol}};
        json profiles;
        for (std::size_t c = 0; c < full.columns.size(); ++c) {
            std::vector<double> column;
            for (const auto& row : full.rows) {
                column.push_back(row[c]);
            }
            profiles[full.columns[c]] = column;
        }
        doc["profiles"] = std::move(profiles);
        os << doc.dump(2) << '\n';
    } else {
        full.columns.insert(full.columns.end(), {"amplitude", "scale", "residual"});
        for (auto& row : full.rows) {
            row.insert(row.end(), {fit.amplitude, fit.scale, fit.residual});
        }
        cli::write_table_csv(os, full);
    }
    emit(cfg, os.str());
    return fit.residual < tol ? cli::ok : cli::verification_failed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_grid)
{
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path (default: stdout)");
    sub->add_option("--tol", cfg.tol, "Tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--d", cfg.d, "Dimension");
    if (with_grid) {
        sub->add_option("--grid", cfg.grid, "MIN:MAX:COUNT[:log]");
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Radial Fourier eigenfunctions built on generalized exponential integrals"};
    app.set_config("--config", "", "TOML/INI file; keys go under [eval], [verify], ... sections");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* eval = app.add_subcommand("eval", "Tabulate a function over a grid");
    add_common(eval, cfg, true);
    eval->add_option("--fn", cfg.fn, "ei_delta, g_delta, h_delta, phi_d, f_d, f_d_alpha, e_th, e_s")->required();
    eval->add_option("--delta", cfg.delta, "Exponent delta < 2");
    eval->add_option("--alpha", cfg.alpha, "Regularization alpha > 0");
    eval->add_option("--t", cfg.t, "Thermal-lens time t >= 0");

    auto* verify = app.add_subcommand("verify", "Run the verification suite for one dimension");
    add_common(verify, cfg, false);
    verify->add_flag("--timings", cfg.timings, "Include per-check runtimes (output then varies run to run)");

    auto* transform = app.add_subcommand("transform", "Numerical radial Fourier transform over a rho grid");
    add_common(transform, cfg, true);
    transform->add_option("--fn", cfg.fn, "f_d, phi_d, f_d_alpha, gaussian, e_th")->required();
    transform->add_option("--alpha", cfg.alpha, "Regularization alpha > 0");
    transform->add_option("--a", cfg.a, "Gaussian width a > 0");
    transform->add_option("--t", cfg.t, "Thermal-lens time");
    transform->add_flag("--compare", cfg.compare, "Add reference and residual columns");

    auto* thermal = app.add_subcommand("thermal", "Thermal-lens profiles and the Fourier fit");
    add_common(thermal, cfg, true);
    thermal->add_option("--t", cfg.t, "Time t > 0");

    auto* report = app.add_subcommand("report", "Verification suites for d = 1..8");
    add_common(report, cfg, false);
    report->add_flag("--timings", cfg.timings, "Include per-check runtimes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? cli::ok : cli::usage_error;
    }

    try {
        const int threads = cli::resolve_threads(std::getenv("FOURIER_EIGEN_THREADS"));
        if (*eval) return cmd_eval(cfg, threads);
        if (*verify) return cmd_verify(cfg, threads);
        if (*transform) return cmd_transform(cfg, threads);
        if (*thermal) return cmd_thermal(cfg, threads);
        if (*report) return cmd_report(cfg, threads);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::usage_error;
    } catch (const fe::ConvergenceError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return cli::numerical_error;
    } catch (const fe::DivergenceError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return cli::numerical_error;
    } catch (const std::invalid_argument& e) {
        // Domain, precondition and unsupported-order errors are caller mistakes.
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::usage_error;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::usage_error;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return cli::numerical_error;
    }
    return cli::usage_error;
}
