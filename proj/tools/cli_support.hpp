#pragma once

// Pieces of the command-line front end that are worth testing on their own:
// grid parsing, the thread-count policy, exit codes and the table writers.

#include "fourier_eigen/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fourier_eigen::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, numerical_error = 3 };

inline constexpr int schema_version = 1;

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log = false;

    [[nodiscard]] std::vector<double> points() const
    {
        std::vector<double> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) {
            const double s = (count == 1) ? 0.0 : static_cast<double>(i) / (count - 1);
            out.push_back(log ? min * std::pow(max / min, s) : min + (max - min) * s);
        }
        if (count > 1) {
            out.back() = max;  // exact endpoint regardless of rounding
        }
        return out;
    }
};

/// Parses MIN:MAX:COUNT[:log|:linear]; throws std::invalid_argument on malformed input.
inline GridSpec parse_grid(const std::string& text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) {
            break;
        }
        start = colon + 1;
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw std::invalid_argument("grid must look like MIN:MAX:COUNT[:log]");
    }
    GridSpec g;
    std::size_t used = 0;
    try {
        g.min = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("min");
        g.max = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("max");
        g.count = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("count");
    } catch (const std::exception&) {
        throw std::invalid_argument("grid bounds and count must be numbers: " + text);
    }
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            g.log = true;
        } else if (parts[3] != "linear") {
            throw std::invalid_argument("grid spacing must be 'log' or 'linear'");
        }
    }
    if (g.count < 1) {
        throw std::invalid_argument("grid count must be >= 1");
    }
    if (!(g.min < g.max)) {
        throw std::invalid_argument("grid needs MIN < MAX");
    }
    if (g.log && !(g.min > 0.0)) {
        throw std::invalid_argument("log grid needs MIN > 0");
    }
    return g;
}

/// FOURIER_EIGEN_THREADS caps parallelism; unset, empty or 0 means hardware concurrency.
inline int resolve_threads(const char* env_value)
{
    int requested = 0;
    if (env_value != nullptr && *env_value != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env_value, &end, 10);
        if (*end != '\0' || v < 0) {
            throw std::invalid_argument("FOURIER_EIGEN_THREADS must be a non-negative integer");
        }
        requested = static_cast<int>(v);
    }
    if (requested == 0) {
        requested = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    return requested;
}

/// A rectangular numeric table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline void write_table_csv(std::ostream& os, const Table& t)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_real(row[i]);
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json table_json(const Table& t)
{
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) {
            r[t.columns[i]] = row[i];
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::ordered_json report_json(const VerificationReport& report, bool timings)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json r;
        r["id"] = c.id;
        r["reference"] = c.reference;
        r["residual"] = c.residual;
        r["tolerance"] = c.tolerance;
        r["passed"] = c.passed;
        if (timings) {
            r["runtime_ms"] = c.runtime_ms;
        }
        r["detail"] = c.detail;
        checks.push_back(std::move(r));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", report.checks.size()},
                    {"passed", report.passed_count()},
                    {"failed", report.failed_count()}};
    return j;
}

} // namespace fourier_eigen::cli
