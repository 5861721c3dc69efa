#pragma once

// Pass/fail records for the verification suites. Serialization to CSV lives
// here; JSON is left to the front end.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace fourier_eigen {

struct CheckRecord {
    std::string id;
    std::string reference;   // where the checked identity comes from
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    [[nodiscard]] int passed_count() const
    {
        int n = 0;
        for (const auto& c : checks) {
            n += c.passed ? 1 : 0;
        }
        return n;
    }
    [[nodiscard]] int failed_count() const { return static_cast<int>(checks.size()) - passed_count(); }
    [[nodiscard]] bool all_passed() const { return failed_count() == 0; }
};

/// Round-trip decimal: 17 significant digits.
inline std::string format_real(double v)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

/// Columns: suite,check,reference,residual,tolerance,passed[,runtime_ms],detail.
/// Timings are opt-in so that repeated runs produce identical bytes.
inline void write_csv(std::ostream& os, const VerificationReport& report, bool timings = false)
{
    os << "suite,check,reference,residual,tolerance,passed";
    if (timings) {
        os << ",runtime_ms";
    }
    os << ",detail\n";
    for (const auto& c : report.checks) {
        os << csv_field(report.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.reference) << ','
           << format_real(c.residual) << ',' << format_real(c.tolerance) << ',' << (c.passed ? "true" : "false");
        if (timings) {
            os << ',' << format_real(c.runtime_ms);
        }
        os << ',' << csv_field(c.detail) << '\n';
    }
}

} // namespace fourier_eigen
