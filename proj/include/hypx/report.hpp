#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypx/series.hpp"

namespace hypx {

/// Structured series description: {"upper": [...], "lower": [...],
/// "weight": [...], "scale": "..."} with rational strings throughout;
/// "weight" lists coefficients constant-term first and defaults to [ "1" ],
/// "scale" to "1".
WeightedSeries<Rational> parse_series_description(const std::string& json_text);
std::string series_description_json(const WeightedSeries<Rational>& s);

/// Outcome of one identity verification, serializable as a JSON line.
struct VerificationReport {
    std::string identity;
    unsigned k = 0;
    std::map<std::string, std::string> params;
    unsigned order = 0;
    std::string mode = "exact";  // "exact" | "numeric"
    bool pass = false;

    struct Mismatch {
        unsigned index = 0;
        std::string lhs, rhs;
    };
    std::optional<Mismatch> first_mismatch;

    std::optional<std::uint64_t> seed;
    std::optional<int> size_n;            // summation cases: N
    std::optional<int> size_m;            // summation cases: m
    std::optional<std::string> variant;   // summation cases: "i" / "ii"
    double elapsed_ms = 0.0;
};

/// One JSON object per line; elapsed_ms is excluded from the determinism
/// contract but still emitted.
std::string to_json_line(const VerificationReport& r);
std::string emit_report(const std::vector<VerificationReport>& reports,
                        const std::string& format);

}  // namespace hypx
