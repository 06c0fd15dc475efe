#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mathverify {

enum class Verdict { pass, fail, inadmissible, undecided, error };

std::string_view verdict_name(Verdict v);

/// Outcome of one (manifest, candidate) evaluation. Canonical serialization
/// uses sorted keys and renders every number as a string; the duration is
/// excluded so identical inputs produce byte-identical reports.
struct EvaluationReport {
    std::string problem_id;
    std::string mode;
    Verdict verdict = Verdict::error;

    std::optional<int> matched_digits_min;
    std::vector<int> matched_digits;              // per grid point
    std::optional<std::string> metric;            // exact rational
    std::optional<std::string> metric_decimal;    // 20 significant digits
    std::optional<std::string> relative_improvement;
    std::optional<std::string> certified_margin;
    std::optional<std::string> bound_value;       // ramsey: resulting c

    std::vector<std::string> diagnostics;
    double duration_seconds = 0.0;
    std::string engine_version;
    std::string manifest_hash;
};

nlohmann::json report_to_canonical_json(const EvaluationReport& r);
std::string report_to_text(const EvaluationReport& r);

}  // namespace mathverify
