#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mathverify/manifest.hpp"
#include "mathverify/ramsey.hpp"
#include "mathverify/report.hpp"

namespace mathverify {

inline constexpr std::string_view kEngineVersion = "0.1.0";

struct EngineOptions {
    int precision = 120;                       // evaluation digits
    Rational lambda_min = Rational(1, 1000000);
    RefinementLimits ramsey_limits;
    int ramsey_precision = 60;                 // interval digits for the certifier
};

/// Evaluates one candidate file against one problem. Malformed candidates
/// become verdict ERROR with diagnostics; this never throws on bad input.
EvaluationReport run_verification(const ProblemManifest& manifest,
                                  const std::filesystem::path& candidate_path,
                                  const EngineOptions& options);

struct BatchResult {
    std::vector<EvaluationReport> reports;      // sorted by problem id
    std::map<std::string, int> summary;         // verdict -> count
    std::vector<std::string> warnings;
};

/// Pairs manifests with candidates by problem id: a candidate file matches
/// when its stem is `<id>` or starts with `<id>__`. With several matches
/// the lexicographically later file wins (with a warning).
BatchResult batch_run(const std::filesystem::path& manifest_dir,
                      const std::filesystem::path& candidates_dir,
                      const EngineOptions& options);

nlohmann::json batch_to_canonical_json(const BatchResult& batch);

/// 0 all PASS; 1 any FAIL; 2 any INADMISSIBLE (no FAIL); 3 any UNDECIDED
/// (no FAIL/INADMISSIBLE); 4 any ERROR otherwise.
int exit_code_for(const std::vector<EvaluationReport>& reports);

}  // namespace mathverify
