#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mathverify/admissibility.hpp"
#include "mathverify/constructions.hpp"
#include "mathverify/ground_truth.hpp"

namespace mathverify {

enum class Mode { ground_truth_computable, benchmark_best_known, new_construction };

std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);  // throws ManifestError

enum class OutputType { constant, function, construction, formula };

std::string_view output_type_name(OutputType t);
OutputType output_type_from_name(std::string_view name);

/// The eight taxonomy labels a manifest's `domain` must use.
const std::vector<std::string>& taxonomy_domains();

/// Validator ids the registry can bind to.
const std::vector<std::string>& known_validators();

struct SourceInfo {
    std::string citation;
    std::string url;
};

/// Declarative description of one benchmark problem. Loading is strict:
/// unknown fields, unknown enum values and a mode payload that does not
/// match `mode` are rejected.
struct ProblemManifest {
    int schema_version = 1;
    std::string id;
    std::string title;
    std::string statement;
    std::string domain;
    OutputType output_type = OutputType::constant;
    Mode mode = Mode::ground_truth_computable;
    int solvability = 0;
    SourceInfo source;

    std::optional<GroundTruthSpec> ground_truth;        // ground-truth mode
    std::optional<BaselineSpec> baseline;               // benchmark mode
    std::optional<std::string> validator;               // benchmark/construction
    nlohmann::json validator_params;                    // validator-specific

    AdmissibilityPolicy admissibility = AdmissibilityPolicy::defaults();

    std::string manifest_hash;  // fnv1a64 of the file bytes
};

ProblemManifest load_manifest(const std::filesystem::path& path);
ProblemManifest parse_manifest(const std::string& bytes);  // throws ManifestError

/// Truncates a decimal string to at most `figures` significant figures
/// (no rounding). Used so full reference digits never reach a prompt.
std::string truncate_significant(const std::string& decimal, int figures);

/// Human-readable problem statement. Any stored reference or baseline
/// value appears with at most five significant figures.
std::string render_prompt(const ProblemManifest& m);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mathverify
