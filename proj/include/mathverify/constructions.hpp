#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mathverify/rational.hpp"
#include "mathverify/report.hpp"

namespace mathverify {

/// Result of a deterministic construction check. `metric` is present
/// exactly when the problem declares an objective, and is always exact.
struct ValidationOutcome {
    bool valid = false;
    std::optional<Rational> metric;
    std::vector<std::string> diagnostics;
};

enum class Direction { minimize, maximize };

struct BaselineSpec {
    Rational value;          // decimals in manifests are parsed to exact rationals
    std::string value_text;  // original decimal spelling, for prompt rendering
    Direction direction = Direction::minimize;
    std::string source_note;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// (n,k) difference triangle set: n rows of k+1 entries, each row
/// 0 = a_{i,0} < a_{i,1} < ... < a_{i,k}, and all within-row differences
/// a_{i,j} - a_{i,j'} (j' < j) distinct across the whole array.
/// Metric: scope, the maximum entry.
ValidationOutcome validate_dts(int n, int k, const IntMatrix& rows);

/// Entries in {+1,-1} and M * M^T = n * I, checked in exact integers.
ValidationOutcome validate_hadamard(const IntMatrix& matrix);

/// Every square Latin on symbols 0..n-1 and every unordered pair
/// orthogonal (all n^2 superposition pairs distinct).
ValidationOutcome validate_mols(int order, const std::vector<IntMatrix>& squares);

struct ScoreResult {
    Verdict verdict = Verdict::fail;
    std::optional<Rational> relative_improvement;
    std::vector<std::string> diagnostics;
};

/// Strict-improvement rule: PASS only when the construction is valid and
/// the metric strictly beats the baseline in its direction; ties fail.
ScoreResult score_against_baseline(const ValidationOutcome& outcome,
                                   const BaselineSpec& baseline);

}  // namespace mathverify
