#pragma once

#include <map>
#include <string>
#include <vector>

#include "mathverify/admissibility.hpp"
#include "mathverify/bigfloat.hpp"
#include "mathverify/expr.hpp"
#include "mathverify/report.hpp"

namespace mathverify {

/// High-precision reference stored as a decimal digit string (never a
/// binary float) plus the count of significand digits guaranteed correct.
struct ReferenceValue {
    std::string digits;       // e.g. "1.349358983e-3"
    int verified_digits = 1;  // D
};

Rational reference_to_rational(const ReferenceValue& ref);

struct GridPoint {
    std::map<std::string, Rational> bindings;
    ReferenceValue reference;
};

struct GroundTruthSpec {
    enum class Kind { constant, function_grid };
    Kind kind = Kind::constant;
    std::vector<GridPoint> points;  // exactly one for Kind::constant
    bool absolute_semantics = false;
};

/// Largest k <= D with |candidate - ref| <= 10^(-k) * |ref| (relative,
/// significant-digit semantics); for ref = 0 the criterion is
/// |candidate| <= 10^(-k). The comparison is exact rational arithmetic.
/// Requires candidate precision >= D + 10.
int digits_match(const BigFloat& candidate, const ReferenceValue& ref);

/// Manifest-level override: places after the decimal point instead of
/// significant digits.
int digits_match_absolute(const BigFloat& candidate, const ReferenceValue& ref);

struct GroundTruthResult {
    Verdict verdict = Verdict::fail;
    std::vector<int> matched;  // per grid point, aligned with spec.points
    std::vector<std::string> diagnostics;
};

/// PASS iff the expression is admissible and matches every grid point to
/// min(20, D) digits. Inadmissibility, instability and evaluation failures
/// become verdicts, never exceptions.
GroundTruthResult verify_ground_truth(const GroundTruthSpec& spec,
                                      const Expression& e,
                                      const AdmissibilityPolicy& policy,
                                      int eval_digits);

}  // namespace mathverify
