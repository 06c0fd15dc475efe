#include "mathverify/ground_truth.hpp"

#include "mathverify/errors.hpp"
#include "mathverify/evaluate.hpp"

namespace mathverify {

Rational reference_to_rational(const ReferenceValue& ref) {
    return Rational::from_string(ref.digits);
}

namespace {

// Largest k in [0, D] with |err| * 10^k <= |scale| (scale = |ref| for the
// relative rule, 1 for the absolute rule). Exact rational comparisons.
int largest_matching_k(const Rational& err, const Rational& scale, int d) {
    for (int k = d; k >= 1; --k) {
        if (err * Rational::pow10(k) <= scale) return k;
    }
    return 0;
}

void require_precision(const BigFloat& candidate, const ReferenceValue& ref) {
    if (candidate.precision() < ref.verified_digits + 10)
        throw InsufficientPrecisionError(
            "candidate carries " + std::to_string(candidate.precision()) +
            " digits; need at least D + 10 = " +
            std::to_string(ref.verified_digits + 10));
}

}  // namespace

int digits_match(const BigFloat& candidate, const ReferenceValue& ref) {
    require_precision(candidate, ref);
    Rational r = reference_to_rational(ref);
    Rational c = candidate.to_rational();
    if (r.is_zero()) return largest_matching_k(c.abs(), Rational(1), ref.verified_digits);
    return largest_matching_k((c - r).abs(), r.abs(), ref.verified_digits);
}

int digits_match_absolute(const BigFloat& candidate, const ReferenceValue& ref) {
    require_precision(candidate, ref);
    Rational r = reference_to_rational(ref);
    Rational c = candidate.to_rational();
    return largest_matching_k((c - r).abs(), Rational(1), ref.verified_digits);
}

GroundTruthResult verify_ground_truth(const GroundTruthSpec& spec,
                                      const Expression& e,
                                      const AdmissibilityPolicy& policy,
                                      int eval_digits) {
    GroundTruthResult result;
    AdmissibilityReport adm = check_admissibility(e, policy);
    if (!adm.admissible) {
        result.verdict = Verdict::inadmissible;
        for (const auto& v : adm.violations)
            result.diagnostics.push_back(v.rule + " at " + v.node_path + ": " + v.message);
        return result;
    }
    if (spec.points.empty()) {
        result.verdict = Verdict::error;
        result.diagnostics.push_back("ground-truth spec has no points");
        return result;
    }

    bool all_pass = true;
    for (size_t i = 0; i < spec.points.size(); ++i) {
        const GridPoint& point = spec.points[i];
        const int d = point.reference.verified_digits;
        const int digits = std::max(eval_digits, d + 10);
        BigFloat value(0L, 1);
        try {
            value = evaluate(e, point.bindings, digits);
        } catch (const InstabilityError& ex) {
            result.verdict = Verdict::undecided;
            result.diagnostics.push_back("point " + std::to_string(i) + ": " + ex.what());
            return result;
        } catch (const std::exception& ex) {
            result.verdict = Verdict::error;
            result.diagnostics.push_back("point " + std::to_string(i) + ": " + ex.what());
            return result;
        }
        int matched = spec.absolute_semantics
                          ? digits_match_absolute(value, point.reference)
                          : digits_match(value, point.reference);
        result.matched.push_back(matched);
        int required = std::min(20, d);
        if (matched < required) {
            all_pass = false;
            result.diagnostics.push_back("point " + std::to_string(i) + ": matched " +
                                         std::to_string(matched) + " < required " +
                                         std::to_string(required));
        }
    }
    result.verdict = all_pass ? Verdict::pass : Verdict::fail;
    return result;
}

}  // namespace mathverify
