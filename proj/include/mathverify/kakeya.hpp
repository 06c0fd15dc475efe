#pragma once

#include <string>
#include <vector>

#include "mathverify/constructions.hpp"
#include "mathverify/rational.hpp"
#include "mathverify/report.hpp"

namespace mathverify {

/// Family of N thin triangles: triangle i has slope i/N, base width
/// delta = 1/N on the vertical axis at x = 0, and tapers to a point at
/// x = 1. Slopes are fixed; only the intercepts vary.
struct KakeyaInstance {
    int slope_count = 128;

    Rational delta() const { return Rational(1, slope_count); }
    Rational slope(int i) const { return Rational(i, slope_count); }
};

struct KakeyaCandidate {
    std::vector<Rational> intercepts;  // exactly slope_count entries
};

/// Exact measure of the union of the N vertical cross-sections at x.
/// Cross-section i is [a_i x + b_i - delta (1 - x), a_i x + b_i].
Rational union_length_at(const KakeyaInstance& instance,
                         const KakeyaCandidate& candidate, const Rational& x);

/// Exact area of the union of the N triangles, by event-driven
/// piecewise-linear integration: between consecutive crossings of the 2N
/// edge lines the union length is affine, so trapezoids are exact.
Rational union_area_exact(const KakeyaInstance& instance,
                          const KakeyaCandidate& candidate);

struct KakeyaResult {
    Verdict verdict = Verdict::fail;
    Rational area;
    std::string area_decimal;  // 20 significant digits
    std::optional<Rational> relative_improvement;
    std::vector<std::string> diagnostics;
};

/// Strict improvement against the baseline area (exact comparison).
KakeyaResult verify_kakeya(const KakeyaInstance& instance,
                           const KakeyaCandidate& candidate,
                           const Rational& baseline);

}  // namespace mathverify
