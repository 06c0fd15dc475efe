#include "mathverify/kakeya.hpp"

#include <algorithm>

#include "mathverify/bigfloat.hpp"
#include "mathverify/errors.hpp"

namespace mathverify {

namespace {

void require_well_formed(const KakeyaInstance& instance,
                         const KakeyaCandidate& candidate) {
    if (instance.slope_count < 1)
        throw CandidateError("instance needs at least one slope");
    if (candidate.intercepts.size() != static_cast<size_t>(instance.slope_count))
        throw CandidateError("expected " + std::to_string(instance.slope_count) +
                             " intercepts, got " +
                             std::to_string(candidate.intercepts.size()));
}

}  // namespace

Rational union_length_at(const KakeyaInstance& instance,
                         const KakeyaCandidate& candidate, const Rational& x) {
    require_well_formed(instance, candidate);
    const int n = instance.slope_count;
    const Rational delta = instance.delta();
    const Rational taper = delta * (Rational(1) - x);  // cross-section width

    std::vector<std::pair<Rational, Rational>> spans;
    spans.reserve(n);
    for (int i = 0; i < n; ++i) {
        Rational hi = instance.slope(i) * x + candidate.intercepts[i];
        spans.emplace_back(hi - taper, hi);
    }
    std::sort(spans.begin(), spans.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    Rational total(0);
    Rational cur_lo = spans[0].first;
    Rational cur_hi = spans[0].second;
    for (int i = 1; i < n; ++i) {
        if (spans[i].first <= cur_hi) {
            if (spans[i].second > cur_hi) cur_hi = spans[i].second;
        } else {
            total += cur_hi - cur_lo;
            cur_lo = spans[i].first;
            cur_hi = spans[i].second;
        }
    }
    total += cur_hi - cur_lo;
    return total;
}

Rational union_area_exact(const KakeyaInstance& instance,
                          const KakeyaCandidate& candidate) {
    require_well_formed(instance, candidate);
    const int n = instance.slope_count;
    const Rational delta = instance.delta();

    // Edge lines y = alpha x + beta: upper edge of triangle i and lower
    // edge (slope a_i + delta through b_i - delta at x = 0).
    std::vector<std::pair<Rational, Rational>> lines;
    lines.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        const Rational a = instance.slope(i);
        const Rational& b = candidate.intercepts[i];
        lines.emplace_back(a, b);
        lines.emplace_back(a + delta, b - delta);
    }

    // Each pairwise crossing in (0,1) is a potential kink of the union
    // length. Over-collecting (crossings that change nothing) is harmless.
    std::vector<Rational> events;
    events.push_back(Rational(0));
    events.push_back(Rational(1));
    const Rational zero(0), one(1);
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const Rational da = lines[i].first - lines[j].first;
            if (da.is_zero()) continue;
            Rational xs = (lines[j].second - lines[i].second) / da;
            if (zero < xs && xs < one) events.push_back(std::move(xs));
        }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    // The union length is affine between consecutive events, so the
    // trapezoid rule is exact there.
    Rational area(0);
    Rational prev_x = events[0];
    Rational prev_len = union_length_at(instance, candidate, prev_x);
    for (size_t k = 1; k < events.size(); ++k) {
        Rational len = union_length_at(instance, candidate, events[k]);
        area += (events[k] - prev_x) * (prev_len + len);
        prev_x = events[k];
        prev_len = std::move(len);
    }
    return area / Rational(2);
}

KakeyaResult verify_kakeya(const KakeyaInstance& instance,
                           const KakeyaCandidate& candidate,
                           const Rational& baseline) {
    KakeyaResult result;
    result.area = union_area_exact(instance, candidate);
    result.area_decimal = BigFloat::from_rational(result.area, 20).to_decimal();
    if (result.area < baseline) {
        result.verdict = Verdict::pass;
        if (!baseline.is_zero())
            result.relative_improvement = (baseline - result.area) / baseline.abs();
        result.diagnostics.push_back("area strictly below baseline");
    } else {
        result.verdict = Verdict::fail;
        result.diagnostics.push_back(
            result.area == baseline
                ? "area equals the baseline; strict improvement is required"
                : "area does not beat the baseline");
    }
    return result;
}

}  // namespace mathverify
