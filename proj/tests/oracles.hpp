#pragma once

// Test-side oracles, written independently of the library code paths they
// check. Values frozen in the tests were produced by these.

#include <string>
#include <vector>

#include "mathverify/kakeya.hpp"
#include "mathverify/rational.hpp"

namespace oracles {

/// First `digits` significant digits of pi as "3.1415..." (truncated),
/// from a Machin-formula integer spigot.
std::string pi_digits(int digits);

/// Euler's constant via Euler-Maclaurin at N = 2^20 with Bernoulli
/// corrections, as an exact scaled rational; |result - gamma| < 1e-38.
mathverify::Rational euler_gamma();

/// Decimal expansion of num/den to `digits` significant digits
/// (truncated), e.g. long_division(355, 113, 9) == "3.14159292".
std::string long_division(long num, long den, int digits);

/// Direct-definition difference-triangle-set check (shape + multiset of
/// differences), written from the definition with containers.
bool dts_valid_brute(int n, int k, const std::vector<std::vector<long long>>& rows);

/// Union area by uniform-grid numerical integration in doubles;
/// steps ~ 2^15 keeps the error well under 1e-6 for small instances.
double kakeya_area_grid(const mathverify::KakeyaInstance& instance,
                        const mathverify::KakeyaCandidate& candidate, int steps);

}  // namespace oracles
