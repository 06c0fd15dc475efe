#pragma once

#include <map>
#include <string>

#include "mathverify/bigfloat.hpp"
#include "mathverify/expr.hpp"

namespace mathverify {

/// Evaluates an expression to `target_digits` significant decimal digits.
///
/// Certification: the tree is evaluated at target+g and target+2g working
/// digits (g starting at 20); the result is accepted once the leading
/// target_digits agree, otherwise g doubles, up to four times. Throws
/// InstabilityError when the protocol never converges, DomainError on real-
/// domain violations, UnboundVariableError and UnsupportedTierError as named.
BigFloat evaluate(const Expression& e,
                  const std::map<std::string, Rational>& bindings,
                  int target_digits);

/// Single evaluation pass at a fixed working precision, no certification.
/// Exposed for the guard protocol's own tests.
BigFloat evaluate_once(const Expression& e,
                       const std::map<std::string, Rational>& bindings,
                       int working_digits);

}  // namespace mathverify
