#pragma once

#include <set>
#include <string>
#include <vector>

#include "mathverify/expr.hpp"

namespace mathverify {

/// Structural compliance rules for candidate closed forms. Checking never
/// evaluates anything and is deterministic.
struct AdmissibilityPolicy {
    std::set<std::string> allowed_functions;  // core tier by default
    int max_numerator_digits = 6;
    int max_denominator_digits = 6;
    long max_exponent_magnitude = 64;

    static AdmissibilityPolicy defaults();
};

struct Violation {
    std::string node_path;  // "/", "/left", "/args[0]", ...
    std::string rule;
    std::string message;
};

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<Violation> violations;  // nonempty iff inadmissible
};

/// Checks every node and reports every violation, not only the first.
AdmissibilityReport check_admissibility(const Expression& e,
                                        const AdmissibilityPolicy& policy);

}  // namespace mathverify
