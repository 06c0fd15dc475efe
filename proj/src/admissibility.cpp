#include "mathverify/admissibility.hpp"

#include "mathverify/errors.hpp"

namespace mathverify {

AdmissibilityPolicy AdmissibilityPolicy::defaults() {
    AdmissibilityPolicy p;
    for (const auto& f : function_set())
        if (f.tier == FunctionTier::core) p.allowed_functions.insert(std::string(f.name));
    return p;
}

namespace {

struct Checker {
    const AdmissibilityPolicy& policy;
    std::vector<Violation>& out;

    void flag(const std::string& path, std::string rule, std::string message) {
        out.push_back({path, std::move(rule), std::move(message)});
    }

    void check_literal(const Rational& v, const std::string& path) {
        int nd = v.numerator_digits();
        int dd = v.denominator_digits();
        if (nd > policy.max_numerator_digits)
            flag(path, "literal-digit-budget",
                 "numerator has " + std::to_string(nd) + " digits (budget " +
                     std::to_string(policy.max_numerator_digits) + ")");
        if (dd > policy.max_denominator_digits)
            flag(path, "literal-digit-budget",
                 "denominator has " + std::to_string(dd) + " digits (budget " +
                     std::to_string(policy.max_denominator_digits) + ")");
    }

    void check_pow(const Expression::Binary& b, const std::string& path) {
        auto folded = fold_rational(*b.rhs);
        if (folded && folded->is_integer()) {
            bool too_big = false;
            try {
                long n = folded->to_long();
                too_big = n > policy.max_exponent_magnitude ||
                          n < -policy.max_exponent_magnitude;
            } catch (const DomainError&) {
                too_big = true;
            }
            if (too_big)
                flag(path, "exponent-magnitude",
                     "integer exponent exceeds magnitude budget " +
                         std::to_string(policy.max_exponent_magnitude));
        }
    }

    void check_call(const Expression::Call& c, const std::string& path) {
        auto info = lookup_function(c.function);
        if (info && info->tier == FunctionTier::extension) {
            flag(path, "unsupported-tier",
                 "'" + c.function + "' is in the reserved extension tier");
            return;
        }
        if (!policy.allowed_functions.contains(c.function)) {
            flag(path, "function-not-allowed",
                 "'" + c.function + "' is not in the allowed function set");
            return;
        }
        if (c.function == "gamma") {
            auto arg = fold_rational(*c.args[0]);
            if (!arg) {
                flag(path, "gamma-argument",
                     "gamma requires an exact rational argument");
            } else if (arg->is_integer() && arg->sign() <= 0) {
                flag(path, "gamma-argument",
                     "gamma pole at " + arg->to_string());
            }
        } else if (c.function == "zeta") {
            auto arg = fold_rational(*c.args[0]);
            if (!arg || !arg->is_integer()) {
                flag(path, "zeta-argument", "zeta requires an integer argument");
            } else if (*arg < Rational(2)) {
                flag(path, "zeta-argument",
                     "zeta argument must be an integer >= 2 (pole at 1), got " +
                         arg->to_string());
            }
        } else if (c.function == "root") {
            auto deg = fold_rational(*c.args[1]);
            if (!deg || !deg->is_integer() || *deg < Rational(2))
                flag(path, "root-degree",
                     "root degree must be an integer >= 2");
        }
    }

    void walk(const Expression& e, const std::string& path) {
        const auto& n = e.node();
        if (auto* r = std::get_if<Expression::RationalLit>(&n)) {
            check_literal(r->value, path);
        } else if (auto* g = std::get_if<Expression::Negation>(&n)) {
            walk(*g->child, path + "/child");
        } else if (auto* b = std::get_if<Expression::Binary>(&n)) {
            if (b->op == BinaryOp::pow) check_pow(*b, path);
            walk(*b->lhs, path + "/left");
            walk(*b->rhs, path + "/right");
        } else if (auto* c = std::get_if<Expression::Call>(&n)) {
            check_call(*c, path);
            for (size_t i = 0; i < c->args.size(); ++i)
                walk(*c->args[i], path + "/args[" + std::to_string(i) + "]");
        }
        // constants and variables always comply
    }
};

}  // namespace

AdmissibilityReport check_admissibility(const Expression& e,
                                        const AdmissibilityPolicy& policy) {
    AdmissibilityReport report;
    Checker checker{policy, report.violations};
    checker.walk(e, "/");
    report.admissible = report.violations.empty();
    return report;
}

}  // namespace mathverify
