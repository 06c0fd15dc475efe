#include "mathverify/evaluate.hpp"

#include <mpfr.h>

#include "mathverify/errors.hpp"

namespace mathverify {

namespace {

class PointEvaluator {
public:
    PointEvaluator(const std::map<std::string, Rational>& bindings, int digits)
        : bindings_(bindings), digits_(digits) {}

    BigFloat run(const Expression& e) {
        BigFloat out(0L, digits_);
        eval(e, out.raw());
        if (!out.is_finite()) throw DomainError("evaluation produced a non-finite value");
        return out;
    }

private:
    BigFloat scratch() { return BigFloat(0L, digits_); }

    void eval(const Expression& e, mpfr_ptr out) {
        const auto& n = e.node();
        if (auto* r = std::get_if<Expression::RationalLit>(&n)) {
            mpfr_set_q(out, r->value.raw(), MPFR_RNDN);
            return;
        }
        if (auto* c = std::get_if<Expression::ConstantRef>(&n)) {
            switch (c->name) {
                case NamedConstant::pi: mpfr_const_pi(out, MPFR_RNDN); return;
                case NamedConstant::e: {
                    mpfr_set_si(out, 1, MPFR_RNDN);
                    mpfr_exp(out, out, MPFR_RNDN);
                    return;
                }
                case NamedConstant::euler: mpfr_const_euler(out, MPFR_RNDN); return;
                case NamedConstant::catalan: mpfr_const_catalan(out, MPFR_RNDN); return;
            }
        }
        if (auto* v = std::get_if<Expression::Variable>(&n)) {
            auto it = bindings_.find(v->name);
            if (it == bindings_.end())
                throw UnboundVariableError("unbound variable '" + v->name + "'");
            mpfr_set_q(out, it->second.raw(), MPFR_RNDN);
            return;
        }
        if (auto* g = std::get_if<Expression::Negation>(&n)) {
            eval(*g->child, out);
            mpfr_neg(out, out, MPFR_RNDN);
            return;
        }
        if (auto* b = std::get_if<Expression::Binary>(&n)) {
            eval_binary(*b, out);
            return;
        }
        eval_call(std::get<Expression::Call>(n), out);
    }

    void eval_binary(const Expression::Binary& b, mpfr_ptr out) {
        if (b.op == BinaryOp::pow) {
            eval_pow(b, out);
            return;
        }
        BigFloat lhs = scratch(), rhs = scratch();
        eval(*b.lhs, lhs.raw());
        eval(*b.rhs, rhs.raw());
        switch (b.op) {
            case BinaryOp::add: mpfr_add(out, lhs.raw(), rhs.raw(), MPFR_RNDN); return;
            case BinaryOp::sub: mpfr_sub(out, lhs.raw(), rhs.raw(), MPFR_RNDN); return;
            case BinaryOp::mul: mpfr_mul(out, lhs.raw(), rhs.raw(), MPFR_RNDN); return;
            case BinaryOp::div:
                if (mpfr_zero_p(rhs.raw())) throw DomainError("division by zero");
                mpfr_div(out, lhs.raw(), rhs.raw(), MPFR_RNDN);
                return;
            case BinaryOp::pow: return;  // handled above
        }
    }

    // Integer exponents keep single-valued real semantics for negative
    // bases; anything else goes through exp(y*log x) and needs x > 0.
    void eval_pow(const Expression::Binary& b, mpfr_ptr out) {
        BigFloat base = scratch();
        eval(*b.lhs, base.raw());
        auto folded = fold_rational(*b.rhs, &bindings_);
        if (folded && folded->is_integer()) {
            mpz_srcptr n = mpq_numref(folded->raw());
            if (mpfr_zero_p(base.raw()) && mpz_sgn(n) <= 0)
                throw DomainError("0 raised to a nonpositive power");
            mpfr_pow_z(out, base.raw(), n, MPFR_RNDN);
            return;
        }
        BigFloat expo = scratch();
        eval(*b.rhs, expo.raw());
        if (mpfr_sgn(base.raw()) <= 0)
            throw DomainError("pow with non-integer exponent needs a positive base");
        mpfr_pow(out, base.raw(), expo.raw(), MPFR_RNDN);
    }

    void eval_call(const Expression::Call& c, mpfr_ptr out) {
        auto info = lookup_function(c.function);
        if (info && info->tier == FunctionTier::extension)
            throw UnsupportedTierError("'" + c.function +
                                       "' is declared but not implemented");
        if (c.function == "root") {
            auto deg = fold_rational(*c.args[1], &bindings_);
            if (!deg || !deg->is_integer() || *deg < Rational(2))
                throw DomainError("root degree must be an integer >= 2");
            long k = deg->to_long();
            BigFloat x = scratch();
            eval(*c.args[0], x.raw());
            if (k % 2 == 0 && mpfr_sgn(x.raw()) < 0)
                throw DomainError("even root of a negative value");
            mpfr_rootn_ui(out, x.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
            return;
        }
        BigFloat x = scratch();
        eval(*c.args[0], x.raw());
        const std::string& f = c.function;
        if (f == "sqrt") {
            if (mpfr_sgn(x.raw()) < 0) throw DomainError("sqrt of a negative value");
            mpfr_sqrt(out, x.raw(), MPFR_RNDN);
        } else if (f == "exp") {
            mpfr_exp(out, x.raw(), MPFR_RNDN);
        } else if (f == "log") {
            if (mpfr_sgn(x.raw()) <= 0) throw DomainError("log of a nonpositive value");
            mpfr_log(out, x.raw(), MPFR_RNDN);
        } else if (f == "sin") {
            mpfr_sin(out, x.raw(), MPFR_RNDN);
        } else if (f == "cos") {
            mpfr_cos(out, x.raw(), MPFR_RNDN);
        } else if (f == "tan") {
            mpfr_tan(out, x.raw(), MPFR_RNDN);
        } else if (f == "asin" || f == "acos") {
            BigFloat one(1L, digits_);
            if (mpfr_cmpabs(x.raw(), one.raw()) > 0)
                throw DomainError(f + " argument outside [-1, 1]");
            if (f == "asin") mpfr_asin(out, x.raw(), MPFR_RNDN);
            else mpfr_acos(out, x.raw(), MPFR_RNDN);
        } else if (f == "atan") {
            mpfr_atan(out, x.raw(), MPFR_RNDN);
        } else if (f == "sinh") {
            mpfr_sinh(out, x.raw(), MPFR_RNDN);
        } else if (f == "cosh") {
            mpfr_cosh(out, x.raw(), MPFR_RNDN);
        } else if (f == "tanh") {
            mpfr_tanh(out, x.raw(), MPFR_RNDN);
        } else if (f == "gamma") {
            if (mpfr_integer_p(x.raw()) && mpfr_sgn(x.raw()) <= 0)
                throw DomainError("gamma pole at a nonpositive integer");
            mpfr_gamma(out, x.raw(), MPFR_RNDN);
        } else if (f == "zeta") {
            BigFloat one(1L, digits_);
            if (mpfr_cmp(x.raw(), one.raw()) == 0) throw DomainError("zeta pole at 1");
            mpfr_zeta(out, x.raw(), MPFR_RNDN);
        } else {
            throw DomainError("unknown function '" + f + "'");
        }
    }

    const std::map<std::string, Rational>& bindings_;
    int digits_;
};

}  // namespace

BigFloat evaluate_once(const Expression& e,
                       const std::map<std::string, Rational>& bindings,
                       int working_digits) {
    return PointEvaluator(bindings, working_digits).run(e);
}

BigFloat evaluate(const Expression& e,
                  const std::map<std::string, Rational>& bindings,
                  int target_digits) {
    if (target_digits < 1) throw std::invalid_argument("target_digits must be >= 1");
    int guard = 20;
    for (int attempt = 0; attempt < 5; ++attempt, guard *= 2) {
        BigFloat a = evaluate_once(e, bindings, target_digits + guard);
        BigFloat b = evaluate_once(e, bindings, target_digits + 2 * guard);
        if (a.to_decimal(target_digits) == b.to_decimal(target_digits)) {
            BigFloat out(0L, target_digits);
            mpfr_set(out.raw(), b.raw(), MPFR_RNDN);
            return out;
        }
    }
    throw InstabilityError("guard-digit protocol did not converge at " +
                           std::to_string(target_digits) + " digits");
}

}  // namespace mathverify
