#include "mathverify/interval.hpp"

#include <array>
#include <stdexcept>

#include "mathverify/errors.hpp"

namespace mathverify {

namespace {

// Working BigFloat with uninitialized value at a given decimal precision.
BigFloat blank(int precision) { return BigFloat(0L, precision); }

void bump_down(BigFloat& x) { mpfr_nextbelow(x.raw()); }
void bump_up(BigFloat& x) { mpfr_nextabove(x.raw()); }

}  // namespace

Interval::Interval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo <= hi)) throw IntervalDomainError("interval endpoints out of order");
}

bool Interval::contains(const Rational& x) const {
    // exact: compare against the rational value of each endpoint
    return lo.to_rational() <= x && x <= hi.to_rational();
}

BigFloat Interval::width(int precision) const {
    BigFloat w = blank(precision);
    mpfr_sub(w.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
    return w;
}

std::string Interval::to_string() const {
    return "[" + lo.to_decimal() + ", " + hi.to_decimal() + "]";
}

NamedConstant constant_from_name(std::string_view name) {
    if (name == "pi") return NamedConstant::pi;
    if (name == "e") return NamedConstant::e;
    if (name == "euler") return NamedConstant::euler;
    if (name == "catalan") return NamedConstant::catalan;
    throw std::invalid_argument("unknown constant name: " + std::string(name));
}

std::string_view constant_name(NamedConstant c) {
    switch (c) {
        case NamedConstant::pi: return "pi";
        case NamedConstant::e: return "e";
        case NamedConstant::euler: return "euler";
        case NamedConstant::catalan: return "catalan";
    }
    return "?";
}

Interval constant_enclosure(NamedConstant c, int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    BigFloat lo = blank(precision), hi = blank(precision);
    switch (c) {
        case NamedConstant::pi:
            mpfr_const_pi(lo.raw(), MPFR_RNDD);
            mpfr_const_pi(hi.raw(), MPFR_RNDU);
            break;
        case NamedConstant::e: {
            BigFloat one(1L, precision);
            mpfr_exp(lo.raw(), one.raw(), MPFR_RNDD);
            mpfr_exp(hi.raw(), one.raw(), MPFR_RNDU);
            break;
        }
        case NamedConstant::euler:
            mpfr_const_euler(lo.raw(), MPFR_RNDD);
            mpfr_const_euler(hi.raw(), MPFR_RNDU);
            break;
        case NamedConstant::catalan:
            mpfr_const_catalan(lo.raw(), MPFR_RNDD);
            mpfr_const_catalan(hi.raw(), MPFR_RNDU);
            break;
    }
    if (!(lo < hi)) {
        bump_down(lo);
        bump_up(hi);
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval constant_enclosure(std::string_view name, int precision) {
    return constant_enclosure(constant_from_name(name), precision);
}

namespace iv {

Interval from_rational(const Rational& r, int precision) {
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_set_q(lo.raw(), r.raw(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), r.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval point(const BigFloat& x) { return Interval(x, x); }

Interval hull(const Interval& a, const Interval& b) {
    return Interval(a.lo <= b.lo ? a.lo : b.lo, a.hi >= b.hi ? a.hi : b.hi);
}

Interval add(const Interval& a, const Interval& b, int precision) {
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_add(lo.raw(), a.lo.raw(), b.lo.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi.raw(), b.hi.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sub(const Interval& a, const Interval& b, int precision) {
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_sub(lo.raw(), a.lo.raw(), b.hi.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi.raw(), b.lo.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval neg(const Interval& a, int precision) {
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_neg(lo.raw(), a.hi.raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval mul(const Interval& a, const Interval& b, int precision) {
    const std::array<mpfr_srcptr, 2> as{a.lo.raw(), a.hi.raw()};
    const std::array<mpfr_srcptr, 2> bs{b.lo.raw(), b.hi.raw()};
    BigFloat lo = blank(precision), hi = blank(precision);
    BigFloat t = blank(precision);
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval div(const Interval& a, const Interval& b, int precision) {
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0)
        throw IntervalDomainError("division by interval containing zero");
    BigFloat rlo = blank(precision), rhi = blank(precision);
    BigFloat one(1L, precision);
    // reciprocal of b is monotone decreasing on either side of zero
    mpfr_div(rlo.raw(), one.raw(), b.hi.raw(), MPFR_RNDD);
    mpfr_div(rhi.raw(), one.raw(), b.lo.raw(), MPFR_RNDU);
    return mul(a, Interval(std::move(rlo), std::move(rhi)), precision);
}

Interval exp(const Interval& a, int precision) {
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_exp(lo.raw(), a.lo.raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi.raw(), MPFR_RNDU);
    bump_down(lo);
    bump_up(hi);
    if (lo.sign() < 0) lo = BigFloat(0L, precision);  // exp is positive
    return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& a, int precision) {
    if (a.lo.sign() <= 0)
        throw IntervalDomainError("log of interval touching nonpositive values");
    BigFloat lo = blank(precision), hi = blank(precision);
    mpfr_log(lo.raw(), a.lo.raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), a.hi.raw(), MPFR_RNDU);
    bump_down(lo);
    bump_up(hi);
    return Interval(std::move(lo), std::move(hi));
}

namespace {

// base^n for a point integer exponent, handling negative bases by parity.
Interval pow_point_integer(const Interval& base, const Rational& n_rat, int precision) {
    long n = n_rat.to_long();
    if (n == 0) return iv::from_rational(Rational(1), precision);
    if (n < 0) {
        Interval p = pow_point_integer(base, Rational(-n), precision);
        return div(from_rational(Rational(1), precision), p, precision);
    }
    auto raise = [&](const BigFloat& x, mpfr_rnd_t rnd) {
        BigFloat r = blank(precision);
        mpfr_pow_si(r.raw(), x.raw(), n, rnd);
        return r;
    };
    bool even = (n % 2) == 0;
    if (!even || base.lo.sign() >= 0) {
        // monotone on the whole line (odd) or on [0, inf) (even, nonneg base)
        return Interval(raise(base.lo, MPFR_RNDD), raise(base.hi, MPFR_RNDU));
    }
    if (base.hi.sign() <= 0) {
        return Interval(raise(base.hi, MPFR_RNDD), raise(base.lo, MPFR_RNDU));
    }
    // even power of an interval straddling zero: [0, max(|lo|,|hi|)^n]
    BigFloat m1 = raise(base.lo, MPFR_RNDU);
    BigFloat m2 = raise(base.hi, MPFR_RNDU);
    return Interval(BigFloat(0L, precision), m1 > m2 ? m1 : m2);
}

}  // namespace

Interval pow(const Interval& base, const Interval& exponent, int precision) {
    if (exponent.lo == exponent.hi) {
        Rational e = exponent.lo.to_rational();
        if (e.is_integer()) return pow_point_integer(base, e, precision);
    }
    if (base.lo.sign() <= 0)
        throw IntervalDomainError(
            "pow with non-integer exponent needs a strictly positive base");
    return exp(mul(exponent, log(base, precision), precision), precision);
}

}  // namespace iv

Interval interval_apply(IntervalFn fn, std::span<const Interval> args, int precision) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("interval_apply: wrong argument count");
    };
    switch (fn) {
        case IntervalFn::add: need(2); return iv::add(args[0], args[1], precision);
        case IntervalFn::sub: need(2); return iv::sub(args[0], args[1], precision);
        case IntervalFn::mul: need(2); return iv::mul(args[0], args[1], precision);
        case IntervalFn::div: need(2); return iv::div(args[0], args[1], precision);
        case IntervalFn::neg: need(1); return iv::neg(args[0], precision);
        case IntervalFn::exp: need(1); return iv::exp(args[0], precision);
        case IntervalFn::log: need(1); return iv::log(args[0], precision);
        case IntervalFn::pow: need(2); return iv::pow(args[0], args[1], precision);
    }
    throw std::invalid_argument("interval_apply: unknown function");
}

}  // namespace mathverify
