#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mathverify/bigfloat.hpp"
#include "mathverify/rational.hpp"

namespace mathverify {

/// Closed interval with arbitrary-precision endpoints. Every operation
/// rounds outward, so the exact image of any contained point is contained
/// in the result.
struct Interval {
    BigFloat lo;
    BigFloat hi;

    Interval() = default;
    Interval(BigFloat l, BigFloat h);

    bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
    bool contains(const Rational& x) const;
    BigFloat width(int precision) const;
    std::string to_string() const;
};

enum class NamedConstant { pi, e, euler, catalan };

NamedConstant constant_from_name(std::string_view name);  // throws invalid_argument
std::string_view constant_name(NamedConstant c);

/// Enclosure of a standard transcendental, width <= 10^(1-precision) * value.
Interval constant_enclosure(NamedConstant c, int precision);
Interval constant_enclosure(std::string_view name, int precision);

enum class IntervalFn { add, sub, mul, div, neg, exp, log, pow };

/// Generic dispatch surface; throws IntervalDomainError on domain
/// violations (caller bisects or fails) and invalid_argument on arity.
Interval interval_apply(IntervalFn fn, std::span<const Interval> args, int precision);

// Typed kernels. All take the output precision explicitly.
namespace iv {

Interval from_rational(const Rational& r, int precision);
Interval point(const BigFloat& x);
Interval hull(const Interval& a, const Interval& b);

Interval add(const Interval& a, const Interval& b, int precision);
Interval sub(const Interval& a, const Interval& b, int precision);
Interval mul(const Interval& a, const Interval& b, int precision);
Interval div(const Interval& a, const Interval& b, int precision);
Interval neg(const Interval& a, int precision);
Interval exp(const Interval& a, int precision);
Interval log(const Interval& a, int precision);
Interval pow(const Interval& base, const Interval& exponent, int precision);

}  // namespace iv

}  // namespace mathverify
