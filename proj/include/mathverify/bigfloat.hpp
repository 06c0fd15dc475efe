#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mathverify/rational.hpp"

namespace mathverify {

/// Binary bits needed to carry `digits` significant decimal digits with
/// headroom.
int bits_for_digits(int digits);

/// Arbitrary-precision floating value that knows how many significant
/// decimal digits it is good for. Precision is always an explicit argument
/// of the operation that produced the value; there is no ambient state.
class BigFloat {
public:
    BigFloat() : BigFloat(0L, 10) {}
    BigFloat(long value, int precision);
    BigFloat(const BigFloat&);
    BigFloat(BigFloat&&) noexcept;
    BigFloat& operator=(const BigFloat&);
    BigFloat& operator=(BigFloat&&) noexcept;
    ~BigFloat();

    /// r correctly rounded to `precision` significant decimal digits.
    static BigFloat from_rational(const Rational& r, int precision);

    /// Parses scientific or plain decimal notation. Throws
    /// std::invalid_argument on malformed input.
    static BigFloat from_decimal(std::string_view text, int precision);

    int precision() const { return precision_; }

    /// Scientific rendering `[-]d.ddd...e±k` with exactly precision()
    /// significant digits, round-half-even.
    std::string to_decimal() const { return to_decimal(precision_); }
    std::string to_decimal(int digits) const;

    /// Exact value of the stored binary float.
    Rational to_rational() const;

    int sign() const { return mpfr_sgn(f_); }
    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    bool is_finite() const { return mpfr_number_p(f_) != 0; }

    static int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_); }
    bool operator<(const BigFloat& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(*this, o) >= 0; }
    bool operator==(const BigFloat& o) const { return cmp(*this, o) == 0; }

    mpfr_srcptr raw() const { return f_; }
    mpfr_ptr raw() { return f_; }

private:
    BigFloat(int precision, bool);  // uninitialized-value ctor for internals
    friend class IntervalOps;

    mpfr_t f_;
    int precision_;
};

}  // namespace mathverify
