#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mathverify {

/// Exact arbitrary-size rational. Always canonical: denominator > 0,
/// gcd(numerator, denominator) = 1.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long value) : Rational() { mpq_set_si(q_, value, 1); }
    Rational(long num, long den);

    Rational(const Rational& other) : Rational() { mpq_set(q_, other.q_); }
    Rational(Rational&& other) noexcept : Rational() { mpq_swap(q_, other.q_); }
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept;
    ~Rational() { mpq_clear(q_); }

    /// Parses "123", "-4/7", or an exact decimal such as "0.125" / "1.3e-3".
    /// Throws std::invalid_argument on anything else.
    static Rational from_string(std::string_view text);

    /// 10^k for any integer k.
    static Rational pow10(long k);

    Rational operator-() const;
    Rational operator+(const Rational&) const;
    Rational operator-(const Rational&) const;
    Rational operator*(const Rational&) const;
    Rational operator/(const Rational&) const;  // throws DomainError on /0
    Rational& operator+=(const Rational& r) { *this = *this + r; return *this; }
    Rational& operator-=(const Rational& r) { *this = *this - r; return *this; }
    Rational& operator*=(const Rational& r) { *this = *this * r; return *this; }
    Rational& operator/=(const Rational& r) { *this = *this / r; return *this; }

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(q_, o.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    Rational abs() const;

    /// Integer value when is_integer() and it fits in long; throws otherwise.
    long to_long() const;

    /// Decimal digit count of |numerator| / denominator (0 has 1 digit).
    int numerator_digits() const;
    int denominator_digits() const;

    Rational pow_int(long exponent) const;  // throws DomainError on 0^negative

    /// "n" when integral, "n/d" otherwise.
    std::string to_string() const;

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

private:
    mpq_t q_;
};

}  // namespace mathverify
