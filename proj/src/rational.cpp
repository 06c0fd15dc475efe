#include "mathverify/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "mathverify/errors.hpp"

namespace mathverify {

Rational::Rational(long num, long den) : Rational() {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) mpq_set(q_, other.q_);
    return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
    if (this != &other) mpq_swap(q_, other.q_);
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw std::invalid_argument("bad rational literal: " + s);
        mpz_set_str(mpq_numref(result.q_), std::string(num).c_str(), 10);
        mpz_set_str(mpq_denref(result.q_), std::string(den).c_str(), 10);
        if (mpz_sgn(mpq_denref(result.q_)) == 0)
            throw DomainError("rational with zero denominator: " + s);
        mpq_canonicalize(result.q_);
    } else {
        // decimal form: digits[.digits][e[+-]digits]
        long exp10 = 0;
        if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
            std::string etail(body.substr(epos + 1));
            body = body.substr(0, epos);
            if (etail.empty()) throw std::invalid_argument("bad exponent: " + s);
            try {
                exp10 = std::stol(etail);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent: " + s);
            }
        }
        std::string digits;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            std::string_view ipart = body.substr(0, dot);
            std::string_view fpart = body.substr(dot + 1);
            if (ipart.empty() && fpart.empty())
                throw std::invalid_argument("bad decimal literal: " + s);
            if ((!ipart.empty() && !is_digits(ipart)) ||
                (!fpart.empty() && !is_digits(fpart)))
                throw std::invalid_argument("bad decimal literal: " + s);
            digits = std::string(ipart) + std::string(fpart);
            exp10 -= static_cast<long>(fpart.size());
        } else {
            if (!is_digits(body))
                throw std::invalid_argument("bad decimal literal: " + s);
            digits = std::string(body);
        }
        if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + s);
        mpz_set_str(mpq_numref(result.q_), digits.c_str(), 10);
        mpz_set_ui(mpq_denref(result.q_), 1);
        if (exp10 > 0) {
            mpz_t p;
            mpz_init(p);
            mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(exp10));
            mpz_mul(mpq_numref(result.q_), mpq_numref(result.q_), p);
            mpz_clear(p);
        } else if (exp10 < 0) {
            mpz_ui_pow_ui(mpq_denref(result.q_), 10,
                          static_cast<unsigned long>(-exp10));
        }
        mpq_canonicalize(result.q_);
    }
    if (negative) mpq_neg(result.q_, result.q_);
    return result;
}

Rational Rational::pow10(long k) {
    Rational r(1);
    if (k >= 0) {
        mpz_ui_pow_ui(mpq_numref(r.q_), 10, static_cast<unsigned long>(k));
    } else {
        mpz_ui_pow_ui(mpq_denref(r.q_), 10, static_cast<unsigned long>(-k));
    }
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("rational division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

long Rational::to_long() const {
    if (!is_integer()) throw DomainError("rational is not an integer: " + to_string());
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw DomainError("integer too large: " + to_string());
    return mpz_get_si(mpq_numref(q_));
}

namespace {

// mpz_sizeinbase may overcount by one in base 10; the budget rule needs
// the exact count.
int exact_digit_count(mpz_srcptr z) {
    char* c = mpz_get_str(nullptr, 10, z);
    std::string s(c);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(c, s.size() + 1);
    return static_cast<int>(s.size() - (s.front() == '-' ? 1 : 0));
}

}  // namespace

int Rational::numerator_digits() const {
    return exact_digit_count(mpq_numref(q_));
}

int Rational::denominator_digits() const {
    return exact_digit_count(mpq_denref(q_));
}

Rational Rational::pow_int(long exponent) const {
    if (exponent == 0) return Rational(1);
    if (is_zero() && exponent < 0) throw DomainError("0 raised to a negative power");
    Rational r;
    unsigned long mag = exponent > 0 ? static_cast<unsigned long>(exponent)
                                     : static_cast<unsigned long>(-exponent);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), mag);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), mag);
    mpq_canonicalize(r.q_);
    if (exponent < 0) mpq_inv(r.q_, r.q_);
    return r;
}

std::string Rational::to_string() const {
    char* c = mpq_get_str(nullptr, 10, q_);
    std::string s(c);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(c, s.size() + 1);
    return s;
}

}  // namespace mathverify
