#include "mathverify/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

#include "mathverify/errors.hpp"

namespace mathverify {

int bits_for_digits(int digits) {
    if (digits < 1) throw std::invalid_argument("precision must be >= 1");
    return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 16;
}

BigFloat::BigFloat(int precision, bool) : precision_(precision) {
    mpfr_init2(f_, bits_for_digits(precision));
}

BigFloat::BigFloat(long value, int precision) : BigFloat(precision, true) {
    mpfr_set_si(f_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : precision_(o.precision_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : precision_(o.precision_) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
        precision_ = o.precision_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(f_, o.f_);
        precision_ = o.precision_;
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(f_); }

BigFloat BigFloat::from_rational(const Rational& r, int precision) {
    BigFloat x(precision, true);
    mpfr_set_q(x.f_, r.raw(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_decimal(std::string_view text, int precision) {
    BigFloat x(precision, true);
    std::string s(text);
    if (s.empty() || mpfr_set_str(x.f_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed decimal literal: " + s);
    return x;
}

std::string BigFloat::to_decimal(int digits) const {
    if (digits < 1) throw std::invalid_argument("rendering needs >= 1 digit");
    if (!is_finite()) throw DomainError("cannot render non-finite value");
    if (is_zero()) {
        std::string out = "0";
        if (digits > 1) out += "." + std::string(digits - 1, '0');
        return out + "e+0";
    }
    mpfr_exp_t e = 0;
    char* c = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), f_, MPFR_RNDN);
    std::string raw(c);
    mpfr_free_str(c);
    std::string sign;
    if (raw.front() == '-') {
        sign = "-";
        raw.erase(raw.begin());
    }
    // raw holds `digits` significand digits; value = 0.raw * 10^e
    std::string out = sign + raw.substr(0, 1);
    if (raw.size() > 1) out += "." + raw.substr(1);
    long k = static_cast<long>(e) - 1;
    out += "e";
    out += (k < 0 ? "-" : "+");
    out += std::to_string(k < 0 ? -k : k);
    return out;
}

Rational BigFloat::to_rational() const {
    if (!is_finite()) throw DomainError("cannot convert non-finite value");
    Rational r;
    mpfr_get_q(r.raw(), f_);
    return r;
}

}  // namespace mathverify
