#include "oracles.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracles {

namespace {

class Mpz {
public:
    Mpz() { mpz_init(z_); }
    explicit Mpz(long v) { mpz_init_set_si(z_, v); }
    Mpz(const Mpz& o) { mpz_init_set(z_, o.z_); }
    Mpz& operator=(const Mpz& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ~Mpz() { mpz_clear(z_); }
    mpz_ptr get() { return z_; }
    mpz_srcptr get() const { return z_; }

private:
    mpz_t z_;
};

std::string digits_of(const Mpz& value) {
    char* c = mpz_get_str(nullptr, 10, value.get());
    std::string s(c);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(c, s.size() + 1);
    return s;
}

// S * arctan(1/x) by the alternating series, floor arithmetic
Mpz arctan_inv_scaled(long x, const Mpz& scale) {
    Mpz term, sum, divided;
    mpz_fdiv_q_ui(term.get(), scale.get(), static_cast<unsigned long>(x));
    mpz_set(sum.get(), term.get());
    const unsigned long x2 = static_cast<unsigned long>(x) * static_cast<unsigned long>(x);
    unsigned long n = 1;
    bool subtract = true;
    while (mpz_sgn(term.get()) != 0) {
        mpz_fdiv_q_ui(term.get(), term.get(), x2);
        n += 2;
        mpz_fdiv_q_ui(divided.get(), term.get(), n);
        if (subtract) mpz_sub(sum.get(), sum.get(), divided.get());
        else mpz_add(sum.get(), sum.get(), divided.get());
        subtract = !subtract;
    }
    return sum;
}

}  // namespace

std::string pi_digits(int digits) {
    const int guard = 12;
    Mpz scale(1);
    mpz_ui_pow_ui(scale.get(), 10, static_cast<unsigned long>(digits + guard));
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    Mpz a5 = arctan_inv_scaled(5, scale);
    Mpz a239 = arctan_inv_scaled(239, scale);
    Mpz pi;
    mpz_mul_ui(a5.get(), a5.get(), 16);
    mpz_mul_ui(a239.get(), a239.get(), 4);
    mpz_sub(pi.get(), a5.get(), a239.get());
    // round (half away from zero) at the requested digit
    Mpz guard_pow(1), half;
    mpz_ui_pow_ui(guard_pow.get(), 10, static_cast<unsigned long>(guard + 1));
    mpz_fdiv_q_ui(half.get(), guard_pow.get(), 2);
    mpz_add(pi.get(), pi.get(), half.get());
    mpz_fdiv_q(pi.get(), pi.get(), guard_pow.get());
    std::string raw = digits_of(pi);  // "31415926..." with `digits` digits
    std::string out = raw.substr(0, 1) + "." + raw.substr(1);
    return out;
}

mathverify::Rational euler_gamma() {
    const unsigned long n_pow = 20;  // N = 2^20
    const unsigned long big_n = 1ul << n_pow;
    Mpz scale(1);
    mpz_ui_pow_ui(scale.get(), 10, 45);

    // harmonic sum in fixed point
    Mpz harmonic, q;
    for (unsigned long k = 1; k <= big_n; ++k) {
        mpz_fdiv_q_ui(q.get(), scale.get(), k);
        mpz_add(harmonic.get(), harmonic.get(), q.get());
    }

    // ln 2 = 2 atanh(1/3) = 2 sum 1/((2j+1) 3^(2j+1))
    Mpz ln2, power, term;
    mpz_set(power.get(), scale.get());
    unsigned long j = 0;
    for (;;) {
        mpz_fdiv_q_ui(power.get(), power.get(), 3);  // now scale / 3^(2j+1) at step start
        Mpz t;
        mpz_fdiv_q_ui(t.get(), power.get(), 2 * j + 1);
        if (mpz_sgn(t.get()) == 0) break;
        mpz_add(ln2.get(), ln2.get(), t.get());
        mpz_fdiv_q_ui(power.get(), power.get(), 3);  // advance to 3^(2j+2)
        ++j;
    }
    mpz_mul_ui(ln2.get(), ln2.get(), 2);
    Mpz ln_n;
    mpz_mul_ui(ln_n.get(), ln2.get(), n_pow);  // ln N = 20 ln 2

    // gamma ~ H_N - ln N - 1/(2N) + 1/(12 N^2) - 1/(120 N^4) + 1/(252 N^6)
    Mpz gamma;
    mpz_sub(gamma.get(), harmonic.get(), ln_n.get());
    auto correction = [&](unsigned long denom_factor, int n_exponent, bool add) {
        Mpz d(1);
        mpz_ui_pow_ui(d.get(), big_n, static_cast<unsigned long>(n_exponent));
        mpz_mul_ui(d.get(), d.get(), denom_factor);
        Mpz c;
        mpz_fdiv_q(c.get(), scale.get(), d.get());
        if (add) mpz_add(gamma.get(), gamma.get(), c.get());
        else mpz_sub(gamma.get(), gamma.get(), c.get());
    };
    correction(2, 1, false);
    correction(12, 2, true);
    correction(120, 4, false);
    correction(252, 6, true);

    return mathverify::Rational::from_string(digits_of(gamma)) /
           mathverify::Rational::from_string(digits_of(scale));
}

std::string long_division(long num, long den, int digits) {
    if (den == 0 || num <= 0) throw std::invalid_argument("positive num/den only");
    Mpz scaled(num);
    Mpz scale(1);
    mpz_ui_pow_ui(scale.get(), 10, static_cast<unsigned long>(digits + 4));
    mpz_mul(scaled.get(), scaled.get(), scale.get());
    mpz_fdiv_q_ui(scaled.get(), scaled.get(), static_cast<unsigned long>(den));
    std::string raw = digits_of(scaled);
    // integer part of num/den has int_digits digits
    size_t int_digits = raw.size() - static_cast<size_t>(digits + 4);
    std::string all = raw.substr(0, static_cast<size_t>(digits));
    if (int_digits == 0) return "0." + all;
    return all.substr(0, int_digits) + "." + all.substr(int_digits);
}

bool dts_valid_brute(int n, int k, const std::vector<std::vector<long long>>& rows) {
    if (static_cast<int>(rows.size()) != n) return false;
    std::map<long long, int> counts;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k + 1) return false;
        if (row.front() != 0) return false;
        for (size_t a = 0; a < row.size(); ++a) {
            for (size_t b = a + 1; b < row.size(); ++b) {
                if (row[a] >= row[b]) return false;
                counts[row[b] - row[a]]++;
            }
        }
    }
    for (const auto& [diff, count] : counts)
        if (count > 1) return false;
    return true;
}

double kakeya_area_grid(const mathverify::KakeyaInstance& instance,
                        const mathverify::KakeyaCandidate& candidate, int steps) {
    const int n = instance.slope_count;
    const double delta = 1.0 / n;
    std::vector<double> slopes(n), intercepts(n);
    for (int i = 0; i < n; ++i) {
        slopes[i] = static_cast<double>(i) / n;
        mpq_srcptr q = candidate.intercepts[i].raw();
        intercepts[i] = mpq_get_d(q);
    }
    auto union_len = [&](double x) {
        std::vector<std::pair<double, double>> spans(n);
        const double width = delta * (1.0 - x);
        for (int i = 0; i < n; ++i) {
            double hi = slopes[i] * x + intercepts[i];
            spans[i] = {hi - width, hi};
        }
        std::sort(spans.begin(), spans.end());
        double total = 0, lo = spans[0].first, hi = spans[0].second;
        for (int i = 1; i < n; ++i) {
            if (spans[i].first <= hi) {
                hi = std::max(hi, spans[i].second);
            } else {
                total += hi - lo;
                lo = spans[i].first;
                hi = spans[i].second;
            }
        }
        return total + (hi - lo);
    };
    double area = 0;
    double prev = union_len(0.0);
    for (int s = 1; s <= steps; ++s) {
        double x = static_cast<double>(s) / steps;
        double cur = union_len(x);
        area += (prev + cur) / (2.0 * steps);
        prev = cur;
    }
    return area;
}

}  // namespace oracles
