#include "mathverify/ramsey.hpp"

#include <algorithm>
#include <deque>

#include "mathverify/errors.hpp"

namespace mathverify {

namespace {

using iv::add;
using iv::div;
using iv::exp;
using iv::from_rational;
using iv::hull;
using iv::log;
using iv::mul;
using iv::neg;
using iv::pow;
using iv::sub;

Interval one_iv(int p) { return from_rational(Rational(1), p); }

// Float interval guaranteed to contain the rational interval [a, b].
Interval outward_interval(const Rational& a, const Rational& b, int p) {
    BigFloat lo(0L, p), hi(0L, p);
    mpfr_set_q(lo.raw(), a.raw(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), b.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// interval Horner for sum coeffs[j] * x^j
Interval horner(const std::vector<Rational>& coeffs, const Interval& x, int p) {
    if (coeffs.empty()) return from_rational(Rational(0), p);
    Interval acc = from_rational(coeffs.back(), p);
    for (size_t j = coeffs.size(); j-- > 1;)
        acc = add(from_rational(coeffs[j - 1], p), mul(acc, x, p), p);
    return acc;
}

// Tight image of t log t over a positive interval: the function has its
// single interior minimum -1/e at t = 1/e and maxima at the endpoints.
Interval xlogx(const Interval& x, int p) {
    Interval fa = mul(iv::point(x.lo), log(iv::point(x.lo), p), p);
    Interval fb = mul(iv::point(x.hi), log(iv::point(x.hi), p), p);
    BigFloat lo = fa.lo < fb.lo ? fa.lo : fb.lo;
    BigFloat hi = fa.hi > fb.hi ? fa.hi : fb.hi;
    static const Rational window_lo(36, 100), window_hi(37, 100);
    if (x.lo.to_rational() <= window_hi && x.hi.to_rational() >= window_lo) {
        // 1/e may lie inside; include the global minimum
        Interval m = neg(exp(from_rational(Rational(-1), p), p), p);
        if (m.lo < lo) lo = m.lo;
    }
    return Interval(std::move(lo), std::move(hi));
}

// full coefficient vectors (degree 0 upward) of p and p'
std::vector<Rational> poly_coeffs(const RamseyCertificate& cert) {
    std::vector<Rational> c;
    c.push_back(cert.constant_term);
    for (const auto& r : cert.correction) c.push_back(r);
    return c;
}

std::vector<Rational> poly_deriv_coeffs(const RamseyCertificate& cert) {
    std::vector<Rational> c;
    for (size_t j = 0; j < cert.correction.size(); ++j)
        c.push_back(cert.correction[j] * Rational(static_cast<long>(j + 1)));
    return c;
}

const Rational& analytic_boundary() {
    static const Rational r(1, 1000);
    return r;
}

// alpha_small = (0.17 - 0.033) e^{-1}
Interval alpha_small(int p) {
    return mul(from_rational(Rational(137, 1000), p),
               exp(from_rational(Rational(-1), p), p), p);
}

}  // namespace

const Rational& PiecewiseConstant::value_at(const Rational& x) const {
    size_t idx = 0;
    while (idx < breakpoints.size() && breakpoints[idx] <= x) ++idx;
    return values[idx];
}

void validate_certificate(const RamseyCertificate& cert) {
    if (!cert.constant_term.is_zero())
        throw CertificateError("correction polynomial must have no constant term");
    if (cert.correction.empty() || cert.correction.size() > 8)
        throw CertificateError("expected between 1 and 8 correction coefficients, got " +
                               std::to_string(cert.correction.size()));
    auto check_witness = [](const PiecewiseConstant& w, const std::string& name) {
        if (w.breakpoints.size() > 500)
            throw CertificateError(name + " has more than 500 breakpoints");
        if (w.values.size() != w.breakpoints.size() + 1)
            throw CertificateError(name + " needs exactly breakpoints + 1 values");
        const Rational lo(1, 1000), hi(1);
        for (size_t i = 0; i < w.breakpoints.size(); ++i) {
            if (w.breakpoints[i] < lo || !(w.breakpoints[i] < hi))
                throw CertificateError(name + " breakpoint outside [0.001, 1)");
            if (i > 0 && !(w.breakpoints[i - 1] < w.breakpoints[i]))
                throw CertificateError(name + " breakpoints must be strictly increasing");
        }
        for (const auto& v : w.values)
            if (!(Rational(0) < v) || !(v < Rational(1)))
                throw CertificateError(name + " value outside (0,1): " + v.to_string());
    };
    check_witness(cert.m_witness, "M");
    check_witness(cert.y_witness, "Y");
}

namespace {

struct FrameworkParts {
    Interval F;
    Interval Fprime;
};

// F  = (1+l)log(1+l) - l log l + p(l) e^{-l}
// F' = log((1+l)/l) + (p'(l) - p(l)) e^{-l}
FrameworkParts eval_f(const RamseyCertificate& cert, const Interval& lam, int p) {
    Interval one = one_iv(p);
    Interval lp1 = add(one, lam, p);
    Interval entropy = sub(mul(lp1, log(lp1, p), p), xlogx(lam, p), p);
    Interval decay = exp(neg(lam, p), p);
    Interval poly = horner(poly_coeffs(cert), lam, p);
    Interval dpoly = horner(poly_deriv_coeffs(cert), lam, p);
    FrameworkParts parts;
    parts.F = add(entropy, mul(poly, decay, p), p);
    parts.Fprime = add(sub(log(lp1, p), log(lam, p), p),
                       mul(sub(dpoly, poly, p), decay, p), p);
    return parts;
}

Interval eval_x(const Interval& fprime, const Interval& m, int p) {
    Interval one = one_iv(p);
    Interval t = sub(one, exp(neg(fprime, p), p), p);
    if (t.lo.sign() <= 0)
        throw IntervalDomainError("1 - e^{-F'} not certainly positive; bisect");
    Interval one_minus_m = sub(one, m, p);
    if (one_minus_m.lo.sign() <= 0)
        throw IntervalDomainError("M not certainly below 1");
    Interval expo = div(one, one_minus_m, p);
    return mul(pow(t, expo, p), one_minus_m, p);
}

// Witness value on [a, b); a closed right endpoint at the next breakpoint
// is tolerated (the neighbouring cell checks that point with the other
// value), an interior straddle is a caller error.
const Rational& witness_value_over(const PiecewiseConstant& w, const Rational& a,
                                   const Rational& b, const char* name) {
    size_t idx = 0;
    while (idx < w.breakpoints.size() && w.breakpoints[idx] <= a) ++idx;
    if (idx < w.breakpoints.size() && w.breakpoints[idx] < b)
        throw std::invalid_argument(std::string("lambda straddles a ") + name +
                                    " breakpoint");
    return w.values[idx];
}

FrameworkValues eval_framework_cell(const RamseyCertificate& cert,
                                    const Interval& lam, const Rational& a,
                                    const Rational& b, int p) {
    FrameworkValues out;
    auto parts = eval_f(cert, lam, p);
    out.F = parts.F;
    out.Fprime = parts.Fprime;

    if (b <= analytic_boundary()) {
        // analytic small-lambda construction
        out.M = mul(lam, exp(neg(lam, p), p), p);
        out.X = eval_x(out.Fprime, out.M, p);
        Interval alpha = alpha_small(p);
        Interval one = one_iv(p);
        const Rational half(1, 2);
        Interval y_low = mul(exp(alpha, p), sub(one, out.X, p), p);
        Interval y_high = sub(one, mul(out.X, exp(neg(alpha, p), p), p), p);
        if (out.X.hi.to_rational() <= half) out.Y = y_low;
        else if (out.X.lo.to_rational() > half) out.Y = y_high;
        else out.Y = hull(y_low, y_high);  // branch switch inside the cell
    } else {
        if (a < analytic_boundary())
            throw std::invalid_argument("lambda straddles the 0.001 boundary");
        out.M = from_rational(witness_value_over(cert.m_witness, a, b, "M"), p);
        out.Y = from_rational(witness_value_over(cert.y_witness, a, b, "Y"), p);
        out.X = eval_x(out.Fprime, out.M, p);
    }
    return out;
}

}  // namespace

FrameworkValues eval_framework(const RamseyCertificate& cert,
                               const Interval& lambda, int precision) {
    if (lambda.lo.sign() <= 0)
        throw std::invalid_argument("lambda must lie in (0, 1]");
    Rational a = lambda.lo.to_rational();
    Rational b = lambda.hi.to_rational();
    if (b > Rational(101, 100))
        throw std::invalid_argument("lambda must lie in (0, 1]");
    return eval_framework_cell(cert, lambda, a, b, precision);
}

std::pair<Interval, Interval> eval_f_fprime(const RamseyCertificate& cert,
                                            const Interval& lambda, int precision) {
    auto parts = eval_f(cert, lambda, precision);
    return {parts.F, parts.Fprime};
}

// ---------------------------------------------------------------------------
// R0 membership

namespace {

// U(mu) = mu q(mu) e^{-mu} + (1+mu)log(1+mu) - mu log mu,
// q(mu) = -1/4 + (33/1000) mu + (2/25) mu^2. The factored form keeps the
// sign of the correction term exact for mu in (0,1].
const std::vector<Rational>& u_poly() {
    static const std::vector<Rational> q{Rational(-1, 4), Rational(33, 1000),
                                         Rational(2, 25)};
    return q;
}

Interval eval_u(const Interval& mu, int p) {
    Interval corr = mul(mul(mu, horner(u_poly(), mu, p), p), exp(neg(mu, p), p), p);
    Interval one = one_iv(p);
    Interval mp1 = add(one, mu, p);
    Interval entropy = sub(mul(mp1, log(mp1, p), p), xlogx(mu, p), p);
    return add(corr, entropy, p);
}

// Upper bound of U on (0, mu0]: q < 0 on (0,1] makes the correction term
// nonpositive, (1+mu)log(1+mu) is increasing, and -mu log mu increases up
// to 1/e.
BigFloat first_cell_u_upper(const Rational& mu0, int p) {
    Interval m0 = from_rational(mu0, p);
    Interval one = one_iv(p);
    Interval mp1 = add(one, m0, p);
    Interval h = mul(mp1, log(mp1, p), p);
    Interval s = mu0 <= Rational(1, 3)
                     ? neg(mul(m0, log(m0, p), p), p)
                     : exp(from_rational(Rational(-1), p), p);
    BigFloat bound(0L, p);
    mpfr_add(bound.raw(), h.hi.raw(), s.hi.raw(), MPFR_RNDU);
    Interval qv = horner(u_poly(), Interval(BigFloat(0L, p), m0.hi), p);
    if (qv.hi.sign() > 0) {
        // q failed to certify negative; add its worst positive contribution
        BigFloat extra(0L, p);
        mpfr_mul(extra.raw(), m0.hi.raw(), qv.hi.raw(), MPFR_RNDU);
        mpfr_add(bound.raw(), bound.raw(), extra.raw(), MPFR_RNDU);
    }
    return bound;
}

}  // namespace

R0Result in_r0(const Interval& x, const Interval& y,
               const Rational& mu_tolerance, int precision) {
    const int p = precision;
    R0Result out;
    const Rational zero(0), one_r(1);
    if (!(zero < x.lo.to_rational()) || !(x.hi.to_rational() < one_r) ||
        !(zero < y.lo.to_rational()) || !(y.hi.to_rational() < one_r)) {
        out.status = R0Status::undecided;  // enclosure escapes (0,1); caller refines
        return out;
    }
    Interval a = neg(log(x, p), p);  // -log x
    Interval b = neg(log(y, p), p);  // -log y

    auto slack = [&](const Interval& mu) {
        return sub(add(a, mul(mu, b, p), p), eval_u(mu, p), p);
    };

    // quick definite-violation probes
    for (long den : {1L, 2L, 10L, 100L}) {
        Interval t = slack(from_rational(Rational(1, den), p));
        if (t.hi.sign() < 0) {
            out.status = R0Status::certified_out;
            out.mu = Rational(1, den);
            out.margin = t.hi;
            return out;
        }
    }

    BigFloat margin(0L, p);
    bool have_margin = false;
    auto note_margin = [&](const BigFloat& m) {
        if (!have_margin || m < margin) {
            margin = m;
            have_margin = true;
        }
    };

    // widened first cell (0, mu0]: there the condition reduces to
    // -log x >= 0 plus the bounded correction first_cell_u_upper
    Rational mu0(1, 64);
    for (;;) {
        BigFloat u_hi = first_cell_u_upper(mu0, p);
        if (a.lo > u_hi) {
            BigFloat m(0L, p);
            mpfr_sub(m.raw(), a.lo.raw(), u_hi.raw(), MPFR_RNDD);
            note_margin(m);
            break;
        }
        mu0 = mu0 / Rational(2);
        if (mu0 < mu_tolerance) {
            out.status = R0Status::undecided;
            return out;
        }
    }

    std::deque<std::pair<Rational, Rational>> cells;
    cells.emplace_back(mu0, Rational(1));
    while (!cells.empty()) {
        auto [ca, cb] = cells.front();
        cells.pop_front();
        Interval t = slack(outward_interval(ca, cb, p));
        if (t.lo.sign() > 0) {
            note_margin(t.lo);
            continue;
        }
        if (t.hi.sign() < 0) {
            out.status = R0Status::certified_out;
            out.mu = (ca + cb) / Rational(2);
            out.margin = t.hi;
            return out;
        }
        if (cb - ca <= mu_tolerance) {
            out.status = R0Status::undecided;
            return out;
        }
        Rational mid = (ca + cb) / Rational(2);
        cells.emplace_back(ca, mid);
        cells.emplace_back(mid, cb);
    }
    out.status = R0Status::certified_in;
    out.margin = margin;
    return out;
}

// ---------------------------------------------------------------------------
// full certificate check

namespace {

// condition 3 slack: F + (log X + l log M + l log Y)/2
Interval cond3_slack(const FrameworkValues& v, const Interval& lam, int p) {
    Interval sum = add(log(v.X, p),
                       mul(lam, add(log(v.M, p), log(v.Y, p), p), p), p);
    return add(v.F, div(sum, from_rational(Rational(2), p), p), p);
}

struct CheckContext {
    const RamseyCertificate& cert;
    const RefinementLimits& limits;
    int precision;
    long cells_used = 0;
    std::optional<BigFloat> worst_margin;
    std::vector<std::string> undecided_notes;
    std::optional<Counterexample> counterexample;

    bool budget_ok() { return ++cells_used <= limits.max_cells; }

    void note_margin(const BigFloat& m) {
        if (!worst_margin || m < *worst_margin) worst_margin = m;
    }

    // Point re-verification at doubled precision; returns the violated
    // condition's detail string when the violation is definite.
    std::optional<std::string> confirm_violation(int condition, const Rational& lam) {
        const int p2 = 2 * precision;
        Interval l = from_rational(lam, p2);
        try {
            if (condition == 1) {
                auto parts = eval_f(cert, l, p2);
                if (parts.F.hi.sign() < 0)
                    return "F(" + lam.to_string() + ") <= " + parts.F.hi.to_decimal(20);
                if (parts.Fprime.hi.sign() < 0)
                    return "F'(" + lam.to_string() + ") <= " +
                           parts.Fprime.hi.to_decimal(20);
                return std::nullopt;
            }
            FrameworkValues v = eval_framework_cell(cert, l, lam, lam, p2);
            if (condition == 2) {
                R0Result fwd = in_r0(v.X, v.Y, limits.mu_tolerance, p2);
                R0Result rev = in_r0(v.Y, v.X, limits.mu_tolerance, p2);
                if (fwd.status == R0Status::certified_out &&
                    rev.status == R0Status::certified_out)
                    return "(X,Y) and (Y,X) both outside R0 at lambda = " +
                           lam.to_string() + ", X ~ " + v.X.lo.to_decimal(20) +
                           ", Y ~ " + v.Y.lo.to_decimal(20);
                return std::nullopt;
            }
            Interval s = cond3_slack(v, l, p2);
            if (s.hi.sign() < 0)
                return "F + (log X + l log M + l log Y)/2 <= " +
                       s.hi.to_decimal(20) + " at lambda = " + lam.to_string();
            return std::nullopt;
        } catch (const IntervalDomainError&) {
            return std::nullopt;
        }
    }

    bool record_fail(int condition, const Rational& lam) {
        auto detail = confirm_violation(condition, lam);
        if (!detail) return false;
        counterexample = Counterexample{condition, lam, *detail};
        return true;
    }
};

enum class CellOutcome { certified, violated, inconclusive };

CellOutcome check_cond1_cell(CheckContext& ctx, const Interval& lam) {
    auto parts = eval_f(ctx.cert, lam, ctx.precision);
    if (parts.F.lo.sign() > 0 && parts.Fprime.lo.sign() > 0) {
        ctx.note_margin(parts.F.lo);
        ctx.note_margin(parts.Fprime.lo);
        return CellOutcome::certified;
    }
    if (parts.F.hi.sign() < 0 || parts.Fprime.hi.sign() < 0)
        return CellOutcome::violated;
    return CellOutcome::inconclusive;
}

CellOutcome check_cond23_cell(CheckContext& ctx, const Interval& lam,
                              const Rational& a, const Rational& b,
                              int* violated_condition) {
    FrameworkValues v;
    try {
        v = eval_framework_cell(ctx.cert, lam, a, b, ctx.precision);
    } catch (const IntervalDomainError&) {
        return CellOutcome::inconclusive;
    }

    bool s3_certified = false;
    BigFloat s3_margin(0L, ctx.precision);
    try {
        Interval s3 = cond3_slack(v, lam, ctx.precision);
        if (s3.hi.sign() < 0) {
            *violated_condition = 3;
            return CellOutcome::violated;
        }
        s3_certified = s3.lo.sign() > 0;
        s3_margin = s3.lo;
    } catch (const IntervalDomainError&) {
        return CellOutcome::inconclusive;  // X or Y enclosure touched 0 or 1
    }

    R0Result fwd = in_r0(v.X, v.Y, ctx.limits.mu_tolerance, ctx.precision);
    R0Result rev{};
    bool cond2_ok = fwd.status == R0Status::certified_in;
    if (!cond2_ok) {
        rev = in_r0(v.Y, v.X, ctx.limits.mu_tolerance, ctx.precision);
        cond2_ok = rev.status == R0Status::certified_in;
        if (fwd.status == R0Status::certified_out &&
            rev.status == R0Status::certified_out) {
            *violated_condition = 2;
            return CellOutcome::violated;
        }
    }
    if (!cond2_ok || !s3_certified) return CellOutcome::inconclusive;

    ctx.note_margin(s3_margin);
    ctx.note_margin(fwd.status == R0Status::certified_in ? *fwd.margin : *rev.margin);
    return CellOutcome::certified;
}

// Adaptive bisection of one piece for one phase. Returns false when a
// definite violation was confirmed (context carries the counterexample).
template <typename CellFn>
bool sweep_piece(CheckContext& ctx, const Rational& a, const Rational& b,
                 int condition_hint, CellFn&& cell_fn) {
    struct Cell {
        Rational a, b;
        int depth;
    };
    std::deque<Cell> work;
    work.push_back({a, b, 0});
    while (!work.empty()) {
        Cell cell = work.front();
        work.pop_front();
        if (!ctx.budget_ok()) {
            ctx.undecided_notes.push_back("work budget exhausted in [" +
                                          cell.a.to_string() + ", " +
                                          cell.b.to_string() + "]");
            return true;
        }
        int violated = condition_hint;
        CellOutcome outcome =
            cell_fn(outward_interval(cell.a, cell.b, ctx.precision), cell.a, cell.b,
                    &violated);
        if (outcome == CellOutcome::certified) continue;
        if (outcome == CellOutcome::violated) {
            Rational mid = (cell.a + cell.b) / Rational(2);
            if (ctx.record_fail(violated, mid)) return false;
            // could not confirm pointwise; keep refining
        }
        if (cell.depth >= ctx.limits.max_depth) {
            ctx.undecided_notes.push_back(
                "unresolved subinterval [" + cell.a.to_string() + ", " +
                cell.b.to_string() + "] (condition " + std::to_string(violated) + ")");
            continue;
        }
        Rational mid = (cell.a + cell.b) / Rational(2);
        work.push_back({cell.a, mid, cell.depth + 1});
        work.push_back({mid, cell.b, cell.depth + 1});
    }
    return true;
}

}  // namespace

CertificateVerdict check_certificate(const RamseyCertificate& cert,
                                     const Rational& lambda_min,
                                     const RefinementLimits& limits,
                                     int precision) {
    validate_certificate(cert);
    if (!(Rational(0) < lambda_min) || !(lambda_min < Rational(1)))
        throw std::invalid_argument("lambda_min must lie in (0, 1)");

    CertificateVerdict verdict;
    verdict.diagnostics.push_back(
        "conditions checked on [" + lambda_min.to_string() +
        ", 1]; the lambda -> 0 limit argument is out of scope");

    // partition [lambda_min, 1] at the analytic boundary and all breakpoints
    std::vector<Rational> edges{lambda_min};
    auto push_edge = [&](const Rational& r) {
        if (lambda_min < r && r < Rational(1)) edges.push_back(r);
    };
    push_edge(analytic_boundary());
    for (const auto& bp : cert.m_witness.breakpoints) push_edge(bp);
    for (const auto& bp : cert.y_witness.breakpoints) push_edge(bp);
    edges.push_back(Rational(1));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    CheckContext ctx{cert, limits, precision, 0, std::nullopt, {}, std::nullopt};

    // fail-fast probes at piece midpoints, condition (1) first
    for (int condition : {1, 2, 3}) {
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            Rational mid = (edges[i] + edges[i + 1]) / Rational(2);
            if (ctx.record_fail(condition, mid)) {
                verdict.status = CertStatus::fail;
                verdict.counterexample = ctx.counterexample;
                verdict.diagnostics.push_back("counterexample found by midpoint probe");
                return verdict;
            }
        }
    }

    // phase 1: F > 0 and F' > 0 everywhere (X is meaningless where F' <= 0)
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        bool ok = sweep_piece(ctx, edges[i], edges[i + 1], 1,
                              [&](const Interval& lam, const Rational&,
                                  const Rational&, int*) {
                                  return check_cond1_cell(ctx, lam);
                              });
        if (!ok) {
            verdict.status = CertStatus::fail;
            verdict.counterexample = ctx.counterexample;
            return verdict;
        }
    }

    // phase 2: region membership and the entropy inequality
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        bool ok = sweep_piece(ctx, edges[i], edges[i + 1], 2,
                              [&](const Interval& lam, const Rational& a,
                                  const Rational& b, int* violated) {
                                  return check_cond23_cell(ctx, lam, a, b, violated);
                              });
        if (!ok) {
            verdict.status = CertStatus::fail;
            verdict.counterexample = ctx.counterexample;
            return verdict;
        }
    }

    if (!ctx.undecided_notes.empty()) {
        verdict.status = CertStatus::undecided;
        for (auto& n : ctx.undecided_notes) verdict.diagnostics.push_back(std::move(n));
        return verdict;
    }
    verdict.status = CertStatus::pass;
    verdict.margin = ctx.worst_margin;
    verdict.bound_c = resulting_c(cert);
    return verdict;
}

BigFloat resulting_c(const RamseyCertificate& cert, int digits) {
    Rational p1 = cert.constant_term;
    for (const auto& c : cert.correction) p1 += c;
    BigFloat two_log2(0L, digits);
    mpfr_set_si(two_log2.raw(), 2, MPFR_RNDN);
    mpfr_log(two_log2.raw(), two_log2.raw(), MPFR_RNDN);
    mpfr_mul_si(two_log2.raw(), two_log2.raw(), 2, MPFR_RNDN);
    BigFloat term(0L, digits);
    mpfr_set_si(term.raw(), -1, MPFR_RNDN);
    mpfr_exp(term.raw(), term.raw(), MPFR_RNDN);  // e^{-1}
    BigFloat p1f = BigFloat::from_rational(p1, digits);
    mpfr_mul(term.raw(), term.raw(), p1f.raw(), MPFR_RNDN);
    BigFloat out(0L, digits);
    mpfr_add(out.raw(), two_log2.raw(), term.raw(), MPFR_RNDN);  // F(1)
    mpfr_exp(out.raw(), out.raw(), MPFR_RNDN);
    return out;
}

}  // namespace mathverify
