#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mathverify/bigfloat.hpp"
#include "mathverify/interval.hpp"
#include "mathverify/rational.hpp"

namespace mathverify {

/// Piecewise-constant witness on [0.001, 1]: values[0] applies on
/// [0.001, b_0), values[j] on [b_{j-1}, b_j), the last value up to 1.
struct PiecewiseConstant {
    std::vector<Rational> breakpoints;  // strictly increasing, in [0.001, 1)
    std::vector<Rational> values;       // breakpoints.size() + 1 entries in (0,1)

    const Rational& value_at(const Rational& x) const;
};

/// Correction polynomial p plus the two witnesses. `constant_term` exists
/// so that the no-constant-term rule is checkable; it must be zero.
struct RamseyCertificate {
    Rational constant_term;              // must be 0
    std::vector<Rational> correction;    // c_1..c_m, coefficient j is for lambda^(j+1)
    PiecewiseConstant m_witness;
    PiecewiseConstant y_witness;
    std::string notes;
};

/// Throws CertificateError on any structural violation (nonzero constant
/// term, coefficient count outside 1..8, breakpoints out of range or not
/// increasing, more than 500 of them, values outside (0,1)).
void validate_certificate(const RamseyCertificate& cert);

struct FrameworkValues {
    Interval F;
    Interval Fprime;
    Interval X;
    Interval M;
    Interval Y;
};

/// Sound enclosures of F, F', X, M, Y over a lambda interval that lies in
/// (0,1] and does not straddle a witness breakpoint or the 0.001 analytic
/// boundary. Below 0.001 the analytic forms M = lambda e^{-lambda} and the
/// two-branch Y replace the tables. Throws IntervalDomainError when the
/// F' enclosure admits 1 - e^{-F'} <= 0 (caller bisects).
FrameworkValues eval_framework(const RamseyCertificate& cert,
                               const Interval& lambda, int precision);

/// F and F' alone; needs no witnesses and no F' positivity.
std::pair<Interval, Interval> eval_f_fprime(const RamseyCertificate& cert,
                                            const Interval& lambda, int precision);

enum class R0Status { certified_in, certified_out, undecided };

struct R0Result {
    R0Status status = R0Status::undecided;
    std::optional<Rational> mu;  // witness for certified_out
    std::optional<BigFloat> margin;
};

/// Membership of (x, y) in the inner region R0: -log x - mu log y >= U(mu)
/// for all mu in (0,1]. Adaptive bisection over mu; the cell (0, mu0] is
/// closed with the analytic bound U <= (1+mu0)log(1+mu0) + sup(-mu log mu).
R0Result in_r0(const Interval& x, const Interval& y,
               const Rational& mu_tolerance, int precision);

struct RefinementLimits {
    int max_depth = 40;
    long max_cells = 400000;
    Rational mu_tolerance = Rational(1, 4096);
};

enum class CertStatus { pass, fail, undecided };

struct Counterexample {
    int condition = 0;  // 1, 2 or 3
    Rational lambda;
    std::string details;
};

struct CertificateVerdict {
    CertStatus status = CertStatus::undecided;
    std::optional<BigFloat> bound_c;           // e^{F(1)} when PASS
    std::optional<BigFloat> margin;            // minimum certified slack
    std::optional<Counterexample> counterexample;
    std::vector<std::string> diagnostics;
};

/// Certifies the three sufficient conditions on [lambda_min, 1]:
///   (1) F > 0 and F' > 0
///   (2) (X, Y) in R0 or (Y, X) in R0
///   (3) F > -(log X + lambda log M + lambda log Y) / 2
/// PASS needs strictly positive interval margin everywhere; FAIL always
/// carries a point counterexample re-verified at doubled precision;
/// anything unresolved within the limits is UNDECIDED.
CertificateVerdict check_certificate(const RamseyCertificate& cert,
                                     const Rational& lambda_min,
                                     const RefinementLimits& limits,
                                     int precision);

/// e^{F(1)} with F(1) = 2 log 2 + p(1) e^{-1}; independent of M and Y.
BigFloat resulting_c(const RamseyCertificate& cert, int digits = 30);

}  // namespace mathverify
