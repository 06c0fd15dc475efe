#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "mathverify/errors.hpp"
#include "mathverify/evaluate.hpp"
#include "mathverify/ramsey.hpp"

using namespace mathverify;

namespace {

RamseyCertificate make_cert(std::vector<Rational> coeffs,
                            std::vector<Rational> breakpoints,
                            std::vector<Rational> m_values,
                            std::vector<Rational> y_values) {
    RamseyCertificate cert;
    cert.correction = std::move(coeffs);
    cert.m_witness.breakpoints = breakpoints;
    cert.m_witness.values = std::move(m_values);
    cert.y_witness.breakpoints = std::move(breakpoints);
    cert.y_witness.values = std::move(y_values);
    return cert;
}

Rational dec(const char* s) { return Rational::from_string(s); }

// the restricted-range test certificate: p = 0 with hand-tuned witnesses
// on [0.5, 1] (the table below 0.5 is a placeholder)
RamseyCertificate restricted_pass_cert() {
    return make_cert(
        {Rational(0)},
        {dec("0.5"), dec("0.58"), dec("0.66"), dec("0.74"), dec("0.82"), dec("0.9"),
         dec("0.95")},
        {dec("0.5"), dec("0.3986"), dec("0.425"), dec("0.425"), dec("0.405"),
         dec("0.38"), dec("0.362"), dec("0.3469")},
        {dec("0.5"), dec("0.7983"), dec("0.9256"), dec("0.9907"), dec("0.9964"),
         dec("0.9902"), dec("0.9995"), dec("0.9995")});
}

const std::map<std::string, Rational> kNoBindings;

Interval point_iv(const Rational& r, int p) { return iv::from_rational(r, p); }

}  // namespace

TEST_CASE("resulting_c fixtures") {
    // zero correction polynomial: the classical bound, c = 4
    RamseyCertificate zero = make_cert({Rational(0)}, {}, {dec("0.5")}, {dec("0.5")});
    CHECK(resulting_c(zero).to_decimal(25) == "4.000000000000000000000000e+0");

    // the quintic correction: c = 3.6960839126... within 1e-8
    RamseyCertificate quintic =
        make_cert({dec("-0.25"), dec("0.033"), dec("0.08"), dec("0"), dec("-0.0778")},
                  {}, {dec("0.5")}, {dec("0.5")});
    BigFloat c = resulting_c(quintic);
    Rational err = (c.to_rational() - dec("3.6960839126")).abs();
    CHECK(err <= dec("1e-8"));

    // independent of the witnesses
    RamseyCertificate other_tables =
        make_cert({dec("-0.25"), dec("0.033"), dec("0.08"), dec("0"), dec("-0.0778")},
                  {dec("0.25")}, {dec("0.9"), dec("0.1")}, {dec("0.2"), dec("0.8")});
    CHECK(resulting_c(other_tables).to_decimal() == c.to_decimal());
}

TEST_CASE("structural certificate validation") {
    RamseyCertificate good = restricted_pass_cert();
    CHECK_NOTHROW(validate_certificate(good));

    RamseyCertificate constant_term = good;
    constant_term.constant_term = Rational(1, 10);
    CHECK_THROWS_AS(validate_certificate(constant_term), CertificateError);

    RamseyCertificate no_coeffs = good;
    no_coeffs.correction.clear();
    CHECK_THROWS_AS(validate_certificate(no_coeffs), CertificateError);

    RamseyCertificate nine = good;
    nine.correction.assign(9, Rational(1, 100));
    CHECK_THROWS_AS(validate_certificate(nine), CertificateError);

    RamseyCertificate bad_value = good;
    bad_value.m_witness.values[0] = Rational(1);
    CHECK_THROWS_AS(validate_certificate(bad_value), CertificateError);

    RamseyCertificate bad_break = good;
    bad_break.m_witness.breakpoints[0] = dec("0.0001");
    CHECK_THROWS_AS(validate_certificate(bad_break), CertificateError);

    RamseyCertificate unsorted = good;
    std::swap(unsorted.m_witness.breakpoints[0], unsorted.m_witness.breakpoints[1]);
    CHECK_THROWS_AS(validate_certificate(unsorted), CertificateError);

    RamseyCertificate too_many = good;
    too_many.m_witness.breakpoints.clear();
    too_many.m_witness.values.clear();
    for (int i = 0; i < 501; ++i)
        too_many.m_witness.breakpoints.push_back(Rational(1000 + i, 2000));
    too_many.m_witness.values.assign(502, Rational(1, 2));
    CHECK_THROWS_AS(validate_certificate(too_many), CertificateError);

    RamseyCertificate count_mismatch = good;
    count_mismatch.y_witness.values.pop_back();
    CHECK_THROWS_AS(validate_certificate(count_mismatch), CertificateError);
}

TEST_CASE("eval_framework hand fixtures") {
    const int p = 50;
    // p identically 0, lambda = 1, M table value 1/2:
    // F = 2 log 2, F' = log 2, X = (1/2)^2 * (1/2) = 1/8
    RamseyCertificate cert = make_cert({Rational(0)}, {}, {dec("0.5")}, {dec("0.5")});
    FrameworkValues v = eval_framework(cert, point_iv(Rational(1), p), p);

    Rational two_log2 =
        evaluate(*parse_expression("2*log(2)"), kNoBindings, 70).to_rational();
    Rational log2 =
        evaluate(*parse_expression("log(2)"), kNoBindings, 70).to_rational();
    CHECK(v.F.contains(two_log2));
    CHECK(v.Fprime.contains(log2));
    CHECK(v.X.contains(Rational(1, 8)));
    CHECK(v.M.contains(Rational(1, 2)));
    CHECK((v.X.hi.to_rational() - v.X.lo.to_rational()) <= dec("1e-40"));

    // analytic small-lambda region: M(lambda) = lambda e^{-lambda}
    Rational half_milli(1, 2000);
    FrameworkValues small = eval_framework(cert, point_iv(half_milli, p), p);
    Rational m_expected = evaluate(*parse_expression("(1/2000)*exp(0-1/2000)"),
                                   kNoBindings, 70)
                              .to_rational();
    CHECK(small.M.contains(m_expected));
    // X is nearly 1 here, so Y follows the upper branch 1 - X e^{-alpha}
    CHECK(small.X.lo.to_rational() > Rational(1, 2));
    Rational y_expected =
        evaluate(*parse_expression("1 - x*exp(0-(17/100-33/1000)*exp(0-1))"),
                 {{"x", small.X.lo.to_rational()}}, 45)
            .to_rational();
    CHECK((small.Y.lo.to_rational() - y_expected).abs() <= dec("1e-10"));

    // straddling a breakpoint is a caller error
    RamseyCertificate pieces =
        make_cert({Rational(0)}, {dec("0.5")}, {dec("0.4"), dec("0.3")},
                  {dec("0.5"), dec("0.6")});
    CHECK_THROWS_AS(eval_framework(pieces,
                                   Interval(BigFloat::from_rational(dec("0.4"), p),
                                            BigFloat::from_rational(dec("0.6"), p)),
                                   p),
                    std::invalid_argument);
}

TEST_CASE("derivative formula matches finite differences") {
    std::mt19937_64 rng(606);
    const int p = 60;
    const Rational h = dec("1e-20");
    const Rational tol = dec("1e-15");
    int points_checked = 0;
    for (int cert_trial = 0; cert_trial < 50; ++cert_trial) {
        std::vector<Rational> coeffs;
        size_t degree = 1 + rng() % 8;
        for (size_t j = 0; j < degree; ++j)
            coeffs.push_back(Rational(static_cast<long>(rng() % 2001) - 1000, 2000));
        RamseyCertificate cert = make_cert(coeffs, {}, {dec("0.5")}, {dec("0.5")});
        for (int point = 0; point < 20; ++point) {
            Rational lambda(static_cast<long>(rng() % 9700) + 200, 10000);
            Interval f_plus = eval_f_fprime(cert, point_iv(lambda + h, p), p).first;
            Interval f_minus = eval_f_fprime(cert, point_iv(lambda - h, p), p).first;
            Interval fprime = eval_f_fprime(cert, point_iv(lambda, p), p).second;
            Rational fd = (f_plus.lo.to_rational() - f_minus.lo.to_rational()) /
                          (Rational(2) * h);
            Rational formula = fprime.lo.to_rational();
            CHECK((fd - formula).abs() <= tol * formula.abs());
            ++points_checked;
        }
    }
    CHECK(points_checked == 1000);
}

TEST_CASE("in_r0 membership outcomes") {
    const int p = 40;
    const Rational mu_tol(1, 4096);

    // U stays below 1.4 on (0,1]: independent high-precision sweep first
    RamseyCertificate dummy = make_cert({Rational(0)}, {}, {dec("0.5")}, {dec("0.5")});
    for (int k = 1; k <= 1000; ++k) {
        Rational mu(k, 1000);
        Rational u = evaluate(*parse_expression("(0-1/4*m+33/1000*m^2+2/25*m^3)*exp(0-m)"
                                                "+(1+m)*log(1+m)-m*log(m)"),
                              {{"m", mu}}, 30)
                         .to_rational();
        REQUIRE(u < dec("1.4"));
    }

    // x = y = e^{-2}: -log x - mu log y = 2 + 2 mu > 1.4 >= U
    Interval e2 = iv::exp(iv::from_rational(Rational(-2), p), p);
    R0Result inside = in_r0(e2, e2, mu_tol, p);
    CHECK(inside.status == R0Status::certified_in);
    CHECK(inside.margin->sign() > 0);

    // x = y = 0.999: LHS ~ 0.001 (1 + mu) is far below U(1/2) ~ 0.89
    Interval near_one = iv::from_rational(dec("0.999"), p);
    R0Result outside = in_r0(near_one, near_one, mu_tol, p);
    CHECK(outside.status == R0Status::certified_out);
    REQUIRE(outside.mu.has_value());
    Rational u_at = evaluate(*parse_expression("(0-1/4*m+33/1000*m^2+2/25*m^3)*exp(0-m)"
                                               "+(1+m)*log(1+m)-m*log(m)"),
                             {{"m", *outside.mu}}, 50)
                        .to_rational();
    Rational lhs = evaluate(*parse_expression("(1+m)*(0-log(999/1000))"),
                            {{"m", *outside.mu}}, 50)
                       .to_rational();
    CHECK(lhs < u_at);  // the witness re-verifies at high precision

    // degenerate tolerance on a genuinely-thin pair: three-way outcome
    R0Result coarse = in_r0(iv::from_rational(dec("0.3"), p),
                            iv::from_rational(dec("0.81"), p), Rational(1, 2), p);
    CHECK(coarse.status == R0Status::undecided);
    // the same pair resolves once the tolerance is realistic
    R0Result fine = in_r0(iv::from_rational(dec("0.3"), p),
                          iv::from_rational(dec("0.81"), p), mu_tol, p);
    CHECK(fine.status == R0Status::certified_in);
}

TEST_CASE("check_certificate rejects p = -5 lambda with a condition-1 point") {
    RamseyCertificate bad = make_cert({Rational(-5)}, {}, {dec("0.5")}, {dec("0.5")});
    RefinementLimits limits;
    CertificateVerdict verdict =
        check_certificate(bad, dec("0.000001"), limits, 40);
    CHECK(verdict.status == CertStatus::fail);
    REQUIRE(verdict.counterexample.has_value());
    CHECK(verdict.counterexample->condition == 1);
    CHECK((verdict.counterexample->lambda - dec("0.5")).abs() <= dec("0.1"));

    // the counterexample re-verifies at doubled precision
    auto [f, fp] = eval_f_fprime(bad, point_iv(verdict.counterexample->lambda, 160), 160);
    CHECK(f.hi.sign() < 0);
}

TEST_CASE("restricted-range certificate earns a PASS with positive margin") {
    RamseyCertificate cert = restricted_pass_cert();
    RefinementLimits limits;
    CertificateVerdict verdict = check_certificate(cert, dec("0.5"), limits, 40);
    CHECK(verdict.status == CertStatus::pass);
    REQUIRE(verdict.margin.has_value());
    CHECK(verdict.margin->sign() > 0);
    REQUIRE(verdict.bound_c.has_value());
    CHECK(verdict.bound_c->to_decimal(10) == "4.000000000e+0");

    // soundness spot check: no sampled point violates any condition
    // (denominator coprime to the breakpoints keeps samples off them)
    std::mt19937_64 rng(11);
    for (int sample = 0; sample < 300; ++sample) {
        Rational lambda = dec("0.5") + Rational(static_cast<long>(rng() % 10000), 20001);
        FrameworkValues v = eval_framework(cert, point_iv(lambda, 40), 40);
        CHECK(v.F.lo.sign() > 0);
        CHECK(v.Fprime.lo.sign() > 0);
        R0Result r = in_r0(v.X, v.Y, Rational(1, 4096), 40);
        if (r.status != R0Status::certified_in)
            r = in_r0(v.Y, v.X, Rational(1, 4096), 40);
        CHECK(r.status == R0Status::certified_in);
    }
}

TEST_CASE("refinement monotonicity: tighter limits never flip a verdict") {
    RamseyCertificate pass_cert = restricted_pass_cert();
    RefinementLimits loose;
    loose.max_depth = 6;
    loose.mu_tolerance = Rational(1, 64);
    RefinementLimits tight;
    tight.max_depth = 44;
    tight.mu_tolerance = Rational(1, 16384);

    CertificateVerdict loose_verdict =
        check_certificate(pass_cert, dec("0.5"), loose, 40);
    CertificateVerdict tight_verdict =
        check_certificate(pass_cert, dec("0.5"), tight, 40);
    CHECK(tight_verdict.status == CertStatus::pass);
    // loose limits may say UNDECIDED but never FAIL
    CHECK(loose_verdict.status != CertStatus::fail);

    RamseyCertificate fail_cert =
        make_cert({Rational(-5)}, {}, {dec("0.5")}, {dec("0.5")});
    CHECK(check_certificate(fail_cert, dec("0.000001"), loose, 40).status ==
          CertStatus::fail);
    CHECK(check_certificate(fail_cert, dec("0.000001"), tight, 40).status ==
          CertStatus::fail);
}

TEST_CASE("starved limits yield UNDECIDED, never a silent flip") {
    RamseyCertificate cert = restricted_pass_cert();
    RefinementLimits starved;
    starved.max_depth = 0;  // no bisection at all
    CertificateVerdict verdict = check_certificate(cert, dec("0.5"), starved, 40);
    CHECK(verdict.status == CertStatus::undecided);
    CHECK(verdict.diagnostics.size() >= 2);  // scope note plus unresolved cells
}
