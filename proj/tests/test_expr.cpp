#include <doctest.h>

#include <random>

#include "mathverify/admissibility.hpp"
#include "mathverify/errors.hpp"
#include "mathverify/expr.hpp"

using namespace mathverify;

TEST_CASE("parser produces the documented shapes") {
    // gamma(1/3)^2 / (4*pi)
    ExprPtr e = parse_expression("gamma(1/3)^2 / (4*pi)");
    const auto* division = std::get_if<Expression::Binary>(&e->node());
    REQUIRE(division != nullptr);
    CHECK(division->op == BinaryOp::div);
    const auto* power = std::get_if<Expression::Binary>(&division->lhs->node());
    REQUIRE(power != nullptr);
    CHECK(power->op == BinaryOp::pow);
    const auto* call = std::get_if<Expression::Call>(&power->lhs->node());
    REQUIRE(call != nullptr);
    CHECK(call->function == "gamma");
    const auto* arg = std::get_if<Expression::RationalLit>(&call->args[0]->node());
    REQUIRE(arg != nullptr);
    CHECK(arg->value == Rational(1, 3));

    ExprPtr atan_pi = parse_expression("4*atan(1)");
    const auto* product = std::get_if<Expression::Binary>(&atan_pi->node());
    REQUIRE(product != nullptr);
    CHECK(product->op == BinaryOp::mul);
    CHECK(std::get_if<Expression::Call>(&product->rhs->node()) != nullptr);
}

TEST_CASE("decimal literals are rejected with a pointer to rationals") {
    try {
        parse_expression("0.5");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("1/2") != std::string::npos);
    }
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(parse_expression("1 + "), ParseError);
    CHECK_THROWS_AS(parse_expression("foo(2)"), ParseError);     // unknown function
    CHECK_THROWS_AS(parse_expression("sin(1, 2)"), ParseError);  // arity
    CHECK_THROWS_AS(parse_expression("(1 + 2"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
    CHECK_THROWS_AS(parse_expression("2 ** 3"), ParseError);
    CHECK_THROWS_AS(parse_expression("Pi"), ParseError);  // uppercase
    try {
        parse_expression("1 +\n  zork(2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("pow is right associative; division after an exponent is term-level") {
    ExprPtr chain = parse_expression("2^3^2");
    const auto* outer = std::get_if<Expression::Binary>(&chain->node());
    REQUIRE(outer != nullptr);
    CHECK(outer->op == BinaryOp::pow);
    CHECK(std::get_if<Expression::RationalLit>(&outer->lhs->node()) != nullptr);
    CHECK(std::get_if<Expression::Binary>(&outer->rhs->node()) != nullptr);

    // pi^2/6 means (pi^2)/6, never pi^(2/6)
    ExprPtr zeta2 = parse_expression("pi^2/6");
    const auto* division = std::get_if<Expression::Binary>(&zeta2->node());
    REQUIRE(division != nullptr);
    CHECK(division->op == BinaryOp::div);
    const auto* power = std::get_if<Expression::Binary>(&division->lhs->node());
    REQUIRE(power != nullptr);
    CHECK(power->op == BinaryOp::pow);

    // a fractional exponent is written with parentheses
    ExprPtr sqrt2 = parse_expression("2^(1/2)");
    const auto* b = std::get_if<Expression::Binary>(&sqrt2->node());
    REQUIRE(b != nullptr);
    CHECK(b->op == BinaryOp::pow);
    const auto* expo = std::get_if<Expression::RationalLit>(&b->rhs->node());
    REQUIRE(expo != nullptr);
    CHECK(expo->value == Rational(1, 2));
}

TEST_CASE("free variables are the exact occurrence set") {
    CHECK(free_variables(*parse_expression("n*(n+1) + c^2/2")) ==
          std::set<std::string>{"n", "c"});
    CHECK(free_variables(*parse_expression("pi + e")).empty());
    CHECK(free_variables(*parse_expression("x + x")) == std::set<std::string>{"x"});
    CHECK(free_variables(*parse_expression("sin(a) * cos(b)")) ==
          std::set<std::string>{"a", "b"});
}

namespace {

ExprPtr random_expression(std::mt19937_64& rng, int depth) {
    auto pick = rng() % (depth <= 0 ? 3u : 7u);
    switch (pick) {
        case 0: return Expression::literal(Rational(static_cast<long>(rng() % 500)));
        case 1:
            return Expression::literal(Rational(static_cast<long>(rng() % 99) + 1,
                                                static_cast<long>(rng() % 99) + 1));
        case 2: {
            switch (rng() % 5) {
                case 0: return Expression::constant(NamedConstant::pi);
                case 1: return Expression::constant(NamedConstant::e);
                case 2: return Expression::constant(NamedConstant::euler);
                case 3: return Expression::constant(NamedConstant::catalan);
                default: return Expression::variable(rng() % 2 ? "x" : "y2_z");
            }
        }
        case 3:
            return Expression::negate(random_expression(rng, depth - 1));
        case 4: {
            auto op = static_cast<BinaryOp>(rng() % 5);
            return Expression::binary(op, random_expression(rng, depth - 1),
                                      random_expression(rng, depth - 1));
        }
        default: {
            static const std::vector<std::pair<std::string, int>> fns = {
                {"sqrt", 1}, {"exp", 1},  {"log", 1},   {"sin", 1},   {"cos", 1},
                {"tan", 1},  {"atan", 1}, {"sinh", 1},  {"gamma", 1}, {"zeta", 1},
                {"root", 2}};
            const auto& [name, arity] = fns[rng() % fns.size()];
            std::vector<ExprPtr> args;
            for (int i = 0; i < arity; ++i)
                args.push_back(random_expression(rng, depth - 1));
            return Expression::call(name, std::move(args));
        }
    }
}

}  // namespace

TEST_CASE("render/parse round trip on 500 generated trees") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        ExprPtr tree = random_expression(rng, 4);
        std::string text = render_text(*tree);
        ExprPtr reparsed = parse_expression(text);
        // the text round trip must be a fixed point
        CHECK(render_text(*reparsed) == text);
        CHECK(structurally_equal(*parse_expression(render_text(*reparsed)), *reparsed));

        // the structured rendering round-trips exactly, negatives included
        ExprPtr restructured = parse_structured(render_structured(*tree));
        CHECK(structurally_equal(*restructured, *tree));
    }
}

TEST_CASE("parser-derived trees round trip structurally") {
    for (const char* source :
         {"gamma(1/3)^2 / (4*pi)", "4*atan(1)", "1 - 2/3", "1/(2/3)", "3*1/2",
          "zeta(3) + euler", "root(2, 3)^-2", "-(x + y)^2", "x/-2", "1/2^2",
          "exp(log(7/2))", "a/(b/c)", "2^-1/2"}) {
        ExprPtr first = parse_expression(source);
        ExprPtr second = parse_expression(render_text(*first));
        CHECK(structurally_equal(*first, *second));
    }
}

TEST_CASE("admissibility rules") {
    AdmissibilityPolicy policy = AdmissibilityPolicy::defaults();

    CHECK(check_admissibility(*parse_expression("zeta(3)"), policy).admissible);
    CHECK(check_admissibility(*parse_expression("gamma(1/3)^2/(4*pi)"), policy)
              .admissible);

    // anti-hardcoding budget: 10-digit numerator
    auto report =
        check_admissibility(*parse_expression("1349358983/1000000000000"), policy);
    CHECK(!report.admissible);
    REQUIRE(!report.violations.empty());
    CHECK(report.violations[0].rule == "literal-digit-budget");
    CHECK(report.violations.size() == 2);  // denominator is over budget too

    report = check_admissibility(*parse_expression("zeta(1)"), policy);
    CHECK(!report.admissible);
    CHECK(report.violations[0].rule == "zeta-argument");

    report = check_admissibility(*parse_expression("zeta(1/2)"), policy);
    CHECK(!report.admissible);

    report = check_admissibility(*parse_expression("gamma(0)"), policy);
    CHECK(!report.admissible);
    CHECK(report.violations[0].rule == "gamma-argument");

    report = check_admissibility(*parse_expression("gamma(-3)"), policy);
    CHECK(!report.admissible);
    CHECK(check_admissibility(*parse_expression("gamma(-1/2)"), policy).admissible);
    CHECK(check_admissibility(*parse_expression("gamma(1/2 + 1)"), policy).admissible);

    report = check_admissibility(*parse_expression("gamma(pi)"), policy);
    CHECK(!report.admissible);

    report = check_admissibility(*parse_expression("2^65"), policy);
    CHECK(!report.admissible);
    CHECK(report.violations[0].rule == "exponent-magnitude");
    CHECK(check_admissibility(*parse_expression("2^64"), policy).admissible);
    CHECK(check_admissibility(*parse_expression("2^-64"), policy).admissible);

    report = check_admissibility(*parse_expression("polylog(2, 1/2)"), policy);
    CHECK(!report.admissible);
    CHECK(report.violations[0].rule == "unsupported-tier");

    report = check_admissibility(*parse_expression("root(5, 1)"), policy);
    CHECK(!report.admissible);
    CHECK(report.violations[0].rule == "root-degree");

    // every violation is reported, not only the first
    report = check_admissibility(
        *parse_expression("zeta(1) + gamma(0) + 12345678/3"), policy);
    CHECK(report.violations.size() == 3);

    // admissibility never evaluates: gamma(0) reports a violation instead
    // of raising, even inside an absurd power
    CHECK_NOTHROW(
        check_admissibility(*parse_expression("gamma(0)^64 / zeta(1)"), policy));
}
