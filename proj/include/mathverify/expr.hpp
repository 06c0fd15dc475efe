#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mathverify/interval.hpp"
#include "mathverify/rational.hpp"

namespace mathverify {

enum class BinaryOp { add, sub, mul, div, pow };

std::string_view binary_op_name(BinaryOp op);

class Expression;
using ExprPtr = std::shared_ptr<const Expression>;

/// Immutable closed-form candidate tree. Integrals, series, limits and
/// implicit definitions have no node kind and are inexpressible.
class Expression {
public:
    struct RationalLit { Rational value; };
    struct ConstantRef { NamedConstant name; };
    struct Variable { std::string name; };
    struct Negation { ExprPtr child; };
    struct Binary { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
    struct Call { std::string function; std::vector<ExprPtr> args; };

    using Node = std::variant<RationalLit, ConstantRef, Variable, Negation, Binary, Call>;

    explicit Expression(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

    static ExprPtr literal(Rational value);
    static ExprPtr constant(NamedConstant name);
    static ExprPtr variable(std::string name);
    static ExprPtr negate(ExprPtr child);
    static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr call(std::string function, std::vector<ExprPtr> args);

private:
    Node node_;
};

bool structurally_equal(const Expression& a, const Expression& b);

enum class FunctionTier { core, extension };

struct FunctionInfo {
    std::string_view name;
    int arity;
    FunctionTier tier;
};

/// Known function table; parsing rejects identifiers used as calls that are
/// not listed here.
const std::vector<FunctionInfo>& function_set();
std::optional<FunctionInfo> lookup_function(std::string_view name);

/// Parses the candidate-expression grammar. Throws ParseError with
/// line/column on syntax errors and unknown identifiers.
ExprPtr parse_expression(std::string_view text);

/// Text rendering; parse(render_text(t)) is structurally equal to t.
std::string render_text(const Expression& e);

/// Canonical structured rendering (kind-tagged objects) and its inverse.
nlohmann::json render_structured(const Expression& e);
ExprPtr parse_structured(const nlohmann::json& j);

std::set<std::string> free_variables(const Expression& e);

/// Exact rational constant folding over literals, bound variables, +, -, *,
/// /, negation and integer powers. Returns nullopt when the subtree is not
/// a rational constant.
std::optional<Rational> fold_rational(
    const Expression& e,
    const std::map<std::string, Rational>* bindings = nullptr);

}  // namespace mathverify
