#include "mathverify/expr.hpp"

#include <cctype>

#include "mathverify/errors.hpp"

namespace mathverify {

std::string_view binary_op_name(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return "add";
        case BinaryOp::sub: return "sub";
        case BinaryOp::mul: return "mul";
        case BinaryOp::div: return "div";
        case BinaryOp::pow: return "pow";
    }
    return "?";
}

ExprPtr Expression::literal(Rational value) {
    return std::make_shared<Expression>(RationalLit{std::move(value)});
}
ExprPtr Expression::constant(NamedConstant name) {
    return std::make_shared<Expression>(ConstantRef{name});
}
ExprPtr Expression::variable(std::string name) {
    return std::make_shared<Expression>(Variable{std::move(name)});
}
ExprPtr Expression::negate(ExprPtr child) {
    return std::make_shared<Expression>(Negation{std::move(child)});
}
ExprPtr Expression::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expression>(Binary{op, std::move(lhs), std::move(rhs)});
}
ExprPtr Expression::call(std::string function, std::vector<ExprPtr> args) {
    return std::make_shared<Expression>(Call{std::move(function), std::move(args)});
}

bool structurally_equal(const Expression& a, const Expression& b) {
    const auto& na = a.node();
    const auto& nb = b.node();
    if (na.index() != nb.index()) return false;
    if (auto* ra = std::get_if<Expression::RationalLit>(&na))
        return ra->value == std::get<Expression::RationalLit>(nb).value;
    if (auto* ca = std::get_if<Expression::ConstantRef>(&na))
        return ca->name == std::get<Expression::ConstantRef>(nb).name;
    if (auto* va = std::get_if<Expression::Variable>(&na))
        return va->name == std::get<Expression::Variable>(nb).name;
    if (auto* ga = std::get_if<Expression::Negation>(&na))
        return structurally_equal(*ga->child,
                                  *std::get<Expression::Negation>(nb).child);
    if (auto* ba = std::get_if<Expression::Binary>(&na)) {
        const auto& bb = std::get<Expression::Binary>(nb);
        return ba->op == bb.op && structurally_equal(*ba->lhs, *bb.lhs) &&
               structurally_equal(*ba->rhs, *bb.rhs);
    }
    const auto& fa = std::get<Expression::Call>(na);
    const auto& fb = std::get<Expression::Call>(nb);
    if (fa.function != fb.function || fa.args.size() != fb.args.size()) return false;
    for (size_t i = 0; i < fa.args.size(); ++i)
        if (!structurally_equal(*fa.args[i], *fb.args[i])) return false;
    return true;
}

const std::vector<FunctionInfo>& function_set() {
    static const std::vector<FunctionInfo> table = {
        {"sqrt", 1, FunctionTier::core},   {"root", 2, FunctionTier::core},
        {"exp", 1, FunctionTier::core},    {"log", 1, FunctionTier::core},
        {"sin", 1, FunctionTier::core},    {"cos", 1, FunctionTier::core},
        {"tan", 1, FunctionTier::core},    {"asin", 1, FunctionTier::core},
        {"acos", 1, FunctionTier::core},   {"atan", 1, FunctionTier::core},
        {"sinh", 1, FunctionTier::core},   {"cosh", 1, FunctionTier::core},
        {"tanh", 1, FunctionTier::core},   {"gamma", 1, FunctionTier::core},
        {"zeta", 1, FunctionTier::core},
        // reserved extension tier: declared so references fail loudly, not silently
        {"polylog", 2, FunctionTier::extension},
        {"ellipk", 1, FunctionTier::extension},
        {"ellipe", 1, FunctionTier::extension},
        {"hyp2f1", 4, FunctionTier::extension},
        {"dirichlet_l", 2, FunctionTier::extension},
    };
    return table;
}

std::optional<FunctionInfo> lookup_function(std::string_view name) {
    for (const auto& f : function_set())
        if (f.name == name) return f;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// lexer / parser

namespace {

enum class Tok { integer, name, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
        out.push_back({k, std::move(t), l, c});
    };
    while (i < src.size()) {
        char c = src[i];
        int l = line, cl = col;
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '.')
                throw ParseError(l, cl,
                                 "decimal literals are not in the grammar; "
                                 "write an exact rational such as 1/2");
            push(Tok::integer, std::string(src.substr(i, j - i)), l, cl);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') ||
                    std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Tok::name, std::string(src.substr(i, j - i)), l, cl);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Tok::plus, "+", l, cl); break;
            case '-': push(Tok::minus, "-", l, cl); break;
            case '*': push(Tok::star, "*", l, cl); break;
            case '/': push(Tok::slash, "/", l, cl); break;
            case '^': push(Tok::caret, "^", l, cl); break;
            case '(': push(Tok::lparen, "(", l, cl); break;
            case ')': push(Tok::rparen, ")", l, cl); break;
            case ',': push(Tok::comma, ",", l, cl); break;
            default:
                throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
        }
        ++col;
        ++i;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != Tok::end)
            throw err("expected end of input, '+', '-', '*', '/', '^', ')' or ','");
        return e;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    ParseError err(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        return ParseError(t.line, t.column, msg + ", got " + got);
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            BinaryOp op = take().kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            lhs = Expression::binary(op, std::move(lhs), term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            BinaryOp op = take().kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
            lhs = Expression::binary(op, std::move(lhs), factor());
        }
        return lhs;
    }

    ExprPtr factor(bool fuse_literals = true) {
        ExprPtr b = base(fuse_literals);
        if (peek().kind == Tok::caret) {
            take();
            // "pi^2/6" means (pi^2)/6: a slash after an exponent integer is
            // term-level division, so literal fusion is off in this slot
            return Expression::binary(BinaryOp::pow, std::move(b), factor(false));
        }
        return b;
    }

    ExprPtr base(bool fuse_literals) {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                Token num = take();
                if (fuse_literals && peek().kind == Tok::slash &&
                    peek(1).kind == Tok::integer) {
                    take();
                    Token den = take();
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError(den.line, den.column,
                                         "rational literal with zero denominator");
                    return Expression::literal(
                        Rational::from_string(num.text + "/" + den.text));
                }
                return Expression::literal(Rational::from_string(num.text));
            }
            case Tok::name: {
                Token id = take();
                if (id.text == "pi" || id.text == "e" || id.text == "euler" ||
                    id.text == "catalan")
                    return Expression::constant(constant_from_name(id.text));
                if (peek().kind == Tok::lparen) {
                    auto info = lookup_function(id.text);
                    if (!info)
                        throw ParseError(id.line, id.column,
                                         "unknown function '" + id.text + "'");
                    take();  // (
                    std::vector<ExprPtr> args;
                    args.push_back(expr());
                    while (peek().kind == Tok::comma) {
                        take();
                        args.push_back(expr());
                    }
                    if (peek().kind != Tok::rparen) throw err("expected ')' or ','");
                    take();
                    if (static_cast<int>(args.size()) != info->arity)
                        throw ParseError(id.line, id.column,
                                         "'" + id.text + "' takes " +
                                             std::to_string(info->arity) +
                                             " argument(s), got " +
                                             std::to_string(args.size()));
                    return Expression::call(id.text, std::move(args));
                }
                return Expression::variable(id.text);
            }
            case Tok::lparen: {
                take();
                ExprPtr e = expr();
                if (peek().kind != Tok::rparen) throw err("expected ')'");
                take();
                return e;
            }
            case Tok::minus: {
                take();
                return Expression::negate(base(fuse_literals));
            }
            default:
                throw err("expected an integer, constant, name, '(' or '-'");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
    return Parser(tokenize(text)).run();
}

// ---------------------------------------------------------------------------
// rendering

namespace {

// grammar levels: expr=0, term=1, factor=2, base=3
int node_level(const Expression& e) {
    if (auto* b = std::get_if<Expression::Binary>(&e.node())) {
        switch (b->op) {
            case BinaryOp::add:
            case BinaryOp::sub: return 0;
            case BinaryOp::mul:
            case BinaryOp::div: return 1;
            case BinaryOp::pow: return 2;
        }
    }
    return 3;
}

bool is_literal(const Expression& e) {
    return std::get_if<Expression::RationalLit>(&e.node()) != nullptr;
}

// exponents render bare only when re-parsing cannot reinterpret them
bool exponent_needs_parens(const Expression& e) {
    if (auto* r = std::get_if<Expression::RationalLit>(&e.node()))
        return !r->value.is_integer();
    return !(std::holds_alternative<Expression::ConstantRef>(e.node()) ||
             std::holds_alternative<Expression::Variable>(e.node()) ||
             std::holds_alternative<Expression::Call>(e.node()));
}

void render(const Expression& e, int level, std::string& out);

void render_at(const Expression& e, int level, std::string& out, bool force_parens = false) {
    if (force_parens || node_level(e) < level) {
        out += "(";
        render(e, 0, out);
        out += ")";
    } else {
        render(e, level, out);
    }
}

void render(const Expression& e, int, std::string& out) {
    const auto& n = e.node();
    if (auto* r = std::get_if<Expression::RationalLit>(&n)) {
        out += r->value.to_string();
        return;
    }
    if (auto* c = std::get_if<Expression::ConstantRef>(&n)) {
        out += constant_name(c->name);
        return;
    }
    if (auto* v = std::get_if<Expression::Variable>(&n)) {
        out += v->name;
        return;
    }
    if (auto* g = std::get_if<Expression::Negation>(&n)) {
        out += "-";
        render_at(*g->child, 3, out);
        return;
    }
    if (auto* b = std::get_if<Expression::Binary>(&n)) {
        switch (b->op) {
            case BinaryOp::add:
                render_at(*b->lhs, 0, out);
                out += "+";
                render_at(*b->rhs, 1, out);
                return;
            case BinaryOp::sub:
                render_at(*b->lhs, 0, out);
                out += "-";
                render_at(*b->rhs, 1, out);
                return;
            case BinaryOp::mul:
                render_at(*b->lhs, 1, out);
                out += "*";
                render_at(*b->rhs, 2, out);
                return;
            case BinaryOp::div:
                render_at(*b->lhs, 1, out);
                out += "/";
                // a bare literal after '/' would fuse into a rational literal
                render_at(*b->rhs, 2, out, is_literal(*b->rhs));
                return;
            case BinaryOp::pow:
                render_at(*b->lhs, 3, out);
                out += "^";
                render_at(*b->rhs, 2, out, exponent_needs_parens(*b->rhs));
                return;
        }
    }
    const auto& f = std::get<Expression::Call>(n);
    out += f.function;
    out += "(";
    for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ",";
        render(*f.args[i], 0, out);
    }
    out += ")";
}

}  // namespace

std::string render_text(const Expression& e) {
    std::string out;
    render(e, 0, out);
    return out;
}

nlohmann::json render_structured(const Expression& e) {
    const auto& n = e.node();
    nlohmann::json j;
    if (auto* r = std::get_if<Expression::RationalLit>(&n)) {
        j["kind"] = "rational";
        std::string s = r->value.to_string();
        auto slash = s.find('/');
        j["numerator"] = slash == std::string::npos ? s : s.substr(0, slash);
        j["denominator"] = slash == std::string::npos ? "1" : s.substr(slash + 1);
    } else if (auto* c = std::get_if<Expression::ConstantRef>(&n)) {
        j["kind"] = "constant";
        j["name"] = std::string(constant_name(c->name));
    } else if (auto* v = std::get_if<Expression::Variable>(&n)) {
        j["kind"] = "variable";
        j["name"] = v->name;
    } else if (auto* g = std::get_if<Expression::Negation>(&n)) {
        j["kind"] = "negation";
        j["child"] = render_structured(*g->child);
    } else if (auto* b = std::get_if<Expression::Binary>(&n)) {
        j["kind"] = "binary";
        j["op"] = std::string(binary_op_name(b->op));
        j["left"] = render_structured(*b->lhs);
        j["right"] = render_structured(*b->rhs);
    } else {
        const auto& f = std::get<Expression::Call>(n);
        j["kind"] = "call";
        j["function"] = f.function;
        j["args"] = nlohmann::json::array();
        for (const auto& a : f.args) j["args"].push_back(render_structured(*a));
    }
    return j;
}

ExprPtr parse_structured(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError(0, 0, "structured expression node needs a string 'kind'");
    const std::string kind = j["kind"];
    auto need = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw ParseError(0, 0, "structured '" + kind + "' node missing '" + field + "'");
        return j[field];
    };
    if (kind == "rational") {
        std::string num = need("numerator").get<std::string>();
        std::string den = need("denominator").get<std::string>();
        Rational d = Rational::from_string(den);
        if (d.is_zero()) throw ParseError(0, 0, "rational with zero denominator");
        return Expression::literal(Rational::from_string(num) / d);
    }
    if (kind == "constant")
        return Expression::constant(constant_from_name(need("name").get<std::string>()));
    if (kind == "variable") return Expression::variable(need("name").get<std::string>());
    if (kind == "negation") return Expression::negate(parse_structured(need("child")));
    if (kind == "binary") {
        const std::string op = need("op").get<std::string>();
        BinaryOp b;
        if (op == "add") b = BinaryOp::add;
        else if (op == "sub") b = BinaryOp::sub;
        else if (op == "mul") b = BinaryOp::mul;
        else if (op == "div") b = BinaryOp::div;
        else if (op == "pow") b = BinaryOp::pow;
        else throw ParseError(0, 0, "unknown binary op '" + op + "'");
        return Expression::binary(b, parse_structured(need("left")),
                                  parse_structured(need("right")));
    }
    if (kind == "call") {
        const std::string fn = need("function").get<std::string>();
        auto info = lookup_function(fn);
        if (!info) throw ParseError(0, 0, "unknown function '" + fn + "'");
        const auto& raw_args = need("args");
        if (!raw_args.is_array())
            throw ParseError(0, 0, "'args' must be an array");
        std::vector<ExprPtr> args;
        for (const auto& a : raw_args) args.push_back(parse_structured(a));
        if (static_cast<int>(args.size()) != info->arity)
            throw ParseError(0, 0, "'" + fn + "' takes " + std::to_string(info->arity) +
                                       " argument(s)");
        return Expression::call(fn, std::move(args));
    }
    throw ParseError(0, 0, "unknown node kind '" + kind + "'");
}

std::set<std::string> free_variables(const Expression& e) {
    std::set<std::string> out;
    auto walk = [&](auto&& self, const Expression& x) -> void {
        const auto& n = x.node();
        if (auto* v = std::get_if<Expression::Variable>(&n)) {
            out.insert(v->name);
        } else if (auto* g = std::get_if<Expression::Negation>(&n)) {
            self(self, *g->child);
        } else if (auto* b = std::get_if<Expression::Binary>(&n)) {
            self(self, *b->lhs);
            self(self, *b->rhs);
        } else if (auto* f = std::get_if<Expression::Call>(&n)) {
            for (const auto& a : f->args) self(self, *a);
        }
    };
    walk(walk, e);
    return out;
}

std::optional<Rational> fold_rational(const Expression& e,
                                      const std::map<std::string, Rational>* bindings) {
    const auto& n = e.node();
    if (auto* r = std::get_if<Expression::RationalLit>(&n)) return r->value;
    if (auto* v = std::get_if<Expression::Variable>(&n)) {
        if (bindings) {
            auto it = bindings->find(v->name);
            if (it != bindings->end()) return it->second;
        }
        return std::nullopt;
    }
    if (auto* g = std::get_if<Expression::Negation>(&n)) {
        auto c = fold_rational(*g->child, bindings);
        if (!c) return std::nullopt;
        return -*c;
    }
    if (auto* b = std::get_if<Expression::Binary>(&n)) {
        auto l = fold_rational(*b->lhs, bindings);
        auto r = fold_rational(*b->rhs, bindings);
        if (!l || !r) return std::nullopt;
        switch (b->op) {
            case BinaryOp::add: return *l + *r;
            case BinaryOp::sub: return *l - *r;
            case BinaryOp::mul: return *l * *r;
            case BinaryOp::div:
                if (r->is_zero()) return std::nullopt;
                return *l / *r;
            case BinaryOp::pow: {
                if (!r->is_integer()) return std::nullopt;
                long k;
                try {
                    k = r->to_long();
                } catch (const DomainError&) {
                    return std::nullopt;
                }
                if (k > 4096 || k < -4096) return std::nullopt;  // keep folds small
                if (l->is_zero() && k < 0) return std::nullopt;
                return l->pow_int(k);
            }
        }
    }
    return std::nullopt;  // constants and calls are not rational
}

}  // namespace mathverify
