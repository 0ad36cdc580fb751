#include "invheat/problem/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "invheat/errors.hpp"

namespace invheat::problem {

enum class NodeKind { number, variable, negate, add, sub, mul, div, pow, sin, cos, exp, log };

struct ExprNode {
    NodeKind kind = NodeKind::number;
    double value = 0.0;
    bool is_pi = false;
    Variable var = Variable::x;
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::number;
    n->value = v;
    return n;
}

NodePtr pi_node() {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::number;
    n->value = std::numbers::pi;
    n->is_pi = true;
    return n;
}

NodePtr variable(Variable v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::variable;
    n->var = v;
    return n;
}

NodePtr node(NodeKind k, NodePtr a, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

bool is_number(const NodePtr& n) { return n->kind == NodeKind::number; }
bool is_value(const NodePtr& n, double v) { return is_number(n) && n->value == v; }

// Builders with light simplification; used by the differentiator only, so
// parsed trees keep their literal shape.
NodePtr make_neg(NodePtr a) {
    if (is_number(a)) return number(-a->value);
    if (a->kind == NodeKind::negate) return a->lhs;
    return node(NodeKind::negate, std::move(a));
}

NodePtr make_add(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0)) return b;
    if (is_value(b, 0.0)) return a;
    if (is_number(a) && is_number(b)) return number(a->value + b->value);
    return node(NodeKind::add, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (is_value(b, 0.0)) return a;
    if (is_value(a, 0.0)) return make_neg(std::move(b));
    if (is_number(a) && is_number(b)) return number(a->value - b->value);
    return node(NodeKind::sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0) || is_value(b, 0.0)) return number(0.0);
    if (is_value(a, 1.0)) return b;
    if (is_value(b, 1.0)) return a;
    if (is_value(a, -1.0)) return make_neg(std::move(b));
    if (is_value(b, -1.0)) return make_neg(std::move(a));
    if (is_number(a) && is_number(b)) return number(a->value * b->value);
    return node(NodeKind::mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_value(a, 0.0)) return number(0.0);
    if (is_value(b, 1.0)) return a;
    if (is_number(a) && is_number(b) && b->value != 0.0) return number(a->value / b->value);
    return node(NodeKind::div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, NodePtr b) {
    if (is_value(b, 0.0)) return number(1.0);
    if (is_value(b, 1.0)) return a;
    if (is_number(a) && is_number(b)) return number(std::pow(a->value, b->value));
    return node(NodeKind::pow, std::move(a), std::move(b));
}

bool depends(const NodePtr& n, Variable v) {
    if (!n) return false;
    if (n->kind == NodeKind::variable) return n->var == v;
    return depends(n->lhs, v) || depends(n->rhs, v);
}

double eval(const ExprNode& n, double x, double t) {
    switch (n.kind) {
        case NodeKind::number: return n.value;
        case NodeKind::variable: return n.var == Variable::x ? x : t;
        case NodeKind::negate: return -eval(*n.lhs, x, t);
        case NodeKind::add: return eval(*n.lhs, x, t) + eval(*n.rhs, x, t);
        case NodeKind::sub: return eval(*n.lhs, x, t) - eval(*n.rhs, x, t);
        case NodeKind::mul: return eval(*n.lhs, x, t) * eval(*n.rhs, x, t);
        case NodeKind::div: return eval(*n.lhs, x, t) / eval(*n.rhs, x, t);
        case NodeKind::pow: return std::pow(eval(*n.lhs, x, t), eval(*n.rhs, x, t));
        case NodeKind::sin: return std::sin(eval(*n.lhs, x, t));
        case NodeKind::cos: return std::cos(eval(*n.lhs, x, t));
        case NodeKind::exp: return std::exp(eval(*n.lhs, x, t));
        case NodeKind::log: return std::log(eval(*n.lhs, x, t));
    }
    return 0.0;
}

NodePtr diff(const NodePtr& n, Variable v) {
    if (!depends(n, v)) return number(0.0);
    const NodePtr& a = n->lhs;
    const NodePtr& b = n->rhs;
    switch (n->kind) {
        case NodeKind::number: return number(0.0);
        case NodeKind::variable: return number(1.0);
        case NodeKind::negate: return make_neg(diff(a, v));
        case NodeKind::add: return make_add(diff(a, v), diff(b, v));
        case NodeKind::sub: return make_sub(diff(a, v), diff(b, v));
        case NodeKind::mul: return make_add(make_mul(diff(a, v), b), make_mul(a, diff(b, v)));
        case NodeKind::div:
            return make_div(make_sub(make_mul(diff(a, v), b), make_mul(a, diff(b, v))),
                            make_pow(b, number(2.0)));
        case NodeKind::pow:
            if (!depends(b, v)) {
                return make_mul(make_mul(b, make_pow(a, make_sub(b, number(1.0)))), diff(a, v));
            }
            // d(a^b) = a^b (b' log a + b a'/a)
            return make_mul(n, make_add(make_mul(diff(b, v), node(NodeKind::log, a)),
                                        make_div(make_mul(b, diff(a, v)), a)));
        case NodeKind::sin: return make_mul(node(NodeKind::cos, a), diff(a, v));
        case NodeKind::cos: return make_mul(make_neg(node(NodeKind::sin, a)), diff(a, v));
        case NodeKind::exp: return make_mul(n, diff(a, v));
        case NodeKind::log: return make_div(diff(a, v), a);
    }
    return number(0.0);
}

// Printing precedence: higher binds tighter.
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::negate: return 3;
        case NodeKind::pow: return 4;
        case NodeKind::number: return (n.value < 0.0 || std::signbit(n.value)) ? 3 : 5;
        default: return 5;
    }
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string print(const ExprNode& n);

std::string wrap(const ExprNode& n, bool parens) { return parens ? "(" + print(n) + ")" : print(n); }

std::string print(const ExprNode& n) {
    const int p = precedence(n);
    switch (n.kind) {
        case NodeKind::number: return n.is_pi ? "pi" : format_number(n.value);
        case NodeKind::variable: return n.var == Variable::x ? "x" : "t";
        case NodeKind::negate: return "-" + wrap(*n.lhs, precedence(*n.lhs) < 3);
        case NodeKind::sin: return "sin(" + print(*n.lhs) + ")";
        case NodeKind::cos: return "cos(" + print(*n.lhs) + ")";
        case NodeKind::exp: return "exp(" + print(*n.lhs) + ")";
        case NodeKind::log: return "log(" + print(*n.lhs) + ")";
        case NodeKind::pow:
            return wrap(*n.lhs, precedence(*n.lhs) <= p) + "^" + wrap(*n.rhs, precedence(*n.rhs) < 3);
        default: break;
    }
    const char* op = n.kind == NodeKind::add   ? " + "
                     : n.kind == NodeKind::sub ? " - "
                     : n.kind == NodeKind::mul ? "*"
                                               : "/";
    const bool right_strict = n.kind == NodeKind::sub || n.kind == NodeKind::div;
    const int rp = precedence(*n.rhs);
    return wrap(*n.lhs, precedence(*n.lhs) < p) + op + wrap(*n.rhs, right_strict ? rp <= p : rp < p);
}

class Parser {
public:
    Parser(std::string_view text, VariableSet allowed) : s_(text), allowed_(allowed) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError("syntax error: " + msg, 0, at);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) lhs = node(NodeKind::add, lhs, term());
            else if (accept('-')) lhs = node(NodeKind::sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = node(NodeKind::mul, lhs, unary());
            else if (accept('/')) lhs = node(NodeKind::div, lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return node(NodeKind::negate, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return node(NodeKind::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected an expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr number_literal() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                pos_ = q;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        double v = 0.0;
        const auto* first = s_.data() + start;
        const auto* last = s_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) fail_at("malformed number", start);
        return number(v);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string_view id = s_.substr(start, pos_ - start);
        if (id == "x" || id == "t") {
            const Variable v = id == "x" ? Variable::x : Variable::t;
            if ((v == Variable::x && !allowed_.x) || (v == Variable::t && !allowed_.t)) {
                unknown(id, start);
            }
            return variable(v);
        }
        if (id == "pi") return pi_node();

        NodeKind fn;
        if (id == "sin") fn = NodeKind::sin;
        else if (id == "cos") fn = NodeKind::cos;
        else if (id == "exp") fn = NodeKind::exp;
        else if (id == "log") fn = NodeKind::log;
        else unknown(id, start);

        if (!accept('(')) fail("expected '(' after " + std::string(id));
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return node(fn, arg);
    }

    [[noreturn]] void unknown(std::string_view id, std::size_t at) const {
        throw ParseError("unknown identifier '" + std::string(id) + "'", 0, at);
    }

    std::string_view s_;
    VariableSet allowed_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text, VariableSet allowed) {
    return Expression(Parser(text, allowed).parse_all());
}

Expression Expression::constant(double value) { return Expression(number(value)); }

double Expression::evaluate(double x, double t) const { return eval(*root_, x, t); }

Expression Expression::derivative(Variable v) const { return Expression(diff(root_, v)); }

Expression Expression::derivative(Variable v, int order) const {
    Expression e = *this;
    for (int i = 0; i < order; ++i) e = e.derivative(v);
    return e;
}

bool Expression::depends_on(Variable v) const { return depends(root_, v); }

std::string Expression::to_string() const { return print(*root_); }

}  // namespace invheat::problem
