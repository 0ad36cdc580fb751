#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace invheat::problem {

enum class Variable { x, t };

/// Which of x and t an expression is allowed to reference.
struct VariableSet {
    bool x = true;
    bool t = true;
};

struct ExprNode;

/// Immutable arithmetic expression in x and t.
///
/// Grammar (usual precedence, `^` right-associative and binding tighter than
/// unary minus):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('-' | '+') unary | power
///     power   := primary ('^' unary)?
///     primary := number | 'x' | 't' | 'pi' | func '(' expr ')' | '(' expr ')'
///     func    := 'sin' | 'cos' | 'exp' | 'log'
///
/// `log` is accepted because derivatives of x^g(x) need it.
class Expression {
public:
    /// Throws ParseError with line 0 and the offset inside `text`.
    static Expression parse(std::string_view text, VariableSet allowed = {});

    static Expression constant(double value);

    double evaluate(double x, double t) const;
    double operator()(double x, double t) const { return evaluate(x, t); }

    /// Symbolic derivative, lightly simplified (constant folding, 0/1 identities).
    Expression derivative(Variable v) const;
    Expression derivative(Variable v, int order) const;

    bool depends_on(Variable v) const;

    /// Fully re-parseable text; numbers printed with 17 significant digits.
    std::string to_string() const;

private:
    explicit Expression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const ExprNode> root_;
};

}  // namespace invheat::problem
