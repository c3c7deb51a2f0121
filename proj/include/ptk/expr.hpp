#pragma once

// Coefficient and parametrization expressions.
//
// Grammar (whitespace insignificant):
//   sum     := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= integer ('^' exponent)?          right-associative, nonnegative
//   primary := literal | identifier | ('sin' | 'cos') '(' sum ')' | '(' sum ')'
//   literal := integer ('/' integer)?
//
// There is no division operator; "1/2" is a single rational literal.

#include "ptk/poly.hpp"
#include "ptk/rational.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptk {

class Expression {
public:
    enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow, Sin, Cos };

    Expression();  // the number 0

    static Expression number(const Rational& value);
    static Expression variable(int index, std::string name);

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    int variable_index() const { return node_->index; }
    const std::string& variable_name() const { return node_->name; }
    unsigned exponent() const { return static_cast<unsigned>(node_->index); }
    const Expression& lhs() const { return node_->children[0]; }
    const Expression& rhs() const { return node_->children[1]; }

    bool is_number() const { return kind() == Kind::Number; }
    bool is_zero() const { return is_number() && sgn(value()) == 0; }
    bool is_one() const { return is_number() && value() == 1; }
    bool has_trig() const;

    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    Expression operator-() const;
    Expression pow(unsigned n) const;
    friend Expression sin(const Expression& a);
    friend Expression cos(const Expression& a);

    /// Exact symbolic partial derivative with respect to variable `index`.
    Expression derivative(int index) const;

    double evaluate(std::span<const double> vars) const;

    /// Replaces variable i by values[i].
    Expression substitute(const std::vector<Expression>& values) const;

    /// Exact conversion; throws InputError when the expression contains sin/cos.
    PolyScalar to_poly(int nvars) const;

    /// Re-parseable text in the grammar above.
    std::string to_string() const;

private:
    struct Node {
        Kind kind = Kind::Number;
        Rational value;
        int index = 0;
        std::string name;
        std::vector<Expression> children;
    };

    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Expression make(Kind kind, std::vector<Expression> children, int index = 0);

    std::string to_string(int context) const;

    std::shared_ptr<const Node> node_;
};

/// Parses `source`; identifiers must appear in `allowed_vars` (their position is the
/// variable index). sin/cos are rejected unless `allow_trig`.
Expression parse_expr(std::string_view source, const std::vector<std::string>& allowed_vars, bool allow_trig);

/// Polynomial to expression (for serialization of computed coefficients).
Expression from_poly(const PolyScalar& p, const std::vector<std::string>& names);

}  // namespace ptk
