#include "ptk/expr.hpp"

#include "ptk/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace ptk {

Expression::Expression() : Expression(number(Rational(0))) {}

Expression Expression::make(Kind kind, std::vector<Expression> children, int index) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->children = std::move(children);
    node->index = index;
    return Expression(std::move(node));
}

Expression Expression::number(const Rational& value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Number;
    node->value = value;
    return Expression(std::move(node));
}

Expression Expression::variable(int index, std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Variable;
    node->index = index;
    node->name = std::move(name);
    return Expression(std::move(node));
}

bool Expression::has_trig() const {
    if (kind() == Kind::Sin || kind() == Kind::Cos) return true;
    return std::any_of(node_->children.begin(), node_->children.end(), [](const Expression& c) { return c.has_trig(); });
}

Expression operator+(const Expression& a, const Expression& b) {
    if (a.is_number() && b.is_number()) return Expression::number(a.value() + b.value());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Expression::make(Expression::Kind::Add, {a, b});
}

Expression operator-(const Expression& a, const Expression& b) {
    if (a.is_number() && b.is_number()) return Expression::number(a.value() - b.value());
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return Expression::make(Expression::Kind::Sub, {a, b});
}

Expression operator*(const Expression& a, const Expression& b) {
    if (a.is_number() && b.is_number()) return Expression::number(a.value() * b.value());
    if (a.is_zero() || b.is_zero()) return Expression::number(Rational(0));
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return Expression::make(Expression::Kind::Mul, {a, b});
}

Expression Expression::operator-() const {
    if (is_number()) return number(-value());
    if (kind() == Kind::Neg) return lhs();
    return make(Kind::Neg, {*this});
}

Expression Expression::pow(unsigned n) const {
    if (n == 0) return number(Rational(1));
    if (n == 1) return *this;
    if (is_number()) {
        Rational r(1);
        for (unsigned i = 0; i < n; ++i) r *= value();
        return number(r);
    }
    return make(Kind::Pow, {*this}, static_cast<int>(n));
}

Expression sin(const Expression& a) {
    if (a.is_zero()) return Expression::number(Rational(0));
    return Expression::make(Expression::Kind::Sin, {a});
}

Expression cos(const Expression& a) {
    if (a.is_zero()) return Expression::number(Rational(1));
    return Expression::make(Expression::Kind::Cos, {a});
}

Expression Expression::derivative(int index) const {
    switch (kind()) {
        case Kind::Number:
            return number(Rational(0));
        case Kind::Variable:
            return number(Rational(variable_index() == index ? 1 : 0));
        case Kind::Add:
            return lhs().derivative(index) + rhs().derivative(index);
        case Kind::Sub:
            return lhs().derivative(index) - rhs().derivative(index);
        case Kind::Mul:
            return lhs().derivative(index) * rhs() + lhs() * rhs().derivative(index);
        case Kind::Neg:
            return -lhs().derivative(index);
        case Kind::Pow:
            return number(Rational(exponent())) * lhs().pow(exponent() - 1) * lhs().derivative(index);
        case Kind::Sin:
            return cos(lhs()) * lhs().derivative(index);
        case Kind::Cos:
            return -(sin(lhs()) * lhs().derivative(index));
    }
    return number(Rational(0));
}

double Expression::evaluate(std::span<const double> vars) const {
    switch (kind()) {
        case Kind::Number:
            return value().get_d();
        case Kind::Variable:
            return vars[static_cast<std::size_t>(variable_index())];
        case Kind::Add:
            return lhs().evaluate(vars) + rhs().evaluate(vars);
        case Kind::Sub:
            return lhs().evaluate(vars) - rhs().evaluate(vars);
        case Kind::Mul:
            return lhs().evaluate(vars) * rhs().evaluate(vars);
        case Kind::Neg:
            return -lhs().evaluate(vars);
        case Kind::Pow: {
            const double base = lhs().evaluate(vars);
            double r = 1.0;
            for (unsigned i = 0; i < exponent(); ++i) r *= base;
            return r;
        }
        case Kind::Sin:
            return std::sin(lhs().evaluate(vars));
        case Kind::Cos:
            return std::cos(lhs().evaluate(vars));
    }
    return 0.0;
}

Expression Expression::substitute(const std::vector<Expression>& values) const {
    switch (kind()) {
        case Kind::Number: return *this;
        case Kind::Variable: return values.at(static_cast<std::size_t>(variable_index()));
        case Kind::Add: return lhs().substitute(values) + rhs().substitute(values);
        case Kind::Sub: return lhs().substitute(values) - rhs().substitute(values);
        case Kind::Mul: return lhs().substitute(values) * rhs().substitute(values);
        case Kind::Neg: return -lhs().substitute(values);
        case Kind::Pow: return lhs().substitute(values).pow(exponent());
        case Kind::Sin: return sin(lhs().substitute(values));
        case Kind::Cos: return cos(lhs().substitute(values));
    }
    return *this;
}

PolyScalar Expression::to_poly(int nvars) const {
    switch (kind()) {
        case Kind::Number:
            return PolyScalar::constant(nvars, value());
        case Kind::Variable:
            return PolyScalar::variable(nvars, variable_index());
        case Kind::Add:
            return lhs().to_poly(nvars) + rhs().to_poly(nvars);
        case Kind::Sub:
            return lhs().to_poly(nvars) - rhs().to_poly(nvars);
        case Kind::Mul:
            return lhs().to_poly(nvars) * rhs().to_poly(nvars);
        case Kind::Neg:
            return -lhs().to_poly(nvars);
        case Kind::Pow:
            return lhs().to_poly(nvars).pow(exponent());
        case Kind::Sin:
        case Kind::Cos:
            throw InputError("trigonometric function in a chart-level coefficient");
    }
    return PolyScalar(nvars);
}

// precedence contexts: 0 sum, 1 product operand, 2 unary operand, 3 power base
std::string Expression::to_string(int context) const {
    auto wrap = [context](int own, std::string s) { return own < context ? "(" + s + ")" : s; };
    switch (kind()) {
        case Kind::Number: {
            if (sgn(value()) < 0) return wrap(2, "-" + ptk::to_string(abs(value())));
            const bool fraction = value().get_den() != 1;
            return fraction && context >= 3 ? "(" + ptk::to_string(value()) + ")" : ptk::to_string(value());
        }
        case Kind::Variable:
            return variable_name();
        case Kind::Add:
            return wrap(0, lhs().to_string(0) + " + " + rhs().to_string(1));
        case Kind::Sub:
            return wrap(0, lhs().to_string(0) + " - " + rhs().to_string(1));
        case Kind::Mul:
            return wrap(1, lhs().to_string(1) + "*" + rhs().to_string(2));
        case Kind::Neg:
            return wrap(2, "-" + lhs().to_string(2));
        case Kind::Pow:
            return lhs().to_string(3) + "^" + std::to_string(exponent());
        case Kind::Sin:
            return "sin(" + lhs().to_string(0) + ")";
        case Kind::Cos:
            return "cos(" + lhs().to_string(0) + ")";
    }
    return "0";
}

std::string Expression::to_string() const { return to_string(0); }

namespace {

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars, bool allow_trig)
        : src_(src), vars_(vars), allow_trig_(allow_trig) {}

    Expression parse() {
        Expression e = sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    Expression sum() {
        Expression e = product();
        for (;;) {
            if (accept('+')) {
                e = combine(Expression::Kind::Add, e, product());
            } else if (accept('-')) {
                e = combine(Expression::Kind::Sub, e, product());
            } else {
                return e;
            }
        }
    }

    Expression product() {
        Expression e = unary();
        while (accept('*')) e = combine(Expression::Kind::Mul, e, unary());
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/')
            throw ParseError("division is only allowed inside rational literals", pos_);
        return e;
    }

    Expression unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Expression power() {
        Expression base = primary();
        if (accept('^')) return base.pow(exponent());
        return base;
    }

    unsigned exponent() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer", at);
        const Integer base = digits();
        if (accept('^')) {
            const unsigned e = exponent();
            Integer r = 1;
            for (unsigned i = 0; i < e; ++i) r *= base;
            return checked(r, at);
        }
        return checked(base, at);
    }

    unsigned checked(const Integer& v, std::size_t at) {
        if (v > 4096) throw ParseError("exponent too large", at);
        return static_cast<unsigned>(v.get_ui());
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    Expression primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (c == '(') {
            ++pos_;
            Expression e = sum();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            const std::string name(src_.substr(start, pos_ - start));
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it != vars_.end()) return Expression::variable(static_cast<int>(it - vars_.begin()), name);
            if (name == "sin" || name == "cos") {
                if (!allow_trig_) throw ParseError("trigonometric function '" + name + "' not allowed here", start);
                expect('(');
                Expression arg = sum();
                expect(')');
                return name == "sin" ? sin(arg) : cos(arg);
            }
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Expression literal() {
        const Integer num = digits();
        const std::size_t save = pos_;
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("division is only allowed inside rational literals", pos_);
            const std::size_t at = pos_;
            const Integer den = digits();
            if (den == 0) throw ParseError("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();
            return Expression::number(q);
        }
        pos_ = save;
        return Expression::number(Rational(num));
    }

    static Expression combine(Expression::Kind kind, const Expression& a, const Expression& b) {
        switch (kind) {
            case Expression::Kind::Add: return a + b;
            case Expression::Kind::Sub: return a - b;
            default: return a * b;
        }
    }

    std::string_view src_;
    const std::vector<std::string>& vars_;
    bool allow_trig_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expr(std::string_view source, const std::vector<std::string>& allowed_vars, bool allow_trig) {
    return Parser(source, allowed_vars, allow_trig).parse();
}

Expression from_poly(const PolyScalar& p, const std::vector<std::string>& names) {
    return parse_expr(p.to_string(names), names, false);
}

}  // namespace ptk
