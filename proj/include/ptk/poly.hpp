#pragma once

#include "ptk/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ptk {

/// Multivariate polynomial with exact rational coefficients in a fixed number of
/// chart variables. Terms with zero coefficient are never stored.
class PolyScalar {
public:
    using Exponents = std::vector<std::uint16_t>;
    using TermMap = std::map<Exponents, Rational>;

    explicit PolyScalar(int nvars = 0) : nvars_(nvars) {}

    static PolyScalar constant(int nvars, const Rational& c);
    static PolyScalar variable(int nvars, int index);
    static PolyScalar monomial(int nvars, Exponents exponents, const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    /// -1 for the zero polynomial.
    int total_degree() const;

    PolyScalar operator-() const;
    PolyScalar& operator+=(const PolyScalar& other);
    PolyScalar& operator-=(const PolyScalar& other);
    PolyScalar& operator*=(const Rational& c);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    friend PolyScalar operator*(PolyScalar a, const Rational& c) { return a *= c; }
    friend PolyScalar operator*(const Rational& c, PolyScalar a) { return a *= c; }
    friend bool operator==(const PolyScalar& a, const PolyScalar& b);

    PolyScalar derivative(int var) const;
    PolyScalar pow(unsigned exponent) const;

    double evaluate(std::span<const double> point) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Human-readable canonical form, e.g. "x*y - 1/2*z^2".
    std::string to_string(const std::vector<std::string>& names) const;

    /// Adds c * monomial(exponents) in place.
    void add_term(const Exponents& exponents, const Rational& c);

private:
    void promote(int nvars);

    int nvars_;
    TermMap terms_;
};

/// All exponent vectors in `nvars` variables of total degree <= bound, graded-lex order.
std::vector<PolyScalar::Exponents> monomials_up_to(int nvars, int bound);

/// Flattened double-precision copy of a polynomial for batched evaluation.
struct CompiledPoly {
    int nvars = 0;
    std::vector<double> coefficients;
    std::vector<std::uint16_t> exponents;  // row-major, nvars per term

    explicit CompiledPoly(const PolyScalar& p);
    CompiledPoly() = default;
};

}  // namespace ptk
