#include "support.hpp"

#include "ptk/error.hpp"
#include "ptk/expr.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ptk;

TEST_CASE("polynomial arithmetic") {
    const PolyScalar x = test::var(2, 0), y = test::var(2, 1);
    const PolyScalar s = (x + y).pow(3);
    const PolyScalar expanded = x.pow(3) + Rational(3) * x.pow(2) * y + Rational(3) * x * y.pow(2) + y.pow(3);
    CHECK(s == expanded);
    CHECK(s.total_degree() == 3);
    CHECK(s.derivative(0) == Rational(3) * (x + y).pow(2));
    CHECK((s - s).is_zero());
    CHECK(PolyScalar(2).total_degree() == -1);
    const std::vector<double> p{0.5, -2.0};
    CHECK(s.evaluate(p) == doctest::Approx(-3.375));
    const std::vector<Rational> q{Rational(1, 2), Rational(-2)};
    CHECK(s.evaluate(q) == Rational(-27, 8));
    CHECK((x * y - Rational(1, 2) * y.pow(2)).to_string({"x", "y"}) == "x*y - 1/2*y^2");
}

TEST_CASE("expression parsing") {
    const std::vector<std::string> vars{"x", "y", "t"};
    const Expression e = parse_expr("x^2*y - 3/4*x + 1", vars, false);
    const std::vector<double> p{2.0, 3.0, 0.0};
    CHECK(e.evaluate(p) == doctest::Approx(11.5));
    CHECK(e.derivative(0).to_poly(3) == (Rational(2) * test::var(3, 0) * test::var(3, 1) - PolyScalar::constant(3, Rational(3, 4))));

    SUBCASE("round trip through text") {
        for (const char* src : {"-x^2^2", "(x + y)*(x - y)", "sin(t)^2 + cos(t)^2", "-(x - 1/3)*t", "2^3*x"}) {
            const Expression a = parse_expr(src, vars, true);
            const Expression b = parse_expr(a.to_string(), vars, true);
            for (double t : {0.0, 0.3, 1.7}) {
                const std::vector<double> q{0.7, -1.1, t};
                CHECK(a.evaluate(q) == doctest::Approx(b.evaluate(q)).epsilon(1e-14));
            }
        }
    }
    SUBCASE("trig derivatives") {
        const Expression s = parse_expr("sin(2*t)*x", vars, true);
        const std::vector<double> q{1.5, 0.0, 0.4};
        CHECK(s.derivative(2).evaluate(q) == doctest::Approx(3.0 * std::cos(0.8)));
        CHECK(s.has_trig());
        CHECK_THROWS_AS(s.to_poly(3), InputError);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_expr("x +", vars, false), ParseError);
        CHECK_THROWS_AS(parse_expr("z", vars, false), ParseError);
        CHECK_THROWS_AS(parse_expr("sin(x)", vars, false), ParseError);
        CHECK_THROWS_AS(parse_expr("x / y", vars, false), ParseError);
        CHECK_THROWS_AS(parse_expr("x^-1", vars, false), ParseError);
        try {
            parse_expr("x + * y", vars, false);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
    }
}

TEST_CASE("expression substitution") {
    const std::vector<std::string> vars{"x", "y"};
    const Expression e = parse_expr("x*y + x", vars, false);
    const Expression swapped = e.substitute({parse_expr("y", vars, false), parse_expr("x", vars, false)});
    CHECK(swapped.to_poly(2) == test::var(2, 0) * test::var(2, 1) + test::var(2, 1));
    std::mt19937_64 rng(7);
    const PolyScalar p = test::random_poly(2, 3, 5, rng);
    CHECK(from_poly(p, vars).to_poly(2) == p);
}
