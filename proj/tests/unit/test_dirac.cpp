#include "ptk/dirac.hpp"
#include "ptk/error.hpp"

#include <doctest.h>

#include <random>

using namespace ptk;

namespace {

ExtVector unit(int n, Mask m) {
    ExtVector v(std::size_t{1} << n, Rational(0));
    v[m] = 1;
    return v;
}

}  // namespace

TEST_CASE("spinor lines of the standard structures") {
    for (int n = 1; n <= 4; ++n) {
        const Mask top = full_mask(n);
        CHECK(same_line(spinor_line(LinearDirac::tangent(n)), unit(n, 0)));
        CHECK(same_line(spinor_line(LinearDirac::cotangent(n)), unit(n, top)));
        CHECK(same_line(cospinor_line(LinearDirac::tangent(n)), unit(n, top)));
        CHECK(same_line(cospinor_line(LinearDirac::cotangent(n)), unit(n, 0)));
        CHECK(LinearDirac::tangent(n).is_lagrangian());
    }
}

TEST_CASE("graph of a 2-form has spinor exp(-omega) up to convention") {
    // omega = dx^dy on R^2: spinor is 1 +/- dx^dy
    const LinearDirac l = LinearDirac::graph_form({{0, 1}, {-1, 0}});
    const ExtVector s = spinor_line(l);
    REQUIRE(sgn(s[0]) != 0);
    CHECK(s[1] == 0);
    CHECK(s[2] == 0);
    CHECK(abs(s[3] / s[0]) == 1);
}

TEST_CASE("from_rows rejects non-Lagrangian input") {
    CHECK_THROWS_AS(LinearDirac::from_rows(2, {{1, 0, 1, 0}, {0, 1, 0, 0}}), InputError);
    CHECK_NOTHROW(LinearDirac::from_rows(2, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
    CHECK(parse_matrix("1,2;3,4") == Matrix{{1, 2}, {3, 4}});
    CHECK(matrix_to_string({{1, Rational(1, 2)}}) == "1,1/2");
    CHECK_THROWS_AS(parse_matrix("1,2;3"), InputError);
}

TEST_CASE("transport along the identity map") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + t % 4;
        const LinearDirac l = random_lagrangian(n, rng);
        const PullbackResult p = backward_pullback(l, identity_matrix(static_cast<std::size_t>(n)), n);
        CHECK(p.transverse);
        CHECK(p.lagrangian);
        CHECK(p.spinor_relation);
        CHECK(same_rowspace(p.result.basis, l.basis, 2 * n));
        const PushforwardResult f = forward_pushforward(l, identity_matrix(static_cast<std::size_t>(n)), n);
        CHECK(f.strong);
        CHECK(same_rowspace(f.result.basis, l.basis, 2 * n));
    }
}

TEST_CASE("transversal conditions on simple cases") {
    const LinearDirac cot = LinearDirac::cotangent(2);
    CHECK(transversal_conditions(cot, {{1, 0}, {0, 1}}).b);
    const TransversalFlags line = transversal_conditions(cot, {{1, 0}});
    CHECK_FALSE(line.b);
    CHECK(line.agree());
    // a point is transversal for a nondegenerate structure
    const LinearDirac sym = LinearDirac::graph_bivector({{0, 1}, {-1, 0}});
    const TransversalFlags point = transversal_conditions(sym, Matrix{});
    CHECK(point.b);
    CHECK(point.agree());
}
