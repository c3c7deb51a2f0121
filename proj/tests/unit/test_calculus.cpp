#include "support.hpp"

#include "ptk/poisson.hpp"

#include <doctest.h>

#include <optional>

using namespace ptk;

namespace {

// {x_i, {x_j, x_k}} + cyclic, from the bracket alone
PolyScalar jacobiator(const Multivector& pi, int i, int j, int k) {
    const int n = pi.dim();
    const PolyScalar xi = test::var(n, i), xj = test::var(n, j), xk = test::var(n, k);
    return poisson_bracket(pi, xi, poisson_bracket(pi, xj, xk)) + poisson_bracket(pi, xj, poisson_bracket(pi, xk, xi)) +
           poisson_bracket(pi, xk, poisson_bracket(pi, xi, xj));
}

DiffForm lemma1_residue(const Multivector& pi, const DiffForm& mu, int k) {
    const Multivector pk = multivector_power(pi, k);
    const Multivector pk1 = multivector_power(pi, k + 1);
    return interior_product(pi, exterior_derivative(interior_product(pk, mu))) -
           exterior_derivative(interior_product(pk1, mu)) - interior_product(pk1, exterior_derivative(mu)) +
           interior_product(pk, exterior_derivative(interior_product(pi, mu)));
}

}  // namespace

TEST_CASE("d squared vanishes") {
    std::mt19937_64 rng(11);
    for (int dim = 1; dim <= 5; ++dim) {
        for (int deg = 0; deg < dim; ++deg) {
            const DiffForm w = test::random_form(dim, deg, 3, rng);
            CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
        }
    }
}

TEST_CASE("wedge is graded commutative") {
    std::mt19937_64 rng(12);
    const DiffForm a = test::random_form(4, 1, 1, rng), b = test::random_form(4, 2, 1, rng), c = test::random_form(4, 1, 1, rng);
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(a, c) == -wedge(c, a));
    CHECK(wedge(a, a).is_zero());
    // Leibniz rule
    CHECK(exterior_derivative(wedge(a, b)) == wedge(exterior_derivative(a), b) - wedge(a, exterior_derivative(b)));
}

TEST_CASE("interior product of a wedge composes") {
    std::mt19937_64 rng(13);
    const Multivector u = test::random_multivector(4, 1, 1, rng), v = test::random_multivector(4, 1, 1, rng);
    const DiffForm w = test::random_form(4, 3, 1, rng);
    CHECK(interior_product(wedge(u, v), w) == interior_product(u, interior_product(v, w)));
}

TEST_CASE("Schouten bracket on vector fields is the Lie bracket") {
    std::mt19937_64 rng(14);
    const Multivector u = test::random_multivector(3, 1, 2, rng), v = test::random_multivector(3, 1, 2, rng);
    const PolyScalar f = test::random_poly(3, 3, 4, rng);
    const Multivector uv = schouten_bracket(u, v);
    CHECK(apply_vector(uv, f) == apply_vector(u, apply_vector(v, f)) - apply_vector(v, apply_vector(u, f)));
    CHECK(schouten_bracket(u, Multivector::scalar(3, f)) == Multivector::scalar(3, apply_vector(u, f)));
    // iota_[u,v] = L_u iota_v - iota_v L_u
    const DiffForm w = test::random_form(3, 2, 2, rng);
    CHECK(interior_product(uv, w) == lie_derivative(u, interior_product(v, w)) - interior_product(v, lie_derivative(u, w)));
}

TEST_CASE("Schouten square of a bivector is proportional to the Jacobiator") {
    std::mt19937_64 rng(15);
    std::optional<Rational> ratio;
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + trial % 2;
        const Multivector pi = test::random_multivector(n, 2, 2, rng);
        const Multivector br = schouten_bracket(pi, pi);
        for (Mask m : masks_of_degree(n, 3)) {
            const auto idx = indices_of(m);
            const PolyScalar jac = jacobiator(pi, idx[0], idx[1], idx[2]);
            const PolyScalar sch = br.coefficient(m);
            CHECK(jac.is_zero() == sch.is_zero());
            if (jac.is_zero()) continue;
            const auto& [e, c] = *jac.terms().begin();
            const Rational r = sch.terms().count(e) ? sch.terms().at(e) / c : Rational(0);
            if (!ratio) ratio = r;
            CHECK(r == *ratio);
            CHECK(sch == jac * r);
        }
    }
    REQUIRE(ratio);
    CHECK(abs(*ratio) == 2);
}

TEST_CASE("Lie-Poisson structures pass the operator identity on top forms") {
    std::mt19937_64 rng(16);
    for (const auto& g : {LieAlgebraData::so3(), LieAlgebraData::sl2(), LieAlgebraData::heisenberg(),
                          LieAlgebraData::book(1, 0, 0, 1)}) {
        const PoissonStructure pi = lie_poisson(g);
        CHECK(jacobi_check(pi.bivector).ok);
        const DiffForm mu = test::random_form(3, 3, 3, rng);
        for (int k = 0; k <= 1; ++k) CHECK(lemma1_residue(pi.bivector, mu, k).is_zero());
    }
}

TEST_CASE("sharp and power") {
    const int n = 2;
    Multivector pi(n, 2);
    pi.add(mask_of({0, 1}), PolyScalar::constant(n, 1));
    // pi#(dx) = dy: beta(pi#dx) = pi(dx, beta)
    const Multivector v = sharp(pi, differential(test::var(n, 0)));
    CHECK(v == Multivector::basis(n, {1}, PolyScalar::constant(n, 1)));
    CHECK(multivector_power(pi, 0) == Multivector::scalar(n, PolyScalar::constant(n, 1)));
    CHECK(multivector_power(pi, 2).is_zero());
    CHECK(small_determinant({2, 1, 1, 3}, 2) == doctest::Approx(5.0));
}
