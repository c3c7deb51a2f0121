#include "support.hpp"

#include "ptk/error.hpp"
#include "ptk/poisson.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ptk;

TEST_CASE("Jacobi check") {
    const PoissonStructure so3 = lie_poisson(LieAlgebraData::so3());
    CHECK(jacobi_check(so3.bivector).ok);
    CHECK(make_poisson(so3.bivector).verified);

    // y Dx^Dy + x Dy^Dz has Jacobiator -x
    Multivector b(3, 2);
    b.add(mask_of({0, 1}), test::var(3, 1));
    b.add(mask_of({1, 2}), test::var(3, 0));
    const JacobiResult j = jacobi_check(b);
    CHECK_FALSE(j.ok);
    CHECK(j.witness_mask == mask_of({0, 1, 2}));
    const PolyScalar two_x = Rational(2) * test::var(3, 0);
    CHECK((j.witness_coefficient == two_x || j.witness_coefficient == -two_x));
    CHECK_THROWS_AS(make_poisson(b), PreconditionError);
}

TEST_CASE("so3 brackets and Hamiltonian fields") {
    const PoissonStructure pi = lie_poisson(LieAlgebraData::so3());
    const PolyScalar x = test::var(3, 0), y = test::var(3, 1), z = test::var(3, 2);
    CHECK(poisson_bracket(pi.bivector, x, y) == z);
    CHECK(poisson_bracket(pi.bivector, y, z) == x);
    // the Casimir
    const PolyScalar c = x * x + y * y + z * z;
    CHECK(hamiltonian_field(pi, c).is_zero());
    const Multivector xh = hamiltonian_field(pi, x);
    CHECK(apply_vector(xh, y) == poisson_bracket(pi.bivector, x, y));
}

TEST_CASE("invariant densities") {
    const PoissonStructure so3 = lie_poisson(LieAlgebraData::so3());
    const auto sols = solve_invariant_density(so3, 1);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].is_constant());

    const PoissonStructure book = lie_poisson(LieAlgebraData::book(1, 0, 0, 1));
    CHECK(solve_invariant_density(book, 0).empty());
    DiffForm mu(3, 3);
    mu.add(mask_of({0, 1, 2}), PolyScalar::constant(3, 1));
    const DensityCheck dc = check_invariant_density(book, mu);
    CHECK_FALSE(dc.ok);
    const auto chain = modular_chain(book, mu);
    REQUIRE(chain.size() >= 2);
    CHECK(chain[0].closed);
    CHECK_FALSE(chain[1].closed);
    CHECK(chain[1].derivative == dc.d_iota);
    CHECK(density_min(mu, {{0.0, 1.0}, {2.0, 3.0}, {1.0, 1.0}}) == 1.0);
}

TEST_CASE("log-symplectic locus of z Dz^Dtheta") {
    Multivector b(2, 2);
    b.add(mask_of({0, 1}), test::var(2, 0));
    const LogSymplecticReport r = log_symplectic_analysis(make_poisson(b), {{0.0, 1.0}, {0.5, 0.0}}, 1e-9);
    CHECK(r.exact_certificate);
    CHECK(r.certificate_coordinate == 0);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].status == LocusStatus::OnLocusTransverse);
    CHECK(r.witnesses[1].status == LocusStatus::OffLocus);
    CHECK(r.witnesses[1].sign == 1);
}

TEST_CASE("fiber integration over a circle") {
    const std::vector<std::string> names{"x", "theta"};
    ExprForm w;
    w.dim = 2;
    w.degree = 1;
    w.terms[mask_of({1})] = parse_expr("x*sin(theta)^2", names, true);
    w.terms[mask_of({0})] = parse_expr("cos(theta)", names, true);
    const FiberIntegral f(w, Fiber{{1}, {{true, 0.0, 2.0 * std::numbers::pi}}}, 64);
    CHECK(f.degree() == 0);
    const std::vector<double> base{3.0};
    CHECK(f(base)[0] == doctest::Approx(3.0 * std::numbers::pi).epsilon(1e-14));
    CHECK_THROWS_AS(FiberIntegral(w, Fiber{{1}, {{false, 1.0, 0.0}}}, 8), InputError);
}

TEST_CASE("Poisson map check") {
    const PoissonStructure so3 = lie_poisson(LieAlgebraData::so3());
    const std::vector<std::string> names{"x", "y", "z"};
    std::vector<Expression> id, scaled;
    for (const auto& n : names) {
        id.push_back(parse_expr(n, names, false));
        scaled.push_back(parse_expr("2*" + n, names, false));
    }
    for (const auto& s : poisson_map_check(id, so3.bivector, so3.bivector, {{1, 2, 3}, {0, 0, 1}}, 1e-12)) CHECK(s.ok);
    bool all = true;
    for (const auto& s : poisson_map_check(scaled, so3.bivector, so3.bivector, {{1, 2, 3}}, 1e-12)) all = all && s.ok;
    CHECK_FALSE(all);
}
