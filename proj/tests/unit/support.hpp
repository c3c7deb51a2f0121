#pragma once

#include "ptk/calculus.hpp"
#include "ptk/exterior.hpp"

#include <random>

namespace ptk::test {

inline Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Random polynomial with small rational coefficients and total degree <= max_degree.
inline PolyScalar random_poly(int nvars, int max_degree, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    const auto monomials = monomials_up_to(nvars, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    PolyScalar p(nvars);
    for (int t = 0; t < terms; ++t) p.add_term(monomials[pick(rng)], q(num(rng), den(rng)));
    return p;
}

inline DiffForm random_form(int dim, int degree, int max_degree, std::mt19937_64& rng) {
    DiffForm w(dim, degree);
    for (Mask m : masks_of_degree(dim, degree)) w.add(m, random_poly(dim, max_degree, 2, rng));
    return w;
}

inline Multivector random_multivector(int dim, int degree, int max_degree, std::mt19937_64& rng) {
    Multivector w(dim, degree);
    for (Mask m : masks_of_degree(dim, degree)) w.add(m, random_poly(dim, max_degree, 2, rng));
    return w;
}

inline PolyScalar var(int nvars, int i) { return PolyScalar::variable(nvars, i); }

}  // namespace ptk::test
