#include "ptk/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ptk;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const Rule1D r = gauss_legendre(n, -1.0, 2.0);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], static_cast<double>(k));
            const double exact = (std::pow(2.0, k + 1.0) - std::pow(-1.0, k + 1.0)) / (k + 1.0);
            CHECK(s == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("periodic trapezoid rule converges spectrally") {
    // int_0^{2pi} exp(cos t) dt = 2 pi I_0(1)
    const double exact = 2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0);
    const Rule1D r = trapezoid_periodic(24, 0.0, 2.0 * std::numbers::pi);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::exp(std::cos(r.nodes[i]));
    CHECK(std::abs(s - exact) < 1e-14 * exact);
}

TEST_CASE("tensor grids and refinement") {
    const std::vector<ParamRange> ranges{{true, 0.0, 2.0 * std::numbers::pi}, {false, 0.0, 1.0}};
    const Grid g = make_grid(ranges, 16, 4);
    CHECK(g.size() == 64);
    std::vector<double> v(g.size());
    for (std::size_t s = 0; s < g.size(); ++s) v[s] = std::pow(std::sin(g.points[0][s]), 2) * std::pow(g.points[1][s], 3);
    CHECK(integrate_on(g, v) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-13));

    const IntegralResult r = integrate_adaptive(
        ranges,
        [](const Grid& grid) {
            std::vector<double> out(grid.size());
            for (std::size_t s = 0; s < grid.size(); ++s) out[s] = std::exp(std::cos(grid.points[0][s])) * std::exp(grid.points[1][s]);
            return out;
        },
        8, 4, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0) * (std::exp(1.0) - 1.0)).epsilon(1e-12));
    CHECK(std::abs(r.value - r.previous) < 1e-12);
}
