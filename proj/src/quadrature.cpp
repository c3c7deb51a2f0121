#include "ptk/quadrature.hpp"

#include "ptk/simd.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace ptk {

Rule1D trapezoid_periodic(std::size_t n, double a, double b) {
    if (n == 0) throw std::invalid_argument("quadrature needs at least one node");
    Rule1D r;
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        r.nodes.push_back(a + h * static_cast<double>(k));
        r.weights.push_back(h);
    }
    return r;
}

Rule1D gauss_legendre(std::size_t n, double a, double b) {
    if (n == 0) throw std::invalid_argument("quadrature needs at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(n), &gsl_integration_glfixed_table_free);
    if (!table) throw std::runtime_error("cannot allocate Gauss-Legendre table");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(a, b, i, &r.nodes[i], &r.weights[i], table.get());
    }
    return r;
}

Grid tensor_grid(const std::vector<Rule1D>& rules) {
    Grid g;
    g.points.assign(rules.size(), {});
    g.weights = {1.0};
    for (std::size_t d = 0; d < rules.size(); ++d) {
        const Rule1D& rule = rules[d];
        std::vector<double> weights;
        std::vector<std::vector<double>> points(rules.size());
        for (std::size_t s = 0; s < g.weights.size(); ++s) {
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                for (std::size_t e = 0; e < d; ++e) points[e].push_back(g.points[e][s]);
                points[d].push_back(rule.nodes[k]);
                weights.push_back(g.weights[s] * rule.weights[k]);
            }
        }
        g.points = std::move(points);
        g.weights = std::move(weights);
    }
    return g;
}

Grid make_grid(const std::vector<ParamRange>& ranges, std::size_t periodic_nodes, std::size_t interval_nodes) {
    std::vector<Rule1D> rules;
    for (const ParamRange& r : ranges) {
        rules.push_back(r.periodic ? trapezoid_periodic(periodic_nodes, r.min, r.max)
                                   : gauss_legendre(interval_nodes, r.min, r.max));
    }
    return tensor_grid(rules);
}

double integrate_on(const Grid& grid, const std::vector<double>& values) {
    if (values.size() != grid.size()) throw std::invalid_argument("sample count does not match grid");
    return simd::active().dot(grid.weights.data(), values.data(), values.size());
}

IntegralResult integrate_adaptive(const std::vector<ParamRange>& ranges,
                                  const std::function<std::vector<double>(const Grid&)>& f,
                                  std::size_t periodic_nodes, std::size_t interval_nodes, double tol,
                                  std::size_t max_nodes) {
    IntegralResult r;
    std::size_t np = periodic_nodes;
    std::size_t ni = interval_nodes;
    Grid grid = make_grid(ranges, np, ni);
    double value = integrate_on(grid, f(grid));
    while (true) {
        if (2 * std::max(np, ni) > max_nodes) {
            r.value = value;
            r.previous = value;
            r.periodic_nodes = np;
            r.interval_nodes = ni;
            r.converged = ranges.empty();
            return r;
        }
        np *= 2;
        ni *= 2;
        grid = make_grid(ranges, np, ni);
        const double next = integrate_on(grid, f(grid));
        if (std::fabs(next - value) <= tol || ranges.empty()) {
            r.value = next;
            r.previous = value;
            r.periodic_nodes = np;
            r.interval_nodes = ni;
            r.converged = true;
            return r;
        }
        value = next;
    }
}

}  // namespace ptk
