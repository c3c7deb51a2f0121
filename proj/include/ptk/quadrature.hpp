#pragma once

// Tensor-product quadrature on parameter boxes: trapezoid rule on periodic
// directions, Gauss-Legendre on closed intervals.

#include <cstddef>
#include <functional>
#include <vector>

namespace ptk {

struct ParamRange {
    bool periodic = false;
    double min = 0.0;
    double max = 0.0;
};

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n equally spaced nodes on [a, b) with equal weights.
Rule1D trapezoid_periodic(std::size_t n, double a, double b);
/// n-point Gauss-Legendre rule mapped to [a, b].
Rule1D gauss_legendre(std::size_t n, double a, double b);

/// Tensor grid in structure-of-arrays layout; a zero-dimensional grid has one point.
struct Grid {
    std::vector<std::vector<double>> points;  // points[b][s]
    std::vector<double> weights;
    std::size_t size() const { return weights.size(); }
};

Grid tensor_grid(const std::vector<Rule1D>& rules);

/// Rule per direction: `periodic_nodes` for periodic params, `interval_nodes` otherwise.
Grid make_grid(const std::vector<ParamRange>& ranges, std::size_t periodic_nodes, std::size_t interval_nodes);

struct IntegralResult {
    double value = 0.0;
    double previous = 0.0;     // value at the previous refinement level
    std::size_t periodic_nodes = 0;
    std::size_t interval_nodes = 0;
    bool converged = false;
};

/// Integrates `f` (values at every grid point) with node doubling until two
/// successive values agree within `tol` (absolute) or `max_nodes` is reached.
IntegralResult integrate_adaptive(const std::vector<ParamRange>& ranges,
                                  const std::function<std::vector<double>(const Grid&)>& f,
                                  std::size_t periodic_nodes, std::size_t interval_nodes, double tol,
                                  std::size_t max_nodes = 4096);

/// Weighted sum of sampled values on a grid.
double integrate_on(const Grid& grid, const std::vector<double>& values);

}  // namespace ptk
