#pragma once

// Exact graded calculus on a single chart.
//
// Conventions:
//   iota_{u^v} = iota_u o iota_v, iota_u contracts into the first slot;
//   Schouten bracket normalized so that [u, f] = u(f), [u, v] is the Lie bracket,
//   and iota_{[P,Q]} = [[iota_P, d], iota_Q] (graded commutators) on forms.

#include "ptk/expr.hpp"
#include "ptk/graded.hpp"

#include <span>
#include <vector>

namespace ptk {

Multivector wedge(const Multivector& a, const Multivector& b);
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Degree p - k; a zero 0-form when k > p.
DiffForm interior_product(const Multivector& w, const DiffForm& eta);

DiffForm exterior_derivative(const DiffForm& eta);

Multivector schouten_bracket(const Multivector& p, const Multivector& q);

/// pi^0 = 1, pi^k = pi ^ ... ^ pi.
Multivector multivector_power(const Multivector& pi, int k);

/// The 1-form df.
DiffForm differential(const PolyScalar& f);

/// pi#(alpha), defined by beta(pi#(alpha)) = pi(alpha, beta) for a bivector pi.
Multivector sharp(const Multivector& pi, const DiffForm& alpha);

/// L_X eta = d iota_X eta + iota_X d eta.
DiffForm lie_derivative(const Multivector& x, const DiffForm& eta);

/// Directional derivative u(f) for a vector field u.
PolyScalar apply_vector(const Multivector& u, const PolyScalar& f);

/// Determinant of a small dense row-major n x n matrix (partial pivoting).
double small_determinant(std::vector<double> a, int n);

/// Values and Jacobians of a parametrization phi: R^d -> R^m at many parameter points.
/// Layout is structure-of-arrays: values[a][s], jacobian[a * d + b][s] = d phi_a / d t_b.
struct MapJets {
    int target_dim = 0;
    int param_dim = 0;
    std::size_t count = 0;
    std::vector<std::vector<double>> values;
    std::vector<std::vector<double>> jacobian;
};

/// Exact symbolic derivatives of each component, evaluated at every point.
/// `points` is structure-of-arrays: points[b][s].
MapJets evaluate_jets(const std::vector<Expression>& phi, int param_dim,
                      const std::vector<std::vector<double>>& points);

/// Pullback of a polynomial form along a parametrization, evaluated numerically.
class PullbackEvaluator {
public:
    PullbackEvaluator(const DiffForm& eta, std::vector<Expression> phi, int param_dim);

    int degree() const { return degree_; }
    /// Basis of the pulled-back form (masks over the parameters); empty when deg > d.
    const std::vector<Mask>& masks() const { return out_masks_; }

    std::vector<double> operator()(std::span<const double> t) const;

    /// result[k][s]: coefficient of masks()[k] at point s (points in SoA layout).
    std::vector<std::vector<double>> evaluate_batch(const std::vector<std::vector<double>>& points) const;

    /// Same as evaluate_batch but from precomputed jets.
    std::vector<std::vector<double>> evaluate_jets(const MapJets& jets) const;

    const std::vector<Expression>& map() const { return phi_; }

private:
    DiffForm eta_;
    std::vector<Expression> phi_;
    int param_dim_;
    int degree_;
    std::vector<Mask> out_masks_;
};

/// Batched numeric values of a polynomial at the points of `jets.values` (or any SoA).
std::vector<double> evaluate_poly_batch(const PolyScalar& p, const std::vector<std::vector<double>>& points);

}  // namespace ptk
