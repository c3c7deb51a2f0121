#pragma once

// Poisson structures on a chart: verification, Lie-Poisson structures,
// Hamiltonian fields, invariant densities, log-symplectic loci, fiber
// integration over product charts, and pointwise Poisson-map checks.

#include "ptk/calculus.hpp"
#include "ptk/linalg.hpp"
#include "ptk/quadrature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ptk {

/// Coordinate chart; periodic coordinates have period 2*pi.
struct Chart {
    int dim = 0;
    std::vector<std::string> coords;
    std::vector<bool> periodic;

    static Chart euclidean(std::vector<std::string> names);
};

struct PoissonStructure {
    Multivector bivector;
    bool verified = false;

    int dim() const { return bivector.dim(); }
};

struct Density {
    std::string name;
    DiffForm top_form;
    std::string note;
};

struct JacobiResult {
    bool ok = false;
    Multivector bracket;          // [b, b]
    Mask witness_mask = 0;
    PolyScalar witness_coefficient;
};

JacobiResult jacobi_check(const Multivector& b);

/// Verifies [b, b] = 0; throws PreconditionError with the witness otherwise.
PoissonStructure make_poisson(const Multivector& b);

/// Structure constants c^k_ij stored at (i * n + j) * n + k.
class LieAlgebraData {
public:
    LieAlgebraData(int n, std::vector<Rational> constants);

    int dim() const { return n_; }
    const Rational& c(int i, int j, int k) const {
        return constants_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
    }

    static LieAlgebraData so3();
    static LieAlgebraData sl2();
    static LieAlgebraData heisenberg();
    static LieAlgebraData abelian(int n);
    /// [e1, e3] = a e1 + b e2, [e2, e3] = c e1 + d e2, [e1, e2] = 0 for A = [[a, b], [c, d]].
    static LieAlgebraData book(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

private:
    int n_;
    std::vector<Rational> constants_;
};

PoissonStructure lie_poisson(const LieAlgebraData& g);

/// {f, g} = pi(df, dg).
PolyScalar poisson_bracket(const Multivector& pi, const PolyScalar& f, const PolyScalar& g);

/// pi#(df); its action on g is {f, g}.
Multivector hamiltonian_field(const PoissonStructure& pi, const PolyScalar& f);

struct DensityCheck {
    bool ok = false;
    DiffForm d_iota;  // d(iota_pi mu)
};

DensityCheck check_invariant_density(const PoissonStructure& pi, const DiffForm& mu);

struct ChainEntry {
    int k = 0;
    DiffForm form;        // iota_{pi^k} mu
    DiffForm derivative;  // d of it
    bool closed = false;
};

std::vector<ChainEntry> modular_chain(const PoissonStructure& pi, const DiffForm& mu);

/// Basis of polynomial g of degree <= bound with d iota_pi(g Omega) = 0.
std::vector<PolyScalar> solve_invariant_density(const PoissonStructure& pi, int degree_bound);

/// Smallest value of the top coefficient of mu over the points (SoA), for positivity checks.
double density_min(const DiffForm& mu, const std::vector<std::vector<double>>& points);

enum class LocusStatus { OnLocusTransverse, OnLocusDegenerate, OffLocus, Inconclusive };

struct WitnessVerdict {
    std::vector<double> point;
    double f = 0.0;
    double df_norm = 0.0;
    LocusStatus status = LocusStatus::Inconclusive;
    int sign = 0;  // sign of f off the locus
};

struct LogSymplecticReport {
    PolyScalar f;                 // coefficient of pi^k on the coordinate volume
    bool exact_certificate = false;  // some partial derivative of f is a nonzero constant
    int certificate_coordinate = -1;
    std::vector<WitnessVerdict> witnesses;
};

/// Witnesses with |f| <= tol are on Z; |f| >= 100 tol off it; in between inconclusive.
LogSymplecticReport log_symplectic_analysis(const PoissonStructure& pi, const std::vector<std::vector<double>>& witnesses,
                                            double tol);

/// Form with Expression coefficients (trig allowed) on a chart.
struct ExprForm {
    int dim = 0;
    int degree = 0;
    std::map<Mask, Expression> terms;

    ExprForm exterior_derivative() const;
    std::vector<double> evaluate(std::span<const double> point) const;  // in masks_of_degree order
};

struct Fiber {
    std::vector<int> coords;        // chart coordinates spanning F, increasing
    std::vector<ParamRange> ranges; // one per fiber coordinate
};

/// f_%(omega) on the base; components are indexed by base masks of degree deg - dim F.
/// Convention: f_%(g dx_J ^ dt_F) = (integral of g over F) dx_J.
class FiberIntegral {
public:
    FiberIntegral(ExprForm omega, Fiber fiber, std::size_t nodes);

    int base_dim() const { return omega_.dim - static_cast<int>(fiber_.coords.size()); }
    int degree() const { return omega_.degree - static_cast<int>(fiber_.coords.size()); }
    /// Base masks of the result, in masks_of_degree order; empty when degree < 0.
    const std::vector<Mask>& masks() const { return masks_; }
    std::vector<double> operator()(std::span<const double> base_point) const;

private:
    ExprForm omega_;
    Fiber fiber_;
    Grid grid_;
    std::vector<int> base_coords_;
    std::vector<Mask> masks_;
};

struct MapCheckSample {
    std::vector<double> point;
    double deviation = 0.0;
    bool ok = false;
};

/// Pointwise test of phi_*(pi_P) = pi_M o phi with the exact Jacobian of phi.
std::vector<MapCheckSample> poisson_map_check(const std::vector<Expression>& phi, const Multivector& pi_p,
                                              const Multivector& pi_m, const std::vector<std::vector<double>>& samples,
                                              double tol);

}  // namespace ptk
