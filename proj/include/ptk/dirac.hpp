#pragma once

// Linear Dirac structures L in V + V* with exact rational arithmetic: spinor and
// co-spinor lines, backward and forward transport along linear maps, the
// transversal conditions on subspaces, and the spinor test for unimodularity.
//
// Elements of the exterior algebras are dense vectors of length 2^n indexed by
// basis bitmask: forms over V* for spinors, multivectors over V for co-spinors.

#include "ptk/linalg.hpp"
#include "ptk/poisson.hpp"

#include <random>
#include <string>
#include <vector>

namespace ptk {

using ExtVector = std::vector<Rational>;

struct LinearDirac {
    int n = 0;
    Matrix basis;  // n rows of length 2n: V-part then V*-part

    static LinearDirac tangent(int n);
    static LinearDirac cotangent(int n);
    /// Graph {(pi#xi, xi)} of an antisymmetric n x n matrix, pi#xi = sum_a xi_a P[a][b] e_b.
    static LinearDirac graph_bivector(const Matrix& p);
    /// Graph {(u, iota_u w)} of an antisymmetric n x n matrix, (iota_u w)_b = sum_a u_a W[a][b].
    static LinearDirac graph_form(const Matrix& w);
    /// Row span of `rows` (reduced); throws InputError unless it is Lagrangian.
    static LinearDirac from_rows(int n, const Matrix& rows);

    bool is_lagrangian() const;
};

/// Antisymmetric matrix of a constant-coefficient bivector or 2-form, or of a field at a rational point.
Matrix antisymmetric_matrix(const Multivector& pi, const std::vector<Rational>& point);
Matrix antisymmetric_matrix(const DiffForm& omega, const std::vector<Rational>& point);

/// Spans {phi : (iota_u + xi^) phi = 0 for all rows}; throws PreconditionError unless 1-dimensional.
ExtVector spinor_line(const LinearDirac& l);
/// Spans {w : u ^ w + iota_xi w = 0 for all rows}.
ExtVector cospinor_line(const LinearDirac& l);

/// iota_phi w_top with iota_{e^I} e_J = iota_{e^i1} o ... o iota_{e^ik} e_J.
ExtVector spinor_cospinor_iso(const ExtVector& phi, const ExtVector& w_top, int n);

/// Both nonzero and proportional.
bool same_line(const ExtVector& a, const ExtVector& b);
bool is_zero_vector(const ExtVector& v);

/// f^* on forms: f is dim W x dim V.
ExtVector pullback_forms(const ExtVector& psi, const Matrix& f, int dim_w, int dim_v);
/// f_* on multivectors.
ExtVector pushforward_multivectors(const ExtVector& w, const Matrix& f, int dim_w, int dim_v);
/// iota_v phi for a multivector v and a form phi.
ExtVector contract(const ExtVector& v, const ExtVector& phi, int n);

struct PullbackResult {
    LinearDirac result;
    bool transverse = false;       // ker(f^*) meets L_M trivially
    bool lagrangian = false;
    bool spinor_relation = false;  // f^* K_{L_M} = K_{f^! L_M} (checked when transverse)
};

/// f^!(L_M) for f: V -> W given as a dim W x dim V matrix.
PullbackResult backward_pullback(const LinearDirac& lm, const Matrix& f, int dim_v);

struct PushforwardResult {
    LinearDirac result;
    bool strong = false;        // ker(f_*) meets L_P trivially
    bool surjective = false;
    bool lagrangian = false;
    bool checked_transport = false;
    bool cospinor_transport = false;  // f_* C_{L_P} = C_{L_M}
    bool spinor_contraction = false;  // iota_v phi spans f^* K_{L_M}, v the top multivector of ker f
};

PushforwardResult forward_pushforward(const LinearDirac& lp, const Matrix& f, int dim_w);

struct TransversalFlags {
    bool b = false;  // (TX + N*X) meets L trivially
    bool c = false;  // top degree of the restricted spinor is nonzero
    bool d = false;  // co-spinor projects nontrivially to the top power of V/X
    bool agree() const { return b == c && c == d; }
};

/// X given by basis rows (k x n, full rank).
TransversalFlags transversal_conditions(const LinearDirac& l, const Matrix& x);

struct DiracUnimodularResult {
    bool closed = false;
    std::vector<DiffForm> components;  // (-1)^k iota_{pi^k} mu / k!
    std::vector<bool> component_closed;
};

DiracUnimodularResult dirac_unimodular_check(const PoissonStructure& pi, const DiffForm& mu);

/// Random Lagrangian built from V or V* by pairing-preserving moves with small rational entries.
LinearDirac random_lagrangian(int n, std::mt19937_64& rng, int moves = 6);
/// Random k x n matrix of rank k with small integer entries.
Matrix random_subspace(int n, int k, std::mt19937_64& rng);

/// "a,b;c,d" row-major.
Matrix parse_matrix(const std::string& text);
std::string matrix_to_string(const Matrix& m);
/// e.g. "1 + e1^e2" (prefix "e") or "v1^v2" (prefix "v").
std::string ext_to_string(const ExtVector& v, const std::string& prefix);

}  // namespace ptk
