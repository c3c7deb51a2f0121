#pragma once

// Built-in scenes, the classifier for 3-dimensional Lie algebras with a
// two-dimensional abelian ideal, the flat circle-bundle test, and the rule
// engine deciding HNPT and weak HNPT from computed checks and declared facts.

#include "ptk/dirac.hpp"
#include "ptk/scene.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptk {

enum class Property { Hnpt, WeakHnpt, TransversalNontrivial, ProperSymplecticRealization };
enum class Status { Holds, Fails, Inconclusive };

std::string to_string(Property p);
std::string to_string(Status s);

struct Citation {
    std::string label;  // e.g. "Theorem 4"
    std::string text;   // statement, verbatim
};

/// Citation for a rule id; throws std::out_of_range for unknown ids.
const Citation& citation(const std::string& rule);

struct Verdict {
    Property property = Property::Hnpt;
    std::string subject;  // patch name(s) for transversal-nontrivial, else empty
    Status status = Status::Inconclusive;
    std::string rule;     // empty when inconclusive
    Citation cite;
    std::string detail;
};

class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- classifier -------------------------------------------------------------

struct Lie3Classification {
    std::string name;            // named algebra, or empty for a matrix
    bool semisimple = false;
    bool has_matrix = false;     // book form X ^ d/dz with X = A(x, y)
    Matrix a;
    Rational trace, det, discriminant;
    bool eigen_rational = false;
    std::vector<std::string> eigenvalues;  // exact text
    std::vector<double> eigen_real;        // real parts
    std::vector<double> eigen_imag;
    bool circle_exists = false;
    bool unimodular = false;
    bool density_solver_agrees = false;    // degree-0 invariant density exists iff unimodular
    std::string criterion;
    std::optional<PatchSpec> circle;
    bool circle_is_unit = false;
    bool circle_checked = false;
    bool circle_transversal = false;       // from transversality_check
    double circle_min_abs = 0.0;
};

/// Book-form Lie algebra of A: [e1, e3] = a e1 + b e2, [e2, e3] = c e1 + d e2.
Lie3Classification classify_lie3(const Matrix& a, const SamplingOptions& opts = {});
/// "so3", "sl2", "heisenberg", "abelian", "book-id"; throws InputError otherwise.
Lie3Classification classify_lie3(const std::string& name, const SamplingOptions& opts = {});

/// Lie-Poisson structure of the book-form algebra of A on (x, y, z).
PoissonStructure book_structure(const Matrix& a);

// ---- flat bundles and deck maps ----------------------------------------------

/// Principal circle bundle over a genus g surface with Chern number n.
Verdict flat_bundle_check(long genus, long chern);

struct DeckCheck {
    bool preserves = false;             // phi_* pi = pi o phi, exactly
    bool orientation_reversing = false; // det of the Jacobian is a negative constant
    bool involution = false;            // phi o phi = id modulo 2 pi on periodic coordinates
    Rational jacobian_det;
    std::string detail;
};

DeckCheck deck_map_check(const CompiledScene& scene);

// ---- scenes -------------------------------------------------------------------

inline constexpr int kCatalogVersion = 1;

std::vector<Scene> builtin_scenes();
std::optional<Scene> find_builtin(const std::string& name);

// ---- checks feeding the engine -----------------------------------------------

struct DensityFacts {
    std::string name;
    bool invariant = false;
    bool positive = false;  // coefficient is a positive constant
    DiffForm d_iota;
    std::vector<ChainEntry> chain;
};

struct PatchFacts {
    std::string name;
    int dim = 0;
    int codim = 0;
    bool closed = false;   // every parameter periodic, so the image is a closed manifold
    bool checked = false;
    std::string skipped;   // reason when not checked
    bool valid = false;
    std::string invalid_reason;
    bool transversal = false;
    bool sign_constant = false;
    int sign = 0;
    double min_abs = 0.0;
    double witness_value = 0.0;             // determinant at the sample of smallest modulus
    std::vector<double> witness_params;
    std::optional<PointCoorientation> point;
    std::optional<HnptCertificate> certificate;
};

struct ComputedFacts {
    bool symbolic = true;
    bool poisson = false;
    JacobiResult jacobi;
    std::vector<DensityFacts> densities;
    std::optional<std::string> certified_density;
    std::vector<PatchFacts> patches;
    std::optional<LogSymplecticReport> log;
    bool log_symplectic = false;
    std::optional<DeckCheck> deck;
    std::optional<Verdict> flat_bundle;
    std::optional<Lie3Classification> book;
    double tol = 1e-9;
};

ComputedFacts compute_facts(const CompiledScene& scene, const SamplingOptions& opts);

/// Forward chaining over the fixed rule table. Properties no rule decides are
/// reported inconclusive. Throws ContradictionError when a property both holds and fails.
std::vector<Verdict> verdict_engine(const Scene& scene, const ComputedFacts& facts);

/// "HNPT <status>[ (<label>)]; weak HNPT <status>[ (<label>)]"; labels name theorems and corollaries only.
std::string summary_line(const std::vector<Verdict>& verdicts);

/// 0 when nothing fails and something holds, 1 when something fails, 3 when all inconclusive.
int exit_code(const std::vector<Verdict>& verdicts);

}  // namespace ptk
