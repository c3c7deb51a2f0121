#pragma once

// Parametrized submanifolds, Poisson-transversality with its coorientation,
// pairing of closed forms with compact patches, and the positivity certificate
// for iota_{pi^q} mu on a transversal.

#include "ptk/poisson.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptk {

struct Patch {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<ParamRange> ranges;
    std::vector<Expression> map;  // one component per chart coordinate

    int dim() const { return static_cast<int>(ranges.size()); }
};

/// Same image with parameter `index` reversed (t -> -t on [-max, -min]).
Patch reverse_parameter(const Patch& patch, int index);

struct SamplingOptions {
    std::size_t periodic_nodes = 256;
    std::size_t interval_nodes = 64;
    double tol = 1e-9;
};

struct PatchValidation {
    bool ok = true;
    std::string problem;
};

/// Immersion on the sample grid and closure of periodic directions (modulo chart periods).
PatchValidation validate_patch(const Chart& chart, const Patch& patch, const SamplingOptions& opts);

struct DeterminantSample {
    std::vector<double> params;
    double value = 0.0;
};

struct TransversalityReport {
    bool valid_patch = true;
    std::string invalid_reason;
    int codim = 0;
    int q = 0;
    bool is_transversal = false;
    bool sign_constant = false;
    int sign = 0;          // common sign when sign_constant
    double min_abs = 0.0;
    std::vector<DeterminantSample> samples;
};

/// The sampled determinant is (iota_{pi^q} Omega)(d phi/dt_1, ..., d phi/dt_d).
/// Throws PreconditionError for odd codimension.
TransversalityReport transversality_check(const Chart& chart, const PoissonStructure& pi, const Patch& patch,
                                          const SamplingOptions& opts);

struct PairingResult {
    double value = 0.0;
    double previous = 0.0;   // value before the last node doubling
    bool closed = false;     // d alpha = 0 exactly
    bool converged = false;
    std::size_t periodic_nodes = 0;
    std::size_t interval_nodes = 0;
    std::string warning;
};

/// Integral of alpha over the patch; deg alpha must equal the patch dimension.
PairingResult pair(const DiffForm& alpha, const Patch& patch, const SamplingOptions& opts);

enum class CertificateStatus { Certified, NotUnimodularCertified, NotTransversal, InvalidPatch, NotPositive };

struct HnptCertificate {
    CertificateStatus status = CertificateStatus::NotTransversal;
    std::string reason;
    int q = 0;
    int orientation = 0;         // sign fixing the patch orientation
    double min_integrand = 0.0;  // of the oriented integrand over the samples
    double integral = 0.0;       // oriented
    double refinement_delta = 0.0;
    std::size_t sample_count = 0;
    DiffForm form;               // iota_{pi^q} mu
};

HnptCertificate hnpt_certificate(const Chart& chart, const PoissonStructure& pi, const DiffForm& mu, const Patch& patch,
                                 const SamplingOptions& opts);

struct PointCoorientation {
    bool ok = false;
    int sign = 0;
    double coefficient = 0.0;
};

/// Sign of the coefficient of pi^{m/2} at p against the coordinate volume multivector.
PointCoorientation point_coorientation(const PoissonStructure& pi, const std::vector<double>& p, double tol);

}  // namespace ptk
