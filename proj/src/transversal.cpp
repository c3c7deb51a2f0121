#include "ptk/transversal.hpp"

#include "ptk/error.hpp"
#include "ptk/simd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ptk {

Patch reverse_parameter(const Patch& patch, int index) {
    if (index < 0 || index >= patch.dim()) throw std::invalid_argument("parameter index out of range");
    std::vector<Expression> vars;
    for (int i = 0; i < patch.dim(); ++i) {
        Expression v = Expression::variable(i, patch.param_names[static_cast<std::size_t>(i)]);
        vars.push_back(i == index ? -v : v);
    }
    Patch out = patch;
    out.map.clear();
    for (const Expression& e : patch.map) out.map.push_back(e.substitute(vars));
    ParamRange& r = out.ranges[static_cast<std::size_t>(index)];
    r = ParamRange{r.periodic, -r.max, -r.min};
    return out;
}

namespace {

Grid patch_grid(const Patch& patch, const SamplingOptions& opts) {
    return make_grid(patch.ranges, opts.periodic_nodes, opts.interval_nodes);
}

}  // namespace

PatchValidation validate_patch(const Chart& chart, const Patch& patch, const SamplingOptions& opts) {
    PatchValidation v;
    if (static_cast<int>(patch.map.size()) != chart.dim) {
        return {false, "map has " + std::to_string(patch.map.size()) + " components for a chart of dimension " +
                           std::to_string(chart.dim)};
    }
    const int d = patch.dim();
    if (d > chart.dim) return {false, "patch dimension exceeds chart dimension"};
    const Grid grid = patch_grid(patch, opts);
    const MapJets jets = evaluate_jets(patch.map, d, grid.points);
    const int m = chart.dim;
    std::vector<double> gram(static_cast<std::size_t>(d * d));
    for (std::size_t s = 0; s < jets.count && d > 0; ++s) {
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                double g = 0.0;
                for (int i = 0; i < m; ++i) {
                    g += jets.jacobian[static_cast<std::size_t>(i * d + a)][s] * jets.jacobian[static_cast<std::size_t>(i * d + b)][s];
                }
                gram[static_cast<std::size_t>(a * d + b)] = g;
            }
        }
        const double volume = std::sqrt(std::fmax(0.0, small_determinant(gram, d)));
        if (volume <= opts.tol) {
            std::string where;
            for (int b = 0; b < d; ++b) where += (b ? ", " : "") + std::to_string(grid.points[static_cast<std::size_t>(b)][s]);
            return {false, "not an immersion at parameters (" + where + ")"};
        }
    }
    const double period = 2.0 * std::numbers::pi;
    for (int i = 0; i < d; ++i) {
        const ParamRange& r = patch.ranges[static_cast<std::size_t>(i)];
        if (!r.periodic) continue;
        for (std::size_t s = 0; s < grid.size(); s += std::max<std::size_t>(1, grid.size() / 16)) {
            std::vector<double> lo(static_cast<std::size_t>(d));
            for (int b = 0; b < d; ++b) lo[static_cast<std::size_t>(b)] = grid.points[static_cast<std::size_t>(b)][s];
            std::vector<double> hi = lo;
            lo[static_cast<std::size_t>(i)] = r.min;
            hi[static_cast<std::size_t>(i)] = r.max;
            for (int c = 0; c < m; ++c) {
                double diff = patch.map[static_cast<std::size_t>(c)].evaluate(hi) - patch.map[static_cast<std::size_t>(c)].evaluate(lo);
                if (chart.periodic[static_cast<std::size_t>(c)]) diff = std::remainder(diff, period);
                if (std::fabs(diff) > 1e-12) {
                    return {false, "periodic parameter " + patch.param_names[static_cast<std::size_t>(i)] +
                                       " does not close up in coordinate " + chart.coords[static_cast<std::size_t>(c)]};
                }
            }
        }
    }
    return v;
}

TransversalityReport transversality_check(const Chart& chart, const PoissonStructure& pi, const Patch& patch,
                                          const SamplingOptions& opts) {
    TransversalityReport r;
    const int m = chart.dim;
    const int d = patch.dim();
    r.codim = m - d;
    if (r.codim < 0) throw PreconditionError("patch " + patch.name + " has more parameters than the chart dimension");
    if (r.codim % 2 != 0) {
        throw PreconditionError("patch " + patch.name + " has odd codimension " + std::to_string(r.codim) +
                                "; transversals have even codimension");
    }
    r.q = r.codim / 2;
    const PatchValidation v = validate_patch(chart, patch, opts);
    if (!v.ok) {
        r.valid_patch = false;
        r.invalid_reason = v.problem;
        return r;
    }
    const DiffForm form = interior_product(multivector_power(pi.bivector, r.q), coordinate_volume(m));
    const PullbackEvaluator eval(form, patch.map, d);
    const Grid grid = patch_grid(patch, opts);
    const auto values = eval.evaluate_batch(grid.points);
    const std::vector<double> zeros(grid.size(), 0.0);
    const std::vector<double>& det = values.empty() ? zeros : values[0];
    const simd::MinMax mm = simd::active().min_max(det.data(), det.size());
    r.min_abs = mm.min_abs;
    r.is_transversal = mm.min_abs > opts.tol;
    r.sign_constant = mm.min > opts.tol || mm.max < -opts.tol;
    r.sign = r.sign_constant ? (mm.min > 0 ? 1 : -1) : 0;
    for (std::size_t s = 0; s < grid.size(); ++s) {
        DeterminantSample sample;
        for (int b = 0; b < d; ++b) sample.params.push_back(grid.points[static_cast<std::size_t>(b)][s]);
        sample.value = det[s];
        r.samples.push_back(std::move(sample));
    }
    return r;
}

PairingResult pair(const DiffForm& alpha, const Patch& patch, const SamplingOptions& opts) {
    if (alpha.degree() != patch.dim() && !alpha.is_zero()) {
        throw PreconditionError("form of degree " + std::to_string(alpha.degree()) + " cannot be integrated over a " +
                                std::to_string(patch.dim()) + "-dimensional patch");
    }
    PairingResult r;
    r.closed = exterior_derivative(alpha).is_zero();
    if (!r.closed) r.warning = "form is not closed; the value is a raw integral, not a pairing of classes";
    DiffForm form = alpha;
    if (form.is_zero()) form = DiffForm(alpha.dim(), patch.dim());
    const PullbackEvaluator eval(form, patch.map, patch.dim());
    const auto integrand = [&](const Grid& grid) {
        auto values = eval.evaluate_batch(grid.points);
        return values.empty() ? std::vector<double>(grid.size(), 0.0) : values[0];
    };
    const IntegralResult ir = integrate_adaptive(patch.ranges, integrand, opts.periodic_nodes, opts.interval_nodes, opts.tol);
    r.value = ir.value;
    r.previous = ir.previous;
    r.converged = ir.converged;
    r.periodic_nodes = ir.periodic_nodes;
    r.interval_nodes = ir.interval_nodes;
    return r;
}

HnptCertificate hnpt_certificate(const Chart& chart, const PoissonStructure& pi, const DiffForm& mu, const Patch& patch,
                                 const SamplingOptions& opts) {
    HnptCertificate c;
    const DensityCheck density = check_invariant_density(pi, mu);
    if (!density.ok) {
        c.status = CertificateStatus::NotUnimodularCertified;
        c.reason = "d(iota_pi mu) is nonzero";
        return c;
    }
    const TransversalityReport t = transversality_check(chart, pi, patch, opts);
    c.q = t.q;
    if (!t.valid_patch) {
        c.status = CertificateStatus::InvalidPatch;
        c.reason = t.invalid_reason;
        return c;
    }
    if (!t.is_transversal) {
        c.status = CertificateStatus::NotTransversal;
        c.reason = "determinant vanishes on the sample grid";
        return c;
    }
    c.form = interior_product(multivector_power(pi.bivector, t.q), mu);
    const PullbackEvaluator eval(c.form, patch.map, patch.dim());
    const Grid grid = patch_grid(patch, opts);
    const std::vector<double> values = eval.evaluate_batch(grid.points)[0];
    c.sample_count = values.size();
    c.orientation = values[0] > 0 ? 1 : (values[0] < 0 ? -1 : 0);
    if (c.orientation == 0) {
        c.status = CertificateStatus::NotPositive;
        c.reason = "integrand vanishes at the first sample";
        return c;
    }
    const simd::MinMax mm = simd::active().min_max(values.data(), values.size());
    c.min_integrand = c.orientation > 0 ? mm.min : -mm.max;
    const auto oriented = [&](const Grid& g) {
        auto v = eval.evaluate_batch(g.points)[0];
        for (double& x : v) x *= c.orientation;
        return v;
    };
    const IntegralResult ir = integrate_adaptive(patch.ranges, oriented, opts.periodic_nodes, opts.interval_nodes, opts.tol);
    c.integral = ir.value;
    c.refinement_delta = std::fabs(ir.value - ir.previous);
    if (!(c.min_integrand > 0.0) || !(c.integral > 0.0)) {
        c.status = CertificateStatus::NotPositive;
        c.reason = "oriented integrand is not positive at every sample";
        return c;
    }
    c.status = CertificateStatus::Certified;
    return c;
}

PointCoorientation point_coorientation(const PoissonStructure& pi, const std::vector<double>& p, double tol) {
    const int m = pi.dim();
    if (m % 2 != 0) throw PreconditionError("point coorientation needs an even-dimensional chart");
    if (static_cast<int>(p.size()) != m) throw InputError("point has the wrong dimension");
    PointCoorientation r;
    r.coefficient = multivector_power(pi.bivector, m / 2).coefficient(full_mask(m)).evaluate(p);
    if (std::fabs(r.coefficient) < tol) return r;
    r.ok = true;
    r.sign = r.coefficient > 0 ? 1 : -1;
    return r;
}

}  // namespace ptk
