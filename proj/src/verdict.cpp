#include "ptk/catalog.hpp"

#include "ptk/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ptk {

ComputedFacts compute_facts(const CompiledScene& scene, const SamplingOptions& opts) {
    ComputedFacts f;
    f.tol = opts.tol;
    f.symbolic = scene.source.symbolic;
    if (scene.source.flat_bundle) f.flat_bundle = flat_bundle_check(scene.source.flat_bundle->genus, scene.source.flat_bundle->chern);
    if (!f.symbolic) return f;

    f.jacobi = jacobi_check(scene.pi.bivector);
    f.poisson = f.jacobi.ok;
    if (!f.poisson) return f;
    PoissonStructure pi = scene.pi;
    pi.verified = true;
    const Chart& chart = scene.source.chart;
    const int m = chart.dim;

    for (const Density& d : scene.densities) {
        DensityFacts df;
        df.name = d.name;
        const DensityCheck check = check_invariant_density(pi, d.top_form);
        df.invariant = check.ok;
        df.d_iota = check.d_iota;
        const PolyScalar coeff = d.top_form.coefficient(full_mask(m));
        df.positive = coeff.is_constant() && sgn(coeff.constant_term()) > 0;
        df.chain = modular_chain(pi, d.top_form);
        if (df.invariant && df.positive && !f.certified_density) f.certified_density = d.name;
        f.densities.push_back(std::move(df));
    }

    for (const Patch& p : scene.patches) {
        PatchFacts pf;
        pf.name = p.name;
        pf.dim = p.dim();
        pf.codim = m - pf.dim;
        pf.closed = std::all_of(p.ranges.begin(), p.ranges.end(), [](const ParamRange& r) { return r.periodic; });
        if (pf.codim < 0) {
            pf.skipped = "more parameters than chart coordinates";
        } else if (pf.codim % 2 != 0) {
            pf.skipped = "odd codimension " + std::to_string(pf.codim);
        } else {
            pf.checked = true;
            const TransversalityReport t = transversality_check(chart, pi, p, opts);
            pf.valid = t.valid_patch;
            pf.invalid_reason = t.invalid_reason;
            pf.transversal = t.valid_patch && t.is_transversal;
            pf.sign_constant = t.sign_constant;
            pf.sign = t.sign;
            pf.min_abs = t.min_abs;
            if (!t.samples.empty()) {
                const auto w = std::min_element(t.samples.begin(), t.samples.end(), [](const auto& a, const auto& b) {
                    return std::fabs(a.value) < std::fabs(b.value);
                });
                pf.witness_value = w->value;
                pf.witness_params = w->params;
            }
            if (pf.dim == 0 && m % 2 == 0) {
                std::vector<double> at;
                for (const Expression& e : p.map) at.push_back(e.evaluate({}));
                pf.point = point_coorientation(pi, at, opts.tol);
            }
            if (f.certified_density && pf.transversal) {
                pf.certificate = hnpt_certificate(chart, pi, scene.density(*f.certified_density)->top_form, p, opts);
            }
        }
        f.patches.push_back(std::move(pf));
    }

    if (m % 2 == 0) {
        f.log = log_symplectic_analysis(pi, scene.source.witnesses, opts.tol);
        f.log_symplectic = f.log->exact_certificate;
    }
    if (scene.source.deck_map) f.deck = deck_map_check(scene);
    if (scene.source.book_matrix) f.book = classify_lie3(parse_matrix(*scene.source.book_matrix), opts);
    return f;
}

namespace {

class Engine {
public:
    explicit Engine(const Scene& scene) : scene_(scene) {}

    void fire(Property p, const std::string& subject, Status s, const std::string& rule, std::string detail) {
        Verdict v;
        v.property = p;
        v.subject = subject;
        v.status = s;
        v.rule = rule;
        v.cite = citation(rule);
        v.detail = std::move(detail);
        out_.push_back(std::move(v));
    }

    bool decided(Property p, Status s) const {
        return std::any_of(out_.begin(), out_.end(), [&](const Verdict& v) { return v.property == p && v.status == s; });
    }

    std::vector<Verdict> finish() {
        for (std::size_t i = 0; i < out_.size(); ++i) {
            for (std::size_t j = i + 1; j < out_.size(); ++j) {
                const Verdict& a = out_[i];
                const Verdict& b = out_[j];
                if (a.property == b.property && a.subject == b.subject && a.status != b.status) {
                    throw ContradictionError("contradiction in scene " + scene_.name + ": " + to_string(a.property) +
                                             " " + to_string(a.status) + " by " + a.rule + " (" + a.detail + ") but " +
                                             to_string(b.status) + " by " + b.rule + " (" + b.detail + ")");
                }
            }
        }
        for (Property p : {Property::Hnpt, Property::WeakHnpt}) {
            const bool any = std::any_of(out_.begin(), out_.end(), [&](const Verdict& v) { return v.property == p; });
            if (!any) {
                Verdict v;
                v.property = p;
                v.detail = "no rule applies";
                out_.push_back(v);
            }
        }
        return out_;
    }

private:
    const Scene& scene_;
    std::vector<Verdict> out_;
};

std::string fact_source(const Scene& s, const std::string& fact) {
    const Annotation* a = s.annotation(fact);
    return a && !a->source.empty() ? fact + " (" + a->source + ")" : fact;
}

}  // namespace

std::vector<Verdict> verdict_engine(const Scene& scene, const ComputedFacts& f) {
    Engine e(scene);
    const bool model = f.symbolic && f.poisson;

    if (model && f.certified_density) {
        e.fire(Property::Hnpt, "", Status::Holds, "theorem-1",
               "density " + *f.certified_density + " is positive and d(iota_pi mu) = 0");
    }
    if (scene.has("leaves_closed")) {
        e.fire(Property::Hnpt, "", Status::Holds, "theorem-3", "declared " + fact_source(scene, "leaves_closed"));
    }
    if (scene.has("surjective_proper_symplectic_realization")) {
        e.fire(Property::Hnpt, "", Status::Holds, "corollary-1",
               "declared " + fact_source(scene, "surjective_proper_symplectic_realization"));
    }
    if (scene.has("surjective_proper_poisson_map_from_hnpt")) {
        e.fire(Property::Hnpt, "", Status::Holds, "theorem-2",
               "declared " + fact_source(scene, "surjective_proper_poisson_map_from_hnpt"));
    }

    for (const PatchFacts& p : f.patches) {
        if (!model || !p.transversal || !p.closed) continue;
        if (p.certificate && p.certificate->status == CertificateStatus::Certified) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "oriented integral of iota_{pi^%d} mu is %.12g > 0", p.certificate->q,
                          p.certificate->integral);
            e.fire(Property::TransversalNontrivial, p.name, Status::Holds, "theorem-1-pairing", buf);
        }
        if (scene.has("meets_closed_unimodular_submanifold")) {
            e.fire(Property::TransversalNontrivial, p.name, Status::Holds, "corollary-3",
                   "declared " + fact_source(scene, "meets_closed_unimodular_submanifold"));
        }
        if (f.log_symplectic && scene.has("orientable")) {
            e.fire(Property::TransversalNontrivial, p.name, Status::Holds, "theorem-5",
                   "log-symplectic (exact certificate), orientable, " + p.name + " is connected");
        }
        const std::string homology = "H" + std::to_string(p.dim) + "_vanishes";
        if (p.dim > 0 && scene.has(homology)) {
            const std::string detail = p.name + " is a closed transversal of dimension " + std::to_string(p.dim) +
                                       " and " + fact_source(scene, homology);
            e.fire(Property::TransversalNontrivial, p.name, Status::Fails, "example-1", detail);
            e.fire(Property::Hnpt, "", Status::Fails, "example-1", detail);
        }
    }

    if (!f.symbolic && scene.has("transversal_circles_exist") && scene.has("H1_vanishes") && scene.has("compact")) {
        e.fire(Property::Hnpt, "", Status::Fails, "example-2",
               "declared " + fact_source(scene, "transversal_circles_exist") + " and " + fact_source(scene, "H1_vanishes"));
    }

    if (model && scene.has("orientable")) {
        const PatchFacts* plus = nullptr;
        const PatchFacts* minus = nullptr;
        for (const PatchFacts& p : f.patches) {
            if (!p.point || !p.point->ok || !p.transversal) continue;
            if (p.point->sign > 0 && !plus) plus = &p;
            if (p.point->sign < 0 && !minus) minus = &p;
        }
        if (plus && minus) {
            e.fire(Property::Hnpt, "", Status::Fails, "example-7",
                   "coorientations differ: " + plus->name + " has sign +, " + minus->name + " has sign -; [" + plus->name +
                       "] - [" + minus->name + "] = 0");
        }
    }

    if (model && f.deck && f.deck->preserves && f.deck->orientation_reversing && f.deck->involution &&
        scene.has("deck_free")) {
        for (const PatchFacts& p : f.patches) {
            if (!p.point || !p.point->ok || !p.transversal) continue;
            const std::string detail = "deck map preserves pi exactly and reverses orientation (det " +
                                       to_string(f.deck->jacobian_det) + "); " + p.name + " lies in the symplectic locus";
            e.fire(Property::TransversalNontrivial, p.name, Status::Fails, "example-8", detail);
            e.fire(Property::Hnpt, "", Status::Fails, "example-8", detail);
        }
    }

    if (model && f.log_symplectic) {
        e.fire(Property::WeakHnpt, "", Status::Holds, "theorem-4",
               "log-symplectic: pi^k vanishes transversally (exact certificate in coordinate " +
                   scene.chart.coords[static_cast<std::size_t>(f.log->certificate_coordinate)] + ")");
    } else if (!f.symbolic && scene.has("is_log_symplectic")) {
        e.fire(Property::WeakHnpt, "", Status::Holds, "theorem-4", "declared " + fact_source(scene, "is_log_symplectic"));
    }

    if (f.flat_bundle && f.flat_bundle->status == Status::Fails) {
        e.fire(Property::WeakHnpt, "", Status::Fails, "example-3", f.flat_bundle->detail);
    }

    if (scene.has("regular_corank_one") && scene.has("compact") && scene.has("orientable") && scene.has("H1_vanishes")) {
        e.fire(Property::ProperSymplecticRealization, "", Status::Fails, "corollary-2",
               "declared regular_corank_one, compact, orientable, H1_vanishes");
    }

    if (scene.has("saturation_class_nontrivial")) {
        e.fire(Property::WeakHnpt, "", Status::Holds, "definition-3",
               "declared " + fact_source(scene, "saturation_class_nontrivial"));
    }

    if (e.decided(Property::Hnpt, Status::Holds) && !e.decided(Property::WeakHnpt, Status::Holds)) {
        e.fire(Property::WeakHnpt, "", Status::Holds, "hnpt-implies-weak", "[X] nonzero in M implies nonzero in St(X)");
    }
    if (e.decided(Property::WeakHnpt, Status::Fails) && !e.decided(Property::Hnpt, Status::Fails)) {
        e.fire(Property::Hnpt, "", Status::Fails, "weak-fails-implies-hnpt-fails",
               "[X] trivial in St(X) implies trivial in M");
    }
    return e.finish();
}

std::string summary_line(const std::vector<Verdict>& verdicts) {
    auto part = [&](Property p, const std::string& title) {
        for (const Verdict& v : verdicts) {
            if (v.property != p) continue;
            std::string s = title + " " + to_string(v.status);
            const std::string& label = v.cite.label;
            if (label.rfind("Theorem", 0) == 0 || label.rfind("Corollary", 0) == 0) s += " (" + label + ")";
            return s;
        }
        return title + " inconclusive";
    };
    return part(Property::Hnpt, "HNPT") + "; " + part(Property::WeakHnpt, "weak HNPT");
}

int exit_code(const std::vector<Verdict>& verdicts) {
    bool holds = false;
    for (const Verdict& v : verdicts) {
        if (v.status == Status::Fails) return 1;
        if (v.status == Status::Holds) holds = true;
    }
    return holds ? 0 : 3;
}

}  // namespace ptk
