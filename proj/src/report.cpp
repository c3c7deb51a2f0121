#include "ptk/report.hpp"

#include "ptk/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptk {

using nlohmann::ordered_json;

std::string format_number(double v) {
    if (std::fabs(v) < 1e-13) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render(const Report& r, bool json_only) {
    const std::string block = r.json.dump(2);
    if (json_only) return block + "\n";
    return r.text + "\n```json\n" + block + "\n```\n";
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string point_text(const std::vector<double>& p) {
    std::vector<std::string> parts;
    for (double v : p) parts.push_back(format_number(v));
    return "(" + join(parts, ", ") + ")";
}

ordered_json number_array(const std::vector<double>& p) {
    ordered_json a = ordered_json::array();
    for (double v : p) a.push_back(format_number(v));
    return a;
}

std::string chart_text(const Chart& c) {
    std::string out = join(c.coords, ", ");
    std::vector<std::string> periodic;
    for (int i = 0; i < c.dim; ++i) {
        if (c.periodic[static_cast<std::size_t>(i)]) periodic.push_back(c.coords[static_cast<std::size_t>(i)]);
    }
    if (!periodic.empty()) out += " (periodic: " + join(periodic, ", ") + ")";
    return out;
}

std::string sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "changes"); }

const Patch& need_patch(const CompiledScene& scene, const std::string& name) {
    const Patch* p = scene.patch(name);
    if (!p) {
        std::vector<std::string> names;
        for (const Patch& q : scene.patches) names.push_back(q.name);
        throw InputError("scene " + scene.source.name + " has no patch '" + name + "' (patches: " +
                         (names.empty() ? "none" : join(names, ", ")) + ")");
    }
    return *p;
}

std::string status_text(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Certified: return "certified";
        case CertificateStatus::NotUnimodularCertified: return "not-unimodular-certified";
        case CertificateStatus::NotTransversal: return "not-transversal";
        case CertificateStatus::InvalidPatch: return "invalid-patch";
        case CertificateStatus::NotPositive: return "not-positive";
    }
    return "";
}

std::string locus_text(LocusStatus s) {
    switch (s) {
        case LocusStatus::OnLocusTransverse: return "on locus, transverse";
        case LocusStatus::OnLocusDegenerate: return "on locus, degenerate";
        case LocusStatus::OffLocus: return "off locus";
        case LocusStatus::Inconclusive: return "inconclusive";
    }
    return "";
}

std::string book_trace_note(const Lie3Classification& c) {
    return sgn(c.trace) == 0 ? "unimodular (tr(A) = 0)" : "not unimodular (tr(A) = " + to_string(c.trace) + " != 0)";
}

void require_poisson(const CompiledScene& scene) {
    if (!scene.source.symbolic) throw InputError("scene " + scene.source.name + " declares facts only and has no bivector to compute with");
    const JacobiResult j = jacobi_check(scene.pi.bivector);
    if (!j.ok) {
        throw PreconditionError("scene " + scene.source.name + " is not Poisson: [pi, pi] has coefficient " +
                                j.witness_coefficient.to_string(scene.source.chart.coords) + " on " +
                                Multivector::basis(scene.pi.dim(), indices_of(j.witness_mask), PolyScalar::constant(scene.pi.dim(), 1))
                                    .to_string(scene.source.chart.coords));
    }
}

PoissonStructure verified(const CompiledScene& scene) {
    PoissonStructure pi = scene.pi;
    pi.verified = true;
    return pi;
}

ordered_json certificate_json(const HnptCertificate& c) {
    ordered_json j;
    j["status"] = status_text(c.status);
    j["q"] = c.q;
    if (c.status == CertificateStatus::Certified || c.status == CertificateStatus::NotPositive) {
        j["orientation"] = c.orientation;
        j["min_integrand"] = format_number(c.min_integrand);
        j["integral"] = format_number(c.integral);
        j["refinement_delta"] = format_number(c.refinement_delta);
        j["samples"] = c.sample_count;
    }
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

std::string certificate_text(const HnptCertificate& c) {
    std::string out = status_text(c.status);
    if (c.status == CertificateStatus::Certified || c.status == CertificateStatus::NotPositive) {
        out += ", q " + std::to_string(c.q) + ", orientation " + sign_text(c.orientation) + ", min integrand " +
               format_number(c.min_integrand) + ", integral " + format_number(c.integral) + ", refinement delta " +
               format_number(c.refinement_delta);
    }
    if (!c.reason.empty() && c.status != CertificateStatus::Certified) out += " (" + c.reason + ")";
    return out;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["property"] = to_string(v.property);
    if (!v.subject.empty()) j["subject"] = v.subject;
    j["status"] = to_string(v.status);
    if (!v.rule.empty()) {
        j["rule"] = v.rule;
        j["label"] = v.cite.label;
        j["citation"] = v.cite.text;
    }
    j["detail"] = v.detail;
    return j;
}

std::string classify_text(const Lie3Classification& c) {
    std::ostringstream out;
    if (!c.name.empty()) out << "algebra: " << c.name << "\n";
    if (c.semisimple) {
        out << "semisimple: yes\n";
    } else {
        out << "matrix A: " << matrix_to_string(c.a) << "\n";
        out << "trace: " << to_string(c.trace) << "\ndeterminant: " << to_string(c.det) << "\n";
        out << "eigenvalues: " << join(c.eigenvalues, ", ") << (c.eigen_rational ? " (rational)" : " (exact, quadratic)") << "\n";
    }
    out << "criterion: " << c.criterion << "\n";
    out << "transverse circle: " << (c.circle_exists ? "yes" : "no") << "\n";
    out << "unimodular: " << (c.unimodular ? "yes" : "no") << "\n";
    out << "degree-0 density solver agrees: " << (c.density_solver_agrees ? "yes" : "no") << "\n";
    if (c.circle) {
        out << "circle: (" << join(c.circle->map, ", ") << "), t in [0, 2pi]" << (c.circle_is_unit ? " (unit circle)" : " (Lyapunov ellipse)")
            << "\n";
        out << "circle transversality check: " << (c.circle_transversal ? "transversal, sign constant" : "failed")
            << ", min |det| " << format_number(c.circle_min_abs) << "\n";
    }
    return out.str();
}

ordered_json classify_json(const Lie3Classification& c) {
    ordered_json j;
    if (!c.name.empty()) j["algebra"] = c.name;
    j["semisimple"] = c.semisimple;
    if (c.has_matrix) {
        j["matrix"] = matrix_to_string(c.a);
        j["trace"] = to_string(c.trace);
        j["determinant"] = to_string(c.det);
        j["eigenvalues"] = c.eigenvalues;
        j["eigenvalues_rational"] = c.eigen_rational;
    }
    j["transverse_circle"] = c.circle_exists;
    j["unimodular"] = c.unimodular;
    j["density_solver_agrees"] = c.density_solver_agrees;
    if (c.circle) {
        j["circle"] = c.circle->map;
        j["circle_unit"] = c.circle_is_unit;
        j["circle_transversal"] = c.circle_transversal;
    }
    return j;
}

}  // namespace

Report report_verify(const CompiledScene& scene) {
    Report r;
    const auto& coords = scene.source.chart.coords;
    std::ostringstream out;
    out << "scene: " << scene.source.name << "\n";
    r.json["command"] = "verify";
    r.json["scene"] = scene.source.name;
    if (!scene.source.symbolic) throw InputError("scene " + scene.source.name + " declares facts only and has no bivector to verify");
    out << "bivector: " << scene.pi.bivector.to_string(coords) << "\n";
    const JacobiResult j = jacobi_check(scene.pi.bivector);
    r.json["poisson"] = j.ok;
    if (j.ok) {
        out << "[pi, pi] = 0: Poisson\n";
    } else {
        const std::string basis =
            Multivector::basis(scene.pi.dim(), indices_of(j.witness_mask), PolyScalar::constant(scene.pi.dim(), 1)).to_string(coords);
        out << "[pi, pi] = " << j.bracket.to_string(coords) << "\n";
        out << "not Poisson: coefficient of " << basis << " is " << j.witness_coefficient.to_string(coords) << "\n";
        r.json["witness"] = {{"basis", basis}, {"coefficient", j.witness_coefficient.to_string(coords)}};
        r.exit_code = 1;
    }
    r.text = out.str();
    return r;
}

Report report_unimodular(const CompiledScene& scene, std::optional<int> degree, std::optional<std::string> density) {
    require_poisson(scene);
    const PoissonStructure pi = verified(scene);
    const auto& coords = scene.source.chart.coords;
    Report r;
    std::ostringstream out;
    out << "scene: " << scene.source.name << "\n";
    r.json["command"] = "unimodular";
    r.json["scene"] = scene.source.name;
    if (density) {
        const Density* d = scene.density(*density);
        if (!d) throw InputError("scene " + scene.source.name + " has no density '" + *density + "'");
        const DensityCheck check = check_invariant_density(pi, d->top_form);
        out << "density " << d->name << ": " << d->top_form.to_string(coords) << "\n";
        out << "d(iota_pi mu) = " << check.d_iota.to_string(coords) << (check.ok ? ": invariant\n" : ": not invariant\n");
        out << "modular chain:\n";
        ordered_json chain = ordered_json::array();
        for (const ChainEntry& e : modular_chain(pi, d->top_form)) {
            out << "  k=" << e.k << ": iota_{pi^" << e.k << "} mu = " << e.form.to_string(coords) << "; d = "
                << e.derivative.to_string(coords) << (e.closed ? " (closed)" : " (not closed)") << "\n";
            chain.push_back({{"k", e.k},
                             {"form", e.form.to_string(coords)},
                             {"derivative", e.derivative.to_string(coords)},
                             {"closed", e.closed}});
        }
        r.json["density"] = d->name;
        r.json["invariant"] = check.ok;
        r.json["d_iota"] = check.d_iota.to_string(coords);
        r.json["chain"] = chain;
        r.exit_code = check.ok ? 0 : 1;
    } else {
        const int bound = degree.value_or(0);
        if (bound < 0) throw InputError("degree must be nonnegative");
        const auto basis = solve_invariant_density(pi, bound);
        std::vector<std::string> texts;
        for (const PolyScalar& g : basis) texts.push_back(g.to_string(coords));
        r.json["degree"] = bound;
        r.json["basis"] = texts;
        if (!basis.empty()) {
            out << "invariant densities g*Omega with deg g <= " << bound << ": basis {" << join(texts, ", ") << "}\n";
            r.exit_code = 0;
        } else {
            out << "invariant densities g*Omega with deg g <= " << bound << ": none up to degree " << bound << "\n";
            r.exit_code = 3;
        }
        if (scene.source.book_matrix) {
            const Lie3Classification c = classify_lie3(parse_matrix(*scene.source.book_matrix));
            out << "exact trace criterion: " << book_trace_note(c) << "\n";
            r.json["trace_criterion"] = book_trace_note(c);
            r.json["unimodular"] = c.unimodular;
            r.exit_code = c.unimodular ? 0 : 1;
        }
    }
    r.text = out.str();
    return r;
}

Report report_transversal(const CompiledScene& scene, const std::string& name, const SamplingOptions& opts) {
    require_poisson(scene);
    const Patch& patch = need_patch(scene, name);
    const PoissonStructure pi = verified(scene);
    const TransversalityReport t = transversality_check(scene.source.chart, pi, patch, opts);
    Report r;
    std::ostringstream out;
    out << "scene: " << scene.source.name << "\npatch: " << name << " (dim " << patch.dim() << ", codim " << t.codim
        << ", q " << t.q << ")\n";
    r.json["command"] = "transversal";
    r.json["scene"] = scene.source.name;
    r.json["patch"] = name;
    r.json["codim"] = t.codim;
    r.json["samples"] = t.samples.size();
    if (!t.valid_patch) {
        out << "invalid patch: " << t.invalid_reason << "\n";
        r.json["valid"] = false;
        r.json["reason"] = t.invalid_reason;
        r.exit_code = 1;
        r.text = out.str();
        return r;
    }
    out << "samples: " << t.samples.size() << "\n";
    const auto w = std::min_element(t.samples.begin(), t.samples.end(),
                                    [](const auto& a, const auto& b) { return std::fabs(a.value) < std::fabs(b.value); });
    r.json["valid"] = true;
    r.json["transversal"] = t.is_transversal;
    r.json["sign"] = t.is_transversal ? sign_text(t.sign) : "changes";
    r.json["min_abs"] = format_number(t.min_abs);
    if (t.is_transversal && t.sign_constant) {
        out << "transversal: yes, sign " << sign_text(t.sign) << ", min |det| " << format_number(t.min_abs) << "\n";
    } else {
        out << "transversal: no; determinant " << format_number(w->value) << " at parameters " << point_text(w->params) << "\n";
        r.json["witness"] = {{"params", number_array(w->params)}, {"value", format_number(w->value)}};
        r.exit_code = 1;
    }
    if (patch.dim() == 0 && scene.source.chart.dim % 2 == 0) {
        std::vector<double> at;
        for (const Expression& e : patch.map) at.push_back(e.evaluate({}));
        const PointCoorientation pc = point_coorientation(pi, at, opts.tol);
        out << "point " << point_text(at) << ": coefficient of pi^" << scene.source.chart.dim / 2 << " is "
            << format_number(pc.coefficient) << ", coorientation " << (pc.ok ? sign_text(pc.sign) : "undefined") << "\n";
        r.json["point_coorientation"] = pc.ok ? sign_text(pc.sign) : "undefined";
        r.json["point_coefficient"] = format_number(pc.coefficient);
    }
    r.text = out.str();
    return r;
}

Report report_pair(const CompiledScene& scene, const std::string& name, const std::string& form, const SamplingOptions& opts) {
    require_poisson(scene);
    const Patch& patch = need_patch(scene, name);
    const PoissonStructure pi = verified(scene);
    const auto& coords = scene.source.chart.coords;
    Report r;
    std::ostringstream out;
    out << "scene: " << scene.source.name << "\npatch: " << name << "\n";
    r.json["command"] = "pair";
    r.json["scene"] = scene.source.name;
    r.json["patch"] = name;
    if (form == "auto") {
        if (scene.densities.empty()) throw InputError("scene " + scene.source.name + " has no density for --form auto");
        const Density& d = scene.densities.front();
        const HnptCertificate c = hnpt_certificate(scene.source.chart, pi, d.top_form, patch, opts);
        out << "form: iota_{pi^q} mu with density " << d.name << "\n";
        if (c.status == CertificateStatus::Certified) out << "iota_{pi^" << c.q << "} mu = " << c.form.to_string(coords) << "\n";
        out << "certificate: " << certificate_text(c) << "\n";
        r.json["form"] = "auto";
        r.json["density"] = d.name;
        r.json["certificate"] = certificate_json(c);
        r.exit_code = c.status == CertificateStatus::Certified ? 0 : 1;
    } else {
        const DiffForm* alpha = scene.form(form);
        if (!alpha) throw InputError("scene " + scene.source.name + " has no form '" + form + "'");
        const PairingResult p = pair(*alpha, patch, opts);
        out << "form " << form << ": " << alpha->to_string(coords) << "\n";
        out << "integral: " << format_number(p.value) << " (previous refinement " << format_number(p.previous) << ", "
            << (p.converged ? "converged" : "not converged") << ")\n";
        if (!p.warning.empty()) out << "warning: " << p.warning << "\n";
        r.json["form"] = form;
        r.json["value"] = format_number(p.value);
        r.json["closed"] = p.closed;
        r.json["converged"] = p.converged;
        if (!p.warning.empty()) r.json["warning"] = p.warning;
        r.exit_code = p.converged ? 0 : 3;
    }
    r.text = out.str();
    return r;
}

Report report_full(const CompiledScene& scene, const SamplingOptions& opts) {
    const Scene& s = scene.source;
    const auto& coords = s.chart.coords;
    const ComputedFacts f = compute_facts(scene, opts);
    Report r;
    std::ostringstream out;
    r.json["command"] = "report";
    r.json["scene"] = s.name;
    out << "scene: " << s.name << "\n";
    if (!s.description.empty()) out << "description: " << s.description << "\n";
    out << "chart: " << chart_text(s.chart) << "\n";
    if (!s.symbolic) {
        out << "model: declared facts only\n";
    } else {
        out << "bivector: " << scene.pi.bivector.to_string(coords) << "\n";
        out << "poisson: " << (f.poisson ? "yes ([pi, pi] = 0)" : "no") << "\n";
        r.json["poisson"] = f.poisson;
    }
    if (!s.annotations.empty()) {
        out << "declared facts:\n";
        ordered_json facts = ordered_json::array();
        for (const Annotation& a : s.annotations) {
            out << "  " << a.fact << (a.source.empty() ? "" : " [" + a.source + "]") << "\n";
            facts.push_back(a.fact);
        }
        r.json["declared"] = facts;
    }
    if (!f.densities.empty()) {
        out << "densities:\n";
        ordered_json ds = ordered_json::array();
        for (const DensityFacts& d : f.densities) {
            std::vector<std::string> flags;
            for (const ChainEntry& e : d.chain) flags.push_back("k=" + std::to_string(e.k) + (e.closed ? " closed" : " not closed"));
            out << "  " << d.name << ": d(iota_pi mu) = " << d.d_iota.to_string(coords) << "; "
                << (d.invariant ? "invariant" : "not invariant") << (d.positive ? ", positive constant" : "") << "\n";
            out << "    chain: " << join(flags, ", ") << "\n";
            ordered_json chain = ordered_json::array();
            for (const ChainEntry& e : d.chain) chain.push_back(e.closed);
            ds.push_back({{"name", d.name}, {"invariant", d.invariant}, {"positive", d.positive}, {"chain_closed", chain}});
        }
        r.json["densities"] = ds;
    }
    if (f.log) {
        out << "top power: pi^" << s.chart.dim / 2 << " = f * (top coordinate multivector) with f = " << f.log->f.to_string(coords) << "\n";
        if (f.log->exact_certificate) {
            out << "  log-symplectic: exact certificate, d f/d" << coords[static_cast<std::size_t>(f.log->certificate_coordinate)]
                << " is a nonzero constant\n";
        } else {
            out << "  log-symplectic: no exact certificate\n";
        }
        ordered_json ws = ordered_json::array();
        for (const WitnessVerdict& w : f.log->witnesses) {
            out << "  witness " << point_text(w.point) << ": f = " << format_number(w.f) << ", " << locus_text(w.status) << "\n";
            ws.push_back({{"point", number_array(w.point)}, {"f", format_number(w.f)}, {"status", locus_text(w.status)}});
        }
        r.json["log_symplectic"] = f.log_symplectic;
        if (!ws.empty()) r.json["witnesses"] = ws;
    }
    if (!f.patches.empty()) {
        out << "patches:\n";
        ordered_json ps = ordered_json::array();
        for (const PatchFacts& p : f.patches) {
            ordered_json pj;
            pj["name"] = p.name;
            pj["dim"] = p.dim;
            pj["codim"] = p.codim;
            out << "  " << p.name << ": dim " << p.dim << ", codim " << p.codim << (p.closed ? ", closed" : ", with boundary");
            if (!p.checked) {
                out << "; skipped (" << p.skipped << ")\n";
                pj["skipped"] = p.skipped;
                ps.push_back(pj);
                continue;
            }
            if (!p.valid) {
                out << "; invalid (" << p.invalid_reason << ")\n";
                pj["valid"] = false;
                ps.push_back(pj);
                continue;
            }
            if (p.transversal && p.sign_constant) {
                out << "; transversal, sign " << sign_text(p.sign) << ", min |det| " << format_number(p.min_abs) << "\n";
            } else {
                out << "; not transversal, determinant " << format_number(p.witness_value) << " at parameters "
                    << point_text(p.witness_params) << "\n";
            }
            pj["transversal"] = p.transversal;
            pj["sign"] = p.transversal ? sign_text(p.sign) : "changes";
            if (p.point) {
                out << "    point coorientation: " << (p.point->ok ? sign_text(p.point->sign) : "undefined") << " (coefficient "
                    << format_number(p.point->coefficient) << ")\n";
                pj["point_coorientation"] = p.point->ok ? sign_text(p.point->sign) : "undefined";
            }
            if (p.certificate) {
                out << "    certificate: " << certificate_text(*p.certificate) << "\n";
                pj["certificate"] = certificate_json(*p.certificate);
            }
            ps.push_back(pj);
        }
        r.json["patches"] = ps;
    }
    if (f.deck) {
        out << "deck map: (" << join(s.deck_map->map, ", ") << ") + pi*(" << join(s.deck_map->shift_pi, ", ") << "): " << f.deck->detail
            << "\n";
        r.json["deck"] = {{"preserves", f.deck->preserves},
                          {"orientation_reversing", f.deck->orientation_reversing},
                          {"involution", f.deck->involution}};
    }
    if (f.book) {
        out << "book matrix: A = " << matrix_to_string(f.book->a) << "; eigenvalues " << join(f.book->eigenvalues, ", ") << "; "
            << (f.book->circle_exists ? "transverse circle exists" : "no transverse circle") << "; " << book_trace_note(*f.book)
            << "\n";
        r.json["book"] = classify_json(*f.book);
    }
    if (s.flat_bundle) {
        out << "flat bundle: genus " << s.flat_bundle->genus << ", chern " << s.flat_bundle->chern << ": " << f.flat_bundle->detail
            << "\n";
    }

    std::vector<Verdict> verdicts;
    try {
        verdicts = verdict_engine(s, f);
    } catch (const ContradictionError& e) {
        out << "error: " << e.what() << "\n";
        r.json["error"] = e.what();
        r.exit_code = 2;
        r.text = out.str();
        return r;
    }
    out << "verdicts:\n";
    ordered_json vs = ordered_json::array();
    for (const Verdict& v : verdicts) {
        out << "  " << to_string(v.property) << (v.subject.empty() ? "" : "[" + v.subject + "]") << ": " << to_string(v.status);
        if (!v.rule.empty()) out << " by " << v.rule << " -- " << v.cite.label << ": \"" << v.cite.text << "\"";
        out << "\n    " << v.detail << "\n";
        vs.push_back(verdict_json(v));
    }
    const std::string summary = summary_line(verdicts);
    out << "summary: " << summary << "\n";
    r.json["verdicts"] = vs;
    r.json["summary"] = summary;
    r.exit_code = exit_code(verdicts);
    r.json["exit_code"] = r.exit_code;
    r.text = out.str();
    return r;
}

Report report_classify(const Lie3Classification& c) {
    Report r;
    r.text = classify_text(c);
    r.json["command"] = "classify-lie3";
    const ordered_json body = classify_json(c);
    for (const auto& [k, v] : body.items()) r.json[k] = v;
    r.exit_code = 0;
    return r;
}

LinearDirac parse_dirac(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("Dirac structure must look like kind:value, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string value = spec.substr(colon + 1);
    if (kind == "tangent" || kind == "cotangent") {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(value, &used);
            if (used != value.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("expected a dimension after '" + kind + ":'");
        }
        if (n < 0 || n > 12) throw InputError("dimension out of range");
        return kind == "tangent" ? LinearDirac::tangent(n) : LinearDirac::cotangent(n);
    }
    const Matrix m = parse_matrix(value);
    if (kind == "bivector" || kind == "form") {
        for (const Row& row : m) {
            if (row.size() != m.size()) throw InputError("matrix must be square");
        }
        return kind == "bivector" ? LinearDirac::graph_bivector(m) : LinearDirac::graph_form(m);
    }
    if (kind == "rows") {
        if (m.empty() || m[0].size() % 2 != 0) throw InputError("rows must have even length 2n");
        return LinearDirac::from_rows(static_cast<int>(m[0].size() / 2), m);
    }
    throw InputError("unknown Dirac structure kind '" + kind + "'");
}

Report report_dirac_spinor(const LinearDirac& l, bool cospinor) {
    Report r;
    const ExtVector v = cospinor ? cospinor_line(l) : spinor_line(l);
    const std::string text = ext_to_string(v, cospinor ? "v" : "e");
    r.text = std::string(cospinor ? "co-spinor line" : "spinor line") + " of L = span(" + matrix_to_string(l.basis) +
             "): " + text + "\n";
    r.json["command"] = cospinor ? "dirac cospinor" : "dirac spinor";
    r.json["basis"] = matrix_to_string(l.basis);
    r.json["line"] = text;
    return r;
}

Report report_dirac_pullback(const LinearDirac& lm, const Matrix& f) {
    if (f.empty()) throw InputError("map matrix is empty");
    const int dim_v = static_cast<int>(f[0].size());
    const PullbackResult p = backward_pullback(lm, f, dim_v);
    Report r;
    std::ostringstream out;
    out << "f^!(L) = span(" << matrix_to_string(p.result.basis) << ")\n";
    out << "lagrangian: " << (p.lagrangian ? "yes" : "no") << "\ntransverse: " << (p.transverse ? "yes" : "no") << "\n";
    r.json["command"] = "dirac pullback";
    r.json["basis"] = matrix_to_string(p.result.basis);
    r.json["lagrangian"] = p.lagrangian;
    r.json["transverse"] = p.transverse;
    if (p.transverse && p.lagrangian) {
        out << "spinor relation f^* K = K': " << (p.spinor_relation ? "yes" : "no") << "\n";
        r.json["spinor_relation"] = p.spinor_relation;
    }
    // graph(W) pulls back to graph(F^T W F)
    bool graph_form = true;
    const std::size_t n = static_cast<std::size_t>(lm.n);
    Matrix w = zero_matrix(n, n);
    for (std::size_t a = 0; a < n && graph_form; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (lm.basis[a][b] != (a == b ? 1 : 0)) graph_form = false;
            w[a][b] = lm.basis[a][n + b];
        }
    }
    if (graph_form) {
        const Matrix pulled = multiply(multiply(transpose(f), w), f);
        const bool agrees = same_rowspace(p.result.basis, LinearDirac::graph_form(pulled).basis, 2 * dim_v);
        out << "graph of f^*omega: " << matrix_to_string(pulled) << " (" << (agrees ? "agrees" : "differs") << ")\n";
        r.json["pulled_form"] = matrix_to_string(pulled);
        r.json["agrees_with_graph"] = agrees;
    }
    r.text = out.str();
    r.exit_code = p.lagrangian ? 0 : 1;
    return r;
}

Report report_dirac_pushforward(const LinearDirac& lp, const Matrix& f) {
    const int dim_w = static_cast<int>(f.size());
    const PushforwardResult p = forward_pushforward(lp, f, dim_w);
    Report r;
    std::ostringstream out;
    out << "f_!(L) = span(" << matrix_to_string(p.result.basis) << ")\n";
    out << "lagrangian: " << (p.lagrangian ? "yes" : "no") << "\nstrong: " << (p.strong ? "yes" : "no")
        << "\nsurjective: " << (p.surjective ? "yes" : "no") << "\n";
    r.json["command"] = "dirac pushforward";
    r.json["basis"] = matrix_to_string(p.result.basis);
    r.json["lagrangian"] = p.lagrangian;
    r.json["strong"] = p.strong;
    r.json["surjective"] = p.surjective;
    if (p.checked_transport) {
        out << "co-spinor transport f_* C = C': " << (p.cospinor_transport ? "yes" : "no") << "\n";
        out << "spinor contraction iota_v phi ~ f^* psi: " << (p.spinor_contraction ? "yes" : "no") << "\n";
        r.json["cospinor_transport"] = p.cospinor_transport;
        r.json["spinor_contraction"] = p.spinor_contraction;
    }
    r.text = out.str();
    r.exit_code = p.lagrangian ? 0 : 1;
    return r;
}

Report report_dirac_conditions(const LinearDirac& l, const Matrix& x) {
    const TransversalFlags t = transversal_conditions(l, x);
    Report r;
    auto yn = [](bool b) { return b ? "true" : "false"; };
    r.text = std::string("X = span(") + matrix_to_string(x) + ")\n(b) L meets TX + N*X trivially: " + yn(t.b) +
             "\n(c) top part of the restricted spinor nonzero: " + yn(t.c) +
             "\n(d) co-spinor projects onto the top power of V/X: " + yn(t.d) + "\nagree: " + yn(t.agree()) + "\n";
    r.json["command"] = "dirac conditions";
    r.json["b"] = t.b;
    r.json["c"] = t.c;
    r.json["d"] = t.d;
    r.json["agree"] = t.agree();
    r.exit_code = t.b ? 0 : 1;
    return r;
}

}  // namespace ptk
