#include "ptk/scene.hpp"

#include "ptk/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace ptk {

using nlohmann::json;
using nlohmann::ordered_json;

bool Scene::has(const std::string& fact) const { return annotation(fact) != nullptr; }

const Annotation* Scene::annotation(const std::string& fact) const {
    for (const Annotation& a : annotations) {
        if (a.fact == fact) return &a;
    }
    return nullptr;
}

const Patch* CompiledScene::patch(const std::string& name) const {
    for (const Patch& p : patches) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

const DiffForm* CompiledScene::form(const std::string& name) const {
    for (const auto& [n, f] : forms) {
        if (n == name) return &f;
    }
    return nullptr;
}

const Density* CompiledScene::density(const std::string& name) const {
    for (const Density& d : densities) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

ordered_json to_json(const Scene& s) {
    ordered_json j;
    j["format"] = kSceneFormatVersion;
    j["name"] = s.name;
    if (!s.description.empty()) j["description"] = s.description;
    ordered_json chart;
    chart["dim"] = s.chart.dim;
    chart["coords"] = s.chart.coords;
    if (std::find(s.chart.periodic.begin(), s.chart.periodic.end(), true) != s.chart.periodic.end()) {
        chart["periodic"] = s.chart.periodic;
    }
    j["chart"] = chart;
    if (!s.symbolic) j["symbolic"] = false;
    ordered_json terms = ordered_json::array();
    for (const BivectorTerm& t : s.terms) {
        ordered_json o;
        o["indices"] = {t.i, t.j};
        o["coeff"] = t.coeff;
        terms.push_back(o);
    }
    j["poisson"] = {{"terms", terms}};
    ordered_json densities = ordered_json::array();
    for (const DensitySpec& d : s.densities) {
        ordered_json o;
        o["name"] = d.name;
        o["coeff"] = d.coeff;
        if (!d.note.empty()) o["note"] = d.note;
        densities.push_back(o);
    }
    j["densities"] = densities;
    if (!s.forms.empty()) {
        ordered_json forms = ordered_json::array();
        for (const FormSpec& f : s.forms) {
            ordered_json o;
            o["name"] = f.name;
            o["degree"] = f.degree;
            ordered_json terms = ordered_json::array();
            for (const FormTerm& t : f.terms) terms.push_back({{"indices", t.indices}, {"coeff", t.coeff}});
            o["terms"] = terms;
            forms.push_back(o);
        }
        j["forms"] = forms;
    }
    ordered_json patches = ordered_json::array();
    for (const PatchSpec& p : s.patches) {
        ordered_json o;
        o["name"] = p.name;
        ordered_json params = ordered_json::array();
        for (const ParamSpec& q : p.params) {
            ordered_json po;
            po["name"] = q.name;
            if (q.periodic) {
                po["periodic"] = true;
            } else {
                po["min"] = q.min;
                po["max"] = q.max;
            }
            params.push_back(po);
        }
        o["params"] = params;
        o["map"] = p.map;
        patches.push_back(o);
    }
    j["patches"] = patches;
    ordered_json annotations = ordered_json::array();
    for (const Annotation& a : s.annotations) {
        ordered_json o;
        o["fact"] = a.fact;
        if (!a.source.empty()) o["source"] = a.source;
        annotations.push_back(o);
    }
    j["annotations"] = annotations;
    if (!s.witnesses.empty()) j["witnesses"] = s.witnesses;
    if (s.deck_map) j["deck_map"] = {{"map", s.deck_map->map}, {"shift_pi", s.deck_map->shift_pi}};
    if (s.flat_bundle) j["flat_bundle"] = {{"genus", s.flat_bundle->genus}, {"chern", s.flat_bundle->chern}};
    if (s.book_matrix) j["book_matrix"] = *s.book_matrix;
    if (s.tolerances.tol || s.tolerances.samples) {
        ordered_json t = ordered_json::object();
        if (s.tolerances.tol) t["tol"] = *s.tolerances.tol;
        if (s.tolerances.samples) t["samples"] = *s.tolerances.samples;
        j["tolerances"] = t;
    }
    return j;
}

namespace {

const std::set<std::string> kSceneKeys = {"format",  "name",        "description", "chart",       "symbolic",
                                          "poisson", "densities", "forms",   "patches",     "annotations", "witnesses",
                                          "deck_map", "flat_bundle", "book_matrix", "tolerances"};

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_names(const std::vector<std::string>& names, const std::string& what) {
    std::set<std::string> seen;
    for (const std::string& n : names) {
        if (!is_identifier(n)) throw InputError(what + " name '" + n + "' is not an identifier");
        if (n == "sin" || n == "cos") throw InputError(what + " name '" + n + "' is reserved");
        if (!seen.insert(n).second) throw InputError("duplicate " + what + " name '" + n + "'");
    }
}

std::string context(const std::string& where, const std::exception& e) { return where + ": " + e.what(); }

PolyScalar parse_coefficient(const std::string& text, const Chart& chart, const std::string& where,
                             bool allow_periodic = false) {
    PolyScalar p;
    try {
        p = parse_expr(text, chart.coords, false).to_poly(chart.dim);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
    } catch (const InputError& e) {
        throw InputError(context(where, e));
    }
    for (int i = 0; i < chart.dim; ++i) {
        if (!allow_periodic && chart.periodic[static_cast<std::size_t>(i)] && !p.derivative(i).is_zero()) {
            throw InputError(where + ": coefficient depends on periodic coordinate " + chart.coords[static_cast<std::size_t>(i)]);
        }
    }
    return p;
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw InputError(where + ": missing '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(where + ": '" + key + "' has the wrong type");
    }
}

}  // namespace

Scene scene_from_json(const json& j) {
    if (!j.is_object()) throw InputError("scene must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!kSceneKeys.count(key)) throw InputError("unknown scene key '" + key + "'");
    }
    Scene s;
    if (j.contains("format") && get<int>(j, "format", "scene") != kSceneFormatVersion) {
        throw InputError("unsupported scene format version");
    }
    s.name = get<std::string>(j, "name", "scene");
    if (j.contains("description")) s.description = get<std::string>(j, "description", "scene");
    if (j.contains("symbolic")) s.symbolic = get<bool>(j, "symbolic", "scene");

    const json& chart = j.contains("chart") ? j.at("chart") : throw InputError("scene: missing 'chart'");
    s.chart.dim = get<int>(chart, "dim", "chart");
    if (s.chart.dim < 1 || s.chart.dim > kMaxDim) throw InputError("chart: dimension out of range");
    s.chart.coords = get<std::vector<std::string>>(chart, "coords", "chart");
    if (static_cast<int>(s.chart.coords.size()) != s.chart.dim) throw InputError("chart: coords do not match dim");
    check_names(s.chart.coords, "coordinate");
    s.chart.periodic.assign(s.chart.coords.size(), false);
    if (chart.contains("periodic")) {
        s.chart.periodic = get<std::vector<bool>>(chart, "periodic", "chart");
        if (s.chart.periodic.size() != s.chart.coords.size()) throw InputError("chart: periodic does not match dim");
    }

    if (j.contains("poisson")) {
        const json& terms = j.at("poisson").contains("terms") ? j.at("poisson").at("terms") : json::array();
        if (!terms.is_array()) throw InputError("poisson: 'terms' must be an array");
        std::set<std::pair<int, int>> seen;
        for (std::size_t n = 0; n < terms.size(); ++n) {
            const std::string where = "poisson term " + std::to_string(n);
            const auto idx = get<std::vector<int>>(terms[n], "indices", where);
            if (idx.size() != 2) throw InputError(where + ": indices must be a pair");
            if (idx[0] < 0 || idx[1] >= s.chart.dim) throw InputError(where + ": index out of range");
            if (idx[0] >= idx[1]) throw InputError(where + ": indices must be strictly increasing");
            if (!seen.insert({idx[0], idx[1]}).second) throw InputError(where + ": repeated index pair");
            BivectorTerm t{idx[0], idx[1], get<std::string>(terms[n], "coeff", where)};
            parse_coefficient(t.coeff, s.chart, where);
            s.terms.push_back(t);
        }
    }

    if (j.contains("densities")) {
        for (std::size_t n = 0; n < j.at("densities").size(); ++n) {
            const json& d = j.at("densities")[n];
            const std::string where = "density " + std::to_string(n);
            DensitySpec spec{get<std::string>(d, "name", where), get<std::string>(d, "coeff", where), ""};
            if (d.contains("note")) spec.note = get<std::string>(d, "note", where);
            parse_coefficient(spec.coeff, s.chart, where);
            s.densities.push_back(spec);
        }
    }

    if (j.contains("forms")) {
        for (const json& f : j.at("forms")) {
            FormSpec spec;
            spec.name = get<std::string>(f, "name", "form");
            const std::string where = "form " + spec.name;
            spec.degree = get<int>(f, "degree", where);
            if (spec.degree < 0 || spec.degree > s.chart.dim) throw InputError(where + ": degree out of range");
            const json terms = f.contains("terms") ? f.at("terms") : json::array();
            for (const json& t : terms) {
                FormTerm term{get<std::vector<int>>(t, "indices", where), get<std::string>(t, "coeff", where)};
                if (static_cast<int>(term.indices.size()) != spec.degree) throw InputError(where + ": term of wrong degree");
                for (std::size_t k = 0; k < term.indices.size(); ++k) {
                    if (term.indices[k] < 0 || term.indices[k] >= s.chart.dim) throw InputError(where + ": index out of range");
                    if (k > 0 && term.indices[k - 1] >= term.indices[k]) {
                        throw InputError(where + ": indices must be strictly increasing");
                    }
                }
                parse_coefficient(term.coeff, s.chart, where);
                spec.terms.push_back(term);
            }
            s.forms.push_back(spec);
        }
    }

    if (j.contains("patches")) {
        std::set<std::string> names;
        for (const json& p : j.at("patches")) {
            PatchSpec spec;
            spec.name = get<std::string>(p, "name", "patch");
            const std::string where = "patch " + spec.name;
            if (!names.insert(spec.name).second) throw InputError("duplicate patch name '" + spec.name + "'");
            const json params = p.contains("params") ? p.at("params") : json::array();
            std::vector<std::string> pnames;
            for (const json& q : params) {
                ParamSpec ps;
                ps.name = get<std::string>(q, "name", where);
                ps.periodic = q.contains("periodic") && get<bool>(q, "periodic", where);
                if (ps.periodic) {
                    ps.min = 0.0;
                    ps.max = 2.0 * std::numbers::pi;
                } else {
                    ps.min = get<double>(q, "min", where);
                    ps.max = get<double>(q, "max", where);
                    if (!std::isfinite(ps.min) || !std::isfinite(ps.max) || !(ps.min < ps.max)) {
                        throw InputError(where + ": parameter " + ps.name + " needs a finite range with min < max");
                    }
                }
                pnames.push_back(ps.name);
                spec.params.push_back(ps);
            }
            check_names(pnames, "parameter");
            spec.map = get<std::vector<std::string>>(p, "map", where);
            if (static_cast<int>(spec.map.size()) != s.chart.dim) throw InputError(where + ": map needs one entry per coordinate");
            for (const std::string& e : spec.map) {
                try {
                    parse_expr(e, pnames, true);
                } catch (const ParseError& err) {
                    throw ParseError(where + ": " + err.what(), err.position());
                }
            }
            s.patches.push_back(spec);
        }
    }

    if (j.contains("annotations")) {
        for (const json& a : j.at("annotations")) {
            Annotation ann;
            if (a.is_string()) {
                ann.fact = a.get<std::string>();
            } else {
                ann.fact = get<std::string>(a, "fact", "annotation");
                if (a.contains("source")) ann.source = get<std::string>(a, "source", "annotation");
            }
            if (s.has(ann.fact)) throw InputError("duplicate annotation '" + ann.fact + "'");
            s.annotations.push_back(ann);
        }
    }

    if (j.contains("witnesses")) {
        s.witnesses = get<std::vector<std::vector<double>>>(j, "witnesses", "scene");
        for (const auto& w : s.witnesses) {
            if (static_cast<int>(w.size()) != s.chart.dim) throw InputError("witness point has the wrong dimension");
        }
    }

    if (j.contains("deck_map")) {
        DeckMapSpec d;
        d.map = get<std::vector<std::string>>(j.at("deck_map"), "map", "deck_map");
        d.shift_pi = j.at("deck_map").contains("shift_pi") ? get<std::vector<std::string>>(j.at("deck_map"), "shift_pi", "deck_map")
                                                           : std::vector<std::string>(d.map.size(), "0");
        if (static_cast<int>(d.map.size()) != s.chart.dim || d.shift_pi.size() != d.map.size()) {
            throw InputError("deck_map: needs one entry per coordinate");
        }
        for (std::size_t i = 0; i < d.map.size(); ++i) {
            parse_coefficient(d.map[i], s.chart, "deck_map", true);
            if (!is_zero(parse_rational(d.shift_pi[i])) && !s.chart.periodic[i]) {
                throw InputError("deck_map: shift on non-periodic coordinate " + s.chart.coords[i]);
            }
        }
        s.deck_map = d;
    }

    if (j.contains("flat_bundle")) {
        s.flat_bundle = FlatBundleSpec{get<long>(j.at("flat_bundle"), "genus", "flat_bundle"),
                                       get<long>(j.at("flat_bundle"), "chern", "flat_bundle")};
    }
    if (j.contains("book_matrix")) s.book_matrix = get<std::string>(j, "book_matrix", "scene");
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (t.contains("tol")) s.tolerances.tol = get<double>(t, "tol", "tolerances");
        if (t.contains("samples")) s.tolerances.samples = get<std::size_t>(t, "samples", "tolerances");
    }
    return s;
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scene file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": invalid JSON", e.byte);
    }
    return scene_from_json(j);
}

CompiledScene compile(const Scene& scene) {
    CompiledScene c;
    c.source = scene;
    const Chart& chart = scene.chart;
    Multivector b(chart.dim, 2);
    for (const BivectorTerm& t : scene.terms) {
        b += Multivector::basis(chart.dim, {t.i, t.j}, parse_coefficient(t.coeff, chart, "poisson term"));
    }
    c.pi = PoissonStructure{b, false};
    for (const DensitySpec& d : scene.densities) {
        DiffForm mu(chart.dim, chart.dim);
        mu.add(full_mask(chart.dim), parse_coefficient(d.coeff, chart, "density " + d.name));
        c.densities.push_back(Density{d.name, mu, d.note});
    }
    for (const FormSpec& f : scene.forms) {
        DiffForm form(chart.dim, f.degree);
        for (const FormTerm& t : f.terms) {
            form += DiffForm::basis(chart.dim, t.indices, parse_coefficient(t.coeff, chart, "form " + f.name));
        }
        c.forms.emplace_back(f.name, form);
    }
    for (const PatchSpec& p : scene.patches) {
        Patch patch;
        patch.name = p.name;
        for (const ParamSpec& q : p.params) {
            patch.param_names.push_back(q.name);
            patch.ranges.push_back(q.periodic ? ParamRange{true, 0.0, 2.0 * std::numbers::pi} : ParamRange{false, q.min, q.max});
        }
        for (const std::string& e : p.map) patch.map.push_back(parse_expr(e, patch.param_names, true));
        c.patches.push_back(std::move(patch));
    }
    return c;
}

std::vector<BivectorTerm> terms_of(const Multivector& pi, const std::vector<std::string>& coords) {
    std::vector<BivectorTerm> out;
    std::vector<Mask> order;
    for (const auto& [m, c] : pi.terms()) order.push_back(m);
    std::sort(order.begin(), order.end(), tuple_less);
    for (Mask m : order) {
        const auto idx = indices_of(m);
        out.push_back(BivectorTerm{idx[0], idx[1], from_poly(pi.coefficient(m), coords).to_string()});
    }
    return out;
}

}  // namespace ptk
