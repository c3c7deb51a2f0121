// Acceptance checks, one line per criterion. Pass --update-golden to rewrite
// the golden reports instead of comparing against them.

#include "ptk/catalog.hpp"
#include "ptk/report.hpp"
#include "ptk/simd.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ptk;

namespace {

// pinned tolerances
constexpr double kCircleTol = 1e-9;
constexpr std::size_t kCircleSamples = 256;
constexpr double kRefineTol = 1e-10;
constexpr double kPairTol = 1e-10;
constexpr double kChainTol = 1e-9;
constexpr std::size_t kFiberNodes = 128;
constexpr double kFiniteStep = 1e-3;
constexpr double kSinSquaredTol = 1e-12;
constexpr double kLemmaSeconds = 10.0;
constexpr double kTraceSeconds = 5.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<CompiledScene> poisson_catalog() {
    std::vector<CompiledScene> out;
    for (const Scene& s : builtin_scenes()) {
        if (!s.symbolic) continue;
        CompiledScene c = compile(s);
        if (jacobi_check(c.pi.bivector).ok) out.push_back(std::move(c));
    }
    return out;
}

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

PolyScalar random_poly(int nvars, int max_degree, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    const auto monomials = monomials_up_to(nvars, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    PolyScalar p(nvars);
    for (int t = 0; t < terms; ++t) p.add_term(monomials[pick(rng)], q(num(rng), den(rng)));
    return p;
}

PolyScalar coordinate(int n, int i) { return PolyScalar::variable(n, i); }

// ---- 1 ----------------------------------------------------------------------

Outcome lemma_identity() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    Outcome o;
    int checks = 0;
    for (const CompiledScene& c : poisson_catalog()) {
        const Multivector& pi = c.pi.bivector;
        const int m = pi.dim();
        for (int trial = 0; trial < 20; ++trial) {
            DiffForm mu(m, m);
            mu.add(full_mask(m), random_poly(m, 3, 4, rng));
            for (int k = 0; k <= m / 2; ++k) {
                const Multivector pk = multivector_power(pi, k);
                const Multivector pk1 = multivector_power(pi, k + 1);
                const DiffForm residue = interior_product(pi, exterior_derivative(interior_product(pk, mu))) -
                                         exterior_derivative(interior_product(pk1, mu)) -
                                         interior_product(pk1, exterior_derivative(mu)) +
                                         interior_product(pk, exterior_derivative(interior_product(pi, mu)));
                ++checks;
                if (!residue.is_zero()) {
                    o.pass = false;
                    o.detail = c.source.name + " k=" + std::to_string(k) + " residue " + residue.to_string(c.source.chart.coords);
                    return o;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    o.pass = secs < kLemmaSeconds;
    o.detail = std::to_string(checks) + " exact zero residues in " + fmt(secs) + " s";
    return o;
}

// ---- 2 ----------------------------------------------------------------------

bool jacobiator_vanishes(const Multivector& pi) {
    const int n = pi.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const PolyScalar xi = coordinate(n, i), xj = coordinate(n, j), xk = coordinate(n, k);
                const PolyScalar jac = poisson_bracket(pi, xi, poisson_bracket(pi, xj, xk)) +
                                       poisson_bracket(pi, xj, poisson_bracket(pi, xk, xi)) +
                                       poisson_bracket(pi, xk, poisson_bracket(pi, xi, xj));
                if (!jac.is_zero()) return false;
            }
    return true;
}

Outcome jacobi_equivalence() {
    Outcome o;
    std::vector<CompiledScene> structures;
    for (CompiledScene& c : poisson_catalog())
        if (c.pi.dim() >= 3) structures.push_back(std::move(c));
    if (structures.size() > 6) structures.resize(6);
    if (structures.size() < 6) return {false, "only " + std::to_string(structures.size()) + " catalog structures of dimension >= 3"};
    for (const CompiledScene& c : structures) {
        if (!jacobi_check(c.pi.bivector).ok || !jacobiator_vanishes(c.pi.bivector)) return {false, c.source.name + " disagrees"};
    }
    std::mt19937_64 rng(202);
    int perturbed = 0, attempts = 0;
    while (perturbed < 20 && attempts < 200) {
        ++attempts;
        const CompiledScene& c = structures[static_cast<std::size_t>(attempts) % structures.size()];
        const int n = c.pi.dim();
        Multivector b = c.pi.bivector;
        std::uniform_int_distribution<int> slot(0, n - 1);
        int i = slot(rng), j = slot(rng);
        if (i == j) j = (i + 1) % n;
        b += Multivector::basis(n, {i, j}, random_poly(n, 2, 2, rng));
        const bool by_schouten = jacobi_check(b).ok;
        const bool by_bracket = jacobiator_vanishes(b);
        if (by_schouten != by_bracket) return {false, "perturbation of " + c.source.name + " disagrees"};
        if (!by_bracket) ++perturbed;
    }
    o.pass = perturbed == 20;
    o.detail = std::to_string(structures.size()) + " Poisson and " + std::to_string(perturbed) + " non-Poisson bivectors agree";
    return o;
}

// ---- 3 ----------------------------------------------------------------------

Outcome modular_chain_closedness() {
    int pairs = 0;
    for (const CompiledScene& c : poisson_catalog()) {
        for (const Density& d : c.densities) {
            if (!check_invariant_density(c.pi, d.top_form).ok) continue;
            ++pairs;
            for (const ChainEntry& e : modular_chain(c.pi, d.top_form)) {
                if (!e.closed) return {false, c.source.name + "/" + d.name + " chain entry k=" + std::to_string(e.k) + " not closed"};
            }
        }
    }
    const CompiledScene book = compile(*find_builtin("book-Id"));
    const auto chain = modular_chain(book.pi, book.densities.at(0).top_form);
    if (chain.size() < 2 || chain[1].closed) return {false, "book-Id k=1 entry is closed"};
    const DiffForm& w = chain[1].derivative;
    const PolyScalar c = w.coefficient(mask_of({0, 1}));
    const bool witness = w.terms().size() == 1 && c.is_constant() && abs(c.constant_term()) == 2;
    return {pairs > 0 && witness, std::to_string(pairs) + " certified pairs closed; book-Id d(iota_pi mu) = " +
                                      w.to_string(book.source.chart.coords)};
}

// ---- 4 ----------------------------------------------------------------------

Outcome trace_criterion() {
    const auto t0 = Clock::now();
    const std::vector<Rational> values{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
    int agree = 0, unimodular = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            const Matrix a{{values[i], q(static_cast<long>(i) - static_cast<long>(j), 3)},
                           {Rational(1) - values[j], values[j]}};
            const bool solved = !solve_invariant_density(book_structure(a), 0).empty();
            const bool trace_zero = sgn(a[0][0] + a[1][1]) == 0;
            agree += solved == trace_zero;
            unimodular += trace_zero;
        }
    }
    const double secs = seconds_since(t0);
    return {agree == 25 && unimodular > 0 && secs < kTraceSeconds,
            std::to_string(agree) + "/25 agree (" + std::to_string(unimodular) + " trace-free) in " + fmt(secs) + " s"};
}

// ---- 5 ----------------------------------------------------------------------

CompiledScene book_scene(const Matrix& a, const PatchSpec& circle) {
    Scene s;
    s.name = "book";
    s.chart = Chart::euclidean({"x", "y", "z"});
    s.terms = terms_of(book_structure(a).bivector, s.chart.coords);
    s.patches.push_back(circle);
    return compile(s);
}

PatchSpec unit_circle() {
    PatchSpec p;
    p.name = "unit";
    p.params.push_back({"t", true, 0.0, 0.0});
    p.map = {"cos(t)", "sin(t)", "0"};
    return p;
}

Outcome circle_criterion() {
    const std::vector<Matrix> positive{
        {{1, 0}, {0, 2}},   {{-1, 0}, {0, -3}}, {{1, -1}, {1, 1}},          {{1, 5}, {0, 1}},   {{-1, 7}, {-1, -2}},
        {{2, 1}, {0, 3}},   {{-2, 1}, {-1, -2}}, {{Rational(1, 2), 0}, {1, 1}}, {{3, -2}, {2, 1}}, {{-1, -4}, {1, -1}}};
    const std::vector<Matrix> negative{
        {{1, 0}, {0, -1}},  {{0, 1}, {1, 0}},  {{2, 3}, {1, -1}}, {{1, 2}, {3, 1}},
        {{-1, 1}, {1, 2}},  {{0, 2}, {3, 0}},  {{Rational(1, 2), 1}, {1, Rational(-1, 2)}},
        {{3, 0}, {0, Rational(-1, 3)}}, {{1, 4}, {1, 1}}, {{-2, 1}, {5, 1}}};
    SamplingOptions opts;
    opts.periodic_nodes = kCircleSamples;
    opts.tol = kCircleTol;
    int ok_pos = 0, ok_neg = 0, ellipses = 0;
    std::string bad;
    for (const Matrix& a : positive) {
        const Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (sgn(det) <= 0 || sgn(a[0][0] + a[1][1]) == 0) return {false, "bad fixture " + matrix_to_string(a)};
        const Lie3Classification c = classify_lie3(a, opts);
        if (!c.circle) {
            bad += " " + matrix_to_string(a);
            continue;
        }
        ellipses += !c.circle_is_unit;
        const CompiledScene s = book_scene(a, *c.circle);
        const TransversalityReport r = transversality_check(s.source.chart, s.pi, s.patches.at(0), opts);
        if (r.is_transversal && r.sign_constant) ++ok_pos;
        else bad += " " + matrix_to_string(a);
    }
    for (const Matrix& a : negative) {
        const Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (sgn(det) >= 0) return {false, "bad fixture " + matrix_to_string(a)};
        const CompiledScene s = book_scene(a, unit_circle());
        const TransversalityReport r = transversality_check(s.source.chart, s.pi, s.patches.at(0), opts);
        double lo = 0.0, hi = 0.0;
        for (const auto& sample : r.samples) {
            lo = std::min(lo, sample.value);
            hi = std::max(hi, sample.value);
        }
        if (lo < -kCircleTol && hi > kCircleTol && !r.sign_constant) ++ok_neg;
        else bad += " " + matrix_to_string(a);
    }
    std::string detail = std::to_string(ok_pos) + "/10 emitted circles transversal (" + std::to_string(ellipses) +
                         " ellipses), " + std::to_string(ok_neg) + "/10 unit circles change sign";
    if (!bad.empty()) detail += "; failing:" + bad;
    return {ok_pos == 10 && ok_neg == 10, detail};
}

// ---- 6 ----------------------------------------------------------------------

Outcome pairing_positivity() {
    SamplingOptions opts;
    int pairs = 0;
    double worst_delta = 0.0;
    for (const CompiledScene& c : poisson_catalog()) {
        for (const Density& d : c.densities) {
            if (!check_invariant_density(c.pi, d.top_form).ok) continue;
            for (const Patch& p : c.patches) {
                const TransversalityReport t = transversality_check(c.source.chart, c.pi, p, opts);
                if (!t.valid_patch || !t.is_transversal) continue;
                const HnptCertificate cert = hnpt_certificate(c.source.chart, c.pi, d.top_form, p, opts);
                ++pairs;
                const std::string who = c.source.name + "/" + d.name + "/" + p.name;
                if (cert.status != CertificateStatus::Certified) return {false, who + ": " + cert.reason};
                if (!(cert.min_integrand > 0.0) || !(cert.integral > 0.0)) return {false, who + " not positive"};
                if (cert.refinement_delta >= kRefineTol) return {false, who + " refinement delta " + fmt(cert.refinement_delta)};
                worst_delta = std::max(worst_delta, cert.refinement_delta);
            }
        }
    }
    const CompiledScene r2 = compile(*find_builtin("symplectic-r2"));
    const PointCoorientation pc = point_coorientation(r2.pi, {0.0, 0.0}, 1e-12);
    return {pairs > 0 && pc.ok && pc.sign == 1,
            std::to_string(pairs) + " certified pairs, max refinement delta " + fmt(worst_delta) +
                "; symplectic-r2 point sign " + (pc.sign > 0 ? "+" : "-")};
}

// ---- 7 ----------------------------------------------------------------------

Outcome rotation_pairing() {
    const CompiledScene c = compile(*find_builtin("book-Id"));
    const PairingResult r = pair(*c.form("rotation"), *c.patch("circle"), SamplingOptions{});
    const double err = std::abs(r.value - 2.0 * std::numbers::pi);
    return {err < kPairTol && !r.closed && !r.warning.empty(), "|value - 2 pi| = " + fmt(err) + "; warning: " + r.warning};
}

// ---- 8 ----------------------------------------------------------------------

Outcome sphere_reproduction() {
    Multivector b(2, 2);
    b.add(mask_of({0, 1}), coordinate(2, 0));
    const PoissonStructure pi = make_poisson(b);
    const PointCoorientation north = point_coorientation(pi, {0.5, 0.0}, 1e-12);
    const PointCoorientation south = point_coorientation(pi, {-0.5, 0.0}, 1e-12);
    const Report r = report_full(compile(*find_builtin("s2-log")), SamplingOptions{});
    const bool summary = r.text.find("summary: HNPT fails; weak HNPT holds (Theorem 4)\n") != std::string::npos;
    return {north.ok && south.ok && north.sign == -south.sign && summary,
            std::string("signs ") + (north.sign > 0 ? "+" : "-") + "/" + (south.sign > 0 ? "+" : "-") +
                (summary ? "; summary matches" : "; summary differs")};
}

// ---- 9 ----------------------------------------------------------------------

// Clifford annihilator of L inside the forms on V*: (v, xi) . phi = iota_v phi + xi ^ phi.
Matrix annihilator(const LinearDirac& l) {
    const int n = l.n;
    const Mask size = Mask{1} << n;
    SparseReducer red(static_cast<int>(size));
    for (const Row& row : l.basis) {
        std::vector<SparseReducer::SparseRow> out(size);
        for (Mask m = 0; m < size; ++m) {
            for (int a = 0; a < n; ++a) {
                const Mask bit = Mask{1} << a;
                const Rational& v = row[static_cast<std::size_t>(a)];
                const Rational& xi = row[static_cast<std::size_t>(n + a)];
                if ((m & bit) && sgn(v) != 0) out[m & ~bit][static_cast<int>(m)] += v * contraction_sign(a, m);
                if (!(m & bit) && sgn(xi) != 0) out[m | bit][static_cast<int>(m)] += xi * wedge_sign(bit, m);
            }
        }
        for (auto& r : out) {
            std::erase_if(r, [](const auto& kv) { return sgn(kv.second) == 0; });
            if (!r.empty()) red.add(r);
        }
    }
    return red.nullspace();
}

Outcome dirac_layer() {
    std::mt19937_64 rng(909);
    int agree = 0, one_dim = 0, iso = 0;
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + t % 6;
        const LinearDirac l = random_lagrangian(n, rng);
        std::uniform_int_distribution<int> kdist(0, n);
        const Matrix x = random_subspace(n, kdist(rng), rng);
        agree += transversal_conditions(l, x).agree();
        const ExtVector phi = spinor_line(l);
        const Matrix ann = annihilator(l);
        one_dim += ann.size() == 1 && !is_zero_vector(phi) && same_line(phi, ann[0]);
        ExtVector top(std::size_t{1} << n, Rational(0));
        top[full_mask(n)] = 1;
        const ExtVector image = spinor_cospinor_iso(phi, top, n);
        iso += !is_zero_vector(image) && same_line(image, cospinor_line(l));
    }
    int pulled = 0;
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const int dw = dim(rng), dv = dim(rng);
        Matrix w = zero_matrix(static_cast<std::size_t>(dw), static_cast<std::size_t>(dw));
        for (int a = 0; a < dw; ++a)
            for (int b = a + 1; b < dw; ++b) {
                w[a][b] = q(entry(rng), 2);
                w[b][a] = -w[a][b];
            }
        Matrix f = zero_matrix(static_cast<std::size_t>(dw), static_cast<std::size_t>(dv));
        for (auto& r : f)
            for (auto& e : r) e = entry(rng);
        const PullbackResult p = backward_pullback(LinearDirac::graph_form(w), f, dv);
        const Matrix expected = multiply(multiply(transpose(f), w), f);
        pulled += p.lagrangian && same_rowspace(p.result.basis, LinearDirac::graph_form(expected).basis, 2 * dv);
    }
    return {agree == 500 && one_dim == 500 && iso == 500 && pulled == 100,
            "conditions agree " + std::to_string(agree) + "/500, spinor line 1-dim " + std::to_string(one_dim) +
                "/500, co-spinor image " + std::to_string(iso) + "/500, graph pullback " + std::to_string(pulled) + "/100"};
}

// ---- 10 ---------------------------------------------------------------------

Outcome dirac_unimodular() {
    int pairs = 0, agree = 0;
    const auto compare = [&](const PoissonStructure& pi, const DiffForm& mu) {
        ++pairs;
        agree += dirac_unimodular_check(pi, mu).closed == check_invariant_density(pi, mu).ok;
    };
    for (const CompiledScene& c : poisson_catalog())
        for (const Density& d : c.densities) compare(c.pi, d.top_form);
    DiffForm vol(3, 3);
    vol.add(full_mask(3), PolyScalar::constant(3, 1));
    for (const char* name : {"so3", "sl2", "heisenberg", "abelian", "book-id"}) {
        const Lie3Classification c = classify_lie3(name);
        if (c.has_matrix) compare(book_structure(c.a), vol);
    }
    compare(lie_poisson(LieAlgebraData::so3()), vol);
    compare(lie_poisson(LieAlgebraData::sl2()), vol);
    return {agree == pairs && pairs > 0, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree"};
}

// ---- 11 ---------------------------------------------------------------------

std::string random_trig_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), power(0, 2), freq(0, 3), trig(0, 1), nterms(1, 3);
    std::string s;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        if (t > 0) s += " + ";
        s += "(" + std::to_string(num(rng)) + "/" + std::to_string(den(rng)) + ")";
        s += "*x^" + std::to_string(power(rng)) + "*y^" + std::to_string(power(rng));
        const int k = freq(rng);
        if (k > 0) s += std::string(trig(rng) ? "*sin(" : "*cos(") + std::to_string(k) + "*theta)";
    }
    return s;
}

// d of the base form given numerically, by the 5-point stencil.
std::vector<double> numeric_d(const FiberIntegral& f, const std::vector<double>& base, const std::vector<Mask>& out_masks) {
    const std::vector<Mask>& in_masks = f.masks();
    std::vector<double> out(out_masks.size(), 0.0);
    for (int a = 0; a < static_cast<int>(base.size()); ++a) {
        std::vector<std::vector<double>> vals;
        for (int step : {-2, -1, 1, 2}) {
            std::vector<double> p = base;
            p[static_cast<std::size_t>(a)] += step * kFiniteStep;
            vals.push_back(f(p));
        }
        for (std::size_t i = 0; i < in_masks.size(); ++i) {
            const Mask bit = Mask{1} << a;
            if (in_masks[i] & bit) continue;
            const double deriv = (vals[0][i] - 8.0 * vals[1][i] + 8.0 * vals[2][i] - vals[3][i]) / (12.0 * kFiniteStep);
            const Mask target = in_masks[i] | bit;
            const auto slot = std::find(out_masks.begin(), out_masks.end(), target) - out_masks.begin();
            out[static_cast<std::size_t>(slot)] += wedge_sign(bit, in_masks[i]) * deriv;
        }
    }
    return out;
}

Outcome fiber_chain_map() {
    const std::vector<std::string> names{"x", "y", "theta"};
    const Fiber fiber{{2}, {{true, 0.0, 2.0 * std::numbers::pi}}};
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        ExprForm w;
        w.dim = 3;
        w.degree = 1 + t % 2;
        for (Mask m : masks_of_degree(3, w.degree)) w.terms[m] = parse_expr(random_trig_coefficient(rng), names, true);
        const FiberIntegral fw(w, fiber, kFiberNodes);
        const FiberIntegral fdw(w.exterior_derivative(), fiber, kFiberNodes);
        for (int s = 0; s < 3; ++s) {
            const std::vector<double> base{coord(rng), coord(rng)};
            const std::vector<double> lhs = numeric_d(fw, base, fdw.masks());
            const std::vector<double> rhs = fdw(base);
            for (std::size_t i = 0; i < rhs.size(); ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
        }
    }
    ExprForm s2;
    s2.dim = 3;
    s2.degree = 1;
    s2.terms[mask_of({2})] = parse_expr("sin(theta)^2", names, true);
    const std::vector<double> base{0.3, -0.2};
    const double integral = FiberIntegral(s2, fiber, kFiberNodes)(base).at(0);
    const double err = std::abs(integral - std::numbers::pi);
    return {worst < kChainTol && err < kSinSquaredTol,
            "max |d f(w) - f(dw)| = " + fmt(worst) + "; |int sin^2 - pi| = " + fmt(err)};
}

// ---- 12 ---------------------------------------------------------------------

std::string golden_text(const Scene& s) {
    SamplingOptions opts;
    if (s.tolerances.tol) opts.tol = *s.tolerances.tol;
    if (s.tolerances.samples) {
        opts.periodic_nodes = *s.tolerances.samples;
        opts.interval_nodes = std::max<std::size_t>(8, *s.tolerances.samples / 4);
    }
    return render(report_full(compile(s), opts), false);
}

Outcome golden_reports(bool update) {
    int match = 0, total = 0, cited = 0, verdicts = 0;
    std::string bad;
    for (const Scene& s : builtin_scenes()) {
        ++total;
        const std::string path = std::string(PTK_GOLDEN_DIR) + "/" + s.name + ".txt";
        const std::string text = golden_text(s);
        if (update) {
            std::ofstream(path, std::ios::binary) << text;
        }
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        if (in && buf.str() == text) ++match;
        else bad += " " + s.name;
        const CompiledScene c = compile(s);
        for (const Verdict& v : verdict_engine(c.source, compute_facts(c, SamplingOptions{}))) {
            if (v.status == Status::Inconclusive) continue;
            ++verdicts;
            const std::string quoted = v.cite.label + ": \"" + citation(v.rule).text + "\"";
            cited += !citation(v.rule).text.empty() && text.find(quoted) != std::string::npos;
        }
    }
    std::string detail = std::to_string(match) + "/" + std::to_string(total) + " reports byte-identical, " +
                         std::to_string(cited) + "/" + std::to_string(verdicts) + " verdicts cited";
    if (!bad.empty()) detail += "; differing:" + bad;
    return {match == total && cited == verdicts, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const bool update = argc > 1 && std::string(argv[1]) == "--update-golden";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"operator identity on top forms", lemma_identity},
        {"Jacobi equivalence", jacobi_equivalence},
        {"modular chain closedness", modular_chain_closedness},
        {"trace criterion", trace_criterion},
        {"transverse circles", circle_criterion},
        {"certificate positivity", pairing_positivity},
        {"rotation form on the unit circle", rotation_pairing},
        {"log-symplectic sphere", sphere_reproduction},
        {"linear Dirac layer", dirac_layer},
        {"spinor unimodularity", dirac_unimodular},
        {"fiber integration", fiber_chain_map},
        {"golden reports", [update] { return golden_reports(update); }},
    };
    std::printf("simd: %s\n", std::string(simd::name(simd::active().isa)).c_str());
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
