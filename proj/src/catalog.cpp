#include "ptk/catalog.hpp"

#include "ptk/error.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace ptk {

std::string to_string(Property p) {
    switch (p) {
        case Property::Hnpt: return "HNPT";
        case Property::WeakHnpt: return "weak-HNPT";
        case Property::TransversalNontrivial: return "transversal-nontrivial";
        case Property::ProperSymplecticRealization: return "proper-symplectic-realization";
    }
    return "";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Inconclusive: return "inconclusive";
    }
    return "";
}

const Citation& citation(const std::string& rule) {
    static const Citation theorem1{"Theorem 1", "A unimodular Poisson manifold has the HNPT property."};
    static const Citation definition3{
        "Definition 3",
        "A Poisson manifold (M, \xcf\x80) is said to have the **weak HNPT property** if, for any of its compact, nonempty "
        "Poisson transversals X , the homology class $[X] \\in H_{\\bullet}(\\text{St}(X), \\mathfrak{o}_{\\text{St}(X)})$ is "
        "nontrivial."};
    static const std::map<std::string, Citation> table = {
        {"theorem-1", theorem1},
        {"theorem-1-pairing", theorem1},
        {"theorem-2",
         {"Theorem 2",
          "Let $f : (P, \\pi_P) \\rightarrow (M, \\pi_M)$ be a proper Poisson map. If (P, \xcf\x80_P) has the HNPT property, "
          "then the homology class of every compact Poisson transversal $X \\subset M$ which meets $f(P)$ is nontrivial."}},
        {"theorem-3", {"Theorem 3", "A Poisson manifold with closed leaves has the HNPT property."}},
        {"theorem-4", {"Theorem 4", "Log-symplectic manifolds have the weak HNPT property."}},
        {"theorem-5",
         {"Theorem 5",
          "A compact, connected, nonempty Poisson transversal of an orientable log-symplectic manifold has nontrivial "
          "homology class."}},
        {"corollary-1",
         {"Corollary 1",
          "A Poisson manifold which admits a surjective proper symplectic realization\xc2\xb9 has the HNPT property."}},
        {"corollary-2",
         {"Corollary 2",
          "A regular, corank-one Poisson structure on a compact, oriented manifold M with $H_1(M, \\mathbb{R}) = 0$ does "
          "not admit proper symplectic realizations."}},
        {"corollary-3",
         {"Corollary 3",
          "Let X be a compact Poisson transversal in a Poisson manifold (M, \xcf\x80) . If X meets a closed, embedded, "
          "unimodular Poisson submanifold, then $[X] \\neq 0$ in $H_\\bullet(M, \\mathfrak{o}_M)$."}},
        {"example-1",
         {"Example 1",
          "In this case, the homology class $[X]$ of the Poisson transversal is trivial in $H_1(\\mathfrak{g}^*, "
          "\\mathbb{R}) = 0$; in particular, the HNPT property does not hold."}},
        {"example-2",
         {"Example 2",
          "The two central circles $X_i \\subset C_i$, with $i = 0, 1$, are Poisson transversals in (\\mathbb{S}^3, "
          "\xcf\x80) , and both are homologous to zero, since $H_1(\\mathbb{S}^3, \\mathbb{R}) = 0$."}},
        {"example-3",
         {"Example 3",
          "We conclude that the Poisson manifold (M, \xcf\x80) built out of \\mathcal{F} and $\\varrho^*(\\omega)$ does not "
          "have the weak HNPT property."}},
        {"example-7",
         {"Example 7",
          "Since the induced coorientations at N and S differ, we have that $[X] = [N] - [S] = 0$."}},
        {"example-8",
         {"Example 8",
          "In this case, for any point P in the symplectic locus of $\\pi_{\\mathbb{P}^2}$, we have that $X = \\{P\\}$ is a "
          "Poisson transversal, but $[X] = 0$, because $H_0(\\mathbb{P}^2, \\mathfrak{o}_{\\mathbb{P}^2}) = 0$."}},
        {"definition-3", definition3},
        {"hnpt-implies-weak", definition3},
        {"weak-fails-implies-hnpt-fails", definition3},
    };
    return table.at(rule);
}

// ---- classifier -------------------------------------------------------------

namespace {

bool is_square(const Rational& q) {
    return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string surd(const Rational& center, const std::string& sign, const std::string& root) {
    if (sgn(center) == 0) return sign == "-" ? "-" + root : root;
    return to_string(center) + " " + sign + " " + root;
}

Chart book_chart() { return Chart::euclidean({"x", "y", "z"}); }

Patch patch_from_spec(const PatchSpec& spec) {
    Patch p;
    p.name = spec.name;
    for (const ParamSpec& q : spec.params) {
        p.param_names.push_back(q.name);
        p.ranges.push_back(q.periodic ? ParamRange{true, 0.0, 2.0 * std::numbers::pi} : ParamRange{false, q.min, q.max});
    }
    for (const std::string& e : spec.map) p.map.push_back(parse_expr(e, p.param_names, true));
    return p;
}

PatchSpec circle_spec(const std::string& name, const Rational& m11, const Rational& m12, const Rational& m21,
                      const Rational& m22) {
    const Expression t = Expression::variable(0, "t");
    const Expression x = Expression::number(m11) * cos(t) + Expression::number(m12) * sin(t);
    const Expression y = Expression::number(m21) * cos(t) + Expression::number(m22) * sin(t);
    PatchSpec spec;
    spec.name = name;
    spec.params.push_back(ParamSpec{"t", true, 0.0, 2.0 * std::numbers::pi});
    spec.map = {x.to_string(), y.to_string(), "0"};
    return spec;
}

// Ellipse on a level set of a quadratic Lyapunov function of the contracting one of X, -X.
PatchSpec lyapunov_circle(const Matrix& a) {
    const Rational tr = a[0][0] + a[1][1];
    Matrix b = a;
    if (sgn(tr) > 0) {
        for (auto& row : b) {
            for (auto& v : row) v = -v;
        }
    }
    // unknowns (p, q, r) of P = [[p, q], [q, r]]; equations for entries (0,0), (0,1), (1,1) of B^T P + P B = -I
    const std::array<std::array<std::array<Rational, 2>, 2>, 3> unit = {{
        {{{1, 0}, {0, 0}}},
        {{{0, 1}, {1, 0}}},
        {{{0, 0}, {0, 1}}},
    }};
    const std::array<std::pair<int, int>, 3> entries = {{{0, 0}, {0, 1}, {1, 1}}};
    Matrix system(3, Row(4));
    for (int e = 0; e < 3; ++e) {
        const auto [i, j] = entries[static_cast<std::size_t>(e)];
        for (int u = 0; u < 3; ++u) {
            const auto& p = unit[static_cast<std::size_t>(u)];
            Rational s = 0;
            for (int k = 0; k < 2; ++k) s += b[k][i] * p[k][j] + p[i][k] * b[k][j];
            system[e][u] = s;
        }
        system[e][3] = i == j ? Rational(-1) : Rational(0);
    }
    const Echelon ech = row_reduce(system, 4);
    Rational p = ech.rref[0][3], q = ech.rref[1][3], r = ech.rref[2][3];
    const Rational det = p * r - q * q;
    // P^{-1} = [[r, -q], [-q, p]] / det, factored as L L^T
    const double i00 = to_double(r / det), i10 = to_double(-q / det), i11 = to_double(p / det);
    const double l11 = std::sqrt(i00);
    const double l21 = i10 / l11;
    const double l22 = std::sqrt(i11 - l21 * l21);
    constexpr long den = 1024;
    return circle_spec("circle", approximate(l11, den), Rational(0), approximate(l21, den), approximate(l22, den));
}

void cross_check(Lie3Classification& c, const SamplingOptions& opts) {
    const Patch patch = patch_from_spec(*c.circle);
    const TransversalityReport t = transversality_check(book_chart(), book_structure(c.a), patch, opts);
    c.circle_checked = true;
    c.circle_transversal = t.valid_patch && t.is_transversal && t.sign_constant;
    c.circle_min_abs = t.min_abs;
}

}  // namespace

PoissonStructure book_structure(const Matrix& a) {
    if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2) throw InputError("expected a 2x2 matrix");
    return lie_poisson(LieAlgebraData::book(a[0][0], a[0][1], a[1][0], a[1][1]));
}

Lie3Classification classify_lie3(const Matrix& a, const SamplingOptions& opts) {
    if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2) throw InputError("expected a 2x2 matrix");
    Lie3Classification c;
    c.has_matrix = true;
    c.a = a;
    c.trace = a[0][0] + a[1][1];
    c.det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    c.discriminant = c.trace * c.trace - 4 * c.det;
    const Rational half = c.trace / 2;
    const Rational quarter = c.discriminant / 4;
    if (is_square(c.discriminant)) {
        c.eigen_rational = true;
        const Rational s = rational_sqrt(quarter);
        c.eigenvalues = {to_string(half + s), to_string(half - s)};
        c.eigen_real = {to_double(half + s), to_double(half - s)};
        c.eigen_imag = {0.0, 0.0};
    } else if (sgn(c.discriminant) > 0) {
        const std::string root = "sqrt(" + to_string(quarter) + ")";
        c.eigenvalues = {surd(half, "+", root), surd(half, "-", root)};
        const double s = std::sqrt(to_double(quarter));
        c.eigen_real = {to_double(half) + s, to_double(half) - s};
        c.eigen_imag = {0.0, 0.0};
    } else if (is_square(-quarter)) {
        const Rational im = rational_sqrt(-quarter);
        const std::string root = im == 1 ? "i" : to_string(im) + "*i";
        c.eigenvalues = {surd(half, "+", root), surd(half, "-", root)};
        c.eigen_real = {to_double(half), to_double(half)};
        c.eigen_imag = {to_double(im), -to_double(im)};
    } else {
        const std::string root = "i*sqrt(" + to_string(-quarter) + ")";
        c.eigenvalues = {surd(half, "+", root), surd(half, "-", root)};
        const double s = std::sqrt(to_double(-quarter));
        c.eigen_real = {to_double(half), to_double(half)};
        c.eigen_imag = {s, -s};
    }
    c.circle_exists = sgn(c.det) > 0 && sgn(c.trace) != 0;
    c.unimodular = sgn(c.trace) == 0;
    c.criterion = "real parts nonzero and of one sign <=> det(A) > 0 and tr(A) != 0; unimodular <=> tr(A) = 0";
    c.density_solver_agrees = solve_invariant_density(book_structure(a), 0).empty() != c.unimodular;
    if (c.circle_exists) {
        const Rational off = (a[0][1] + a[1][0]) / 2;
        c.circle_is_unit = sgn(a[0][0] * a[1][1] - off * off) > 0;
        c.circle = c.circle_is_unit ? circle_spec("circle", 1, 0, 0, 1) : lyapunov_circle(a);
        cross_check(c, opts);
    }
    return c;
}

Lie3Classification classify_lie3(const std::string& name, const SamplingOptions& opts) {
    auto matrix = [](int a, int b, int c, int d) { return Matrix{{Rational(a), Rational(b)}, {Rational(c), Rational(d)}}; };
    Lie3Classification c;
    if (name == "so3" || name == "sl2") {
        c.name = name;
        c.semisimple = true;
        c.unimodular = true;
        c.circle_exists = false;
        c.criterion = "semisimple: no transverse circles; unimodular";
        const LieAlgebraData g = name == "so3" ? LieAlgebraData::so3() : LieAlgebraData::sl2();
        c.density_solver_agrees = !solve_invariant_density(lie_poisson(g), 0).empty();
        return c;
    }
    if (name == "heisenberg") {
        c = classify_lie3(matrix(0, 1, 0, 0), opts);
    } else if (name == "abelian") {
        c = classify_lie3(matrix(0, 0, 0, 0), opts);
    } else if (name == "book-id") {
        c = classify_lie3(matrix(1, 0, 0, 1), opts);
    } else {
        throw InputError("unknown Lie algebra '" + name + "' (known: so3, sl2, heisenberg, abelian, book-id)");
    }
    c.name = name;
    return c;
}

// ---- flat bundles and deck maps ----------------------------------------------

Verdict flat_bundle_check(long genus, long chern) {
    Verdict v;
    v.property = Property::WeakHnpt;
    if (genus < 2) {
        v.detail = "genus " + std::to_string(genus) + " is below 2";
        return v;
    }
    const long bound = 2 * (genus - 1);
    const long n = std::labs(chern);
    if (n == 0 || n > bound) {
        v.detail = "criterion 0 < |n| <= " + std::to_string(bound) + " violated by n = " + std::to_string(chern);
        return v;
    }
    v.status = Status::Fails;
    v.rule = "example-3";
    v.cite = citation(v.rule);
    v.detail = "0 < |" + std::to_string(chern) + "| <= " + std::to_string(bound) +
               ": transverse foliation exists (Wood's inequality); rho^*(omega^top) exact; weak HNPT fails";
    return v;
}

namespace {

PolyScalar poly_det(std::vector<std::vector<PolyScalar>> m, int nvars) {
    const std::size_t n = m.size();
    if (n == 0) return PolyScalar::constant(nvars, 1);
    if (n == 1) return m[0][0];
    PolyScalar out(nvars);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<PolyScalar>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<PolyScalar> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != col) row.push_back(m[r][k]);
            }
            minor.push_back(std::move(row));
        }
        const PolyScalar term = m[0][col] * poly_det(std::move(minor), nvars);
        if (col % 2 == 0) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

}  // namespace

DeckCheck deck_map_check(const CompiledScene& scene) {
    if (!scene.source.deck_map) throw PreconditionError("scene has no deck map");
    const DeckMapSpec& spec = *scene.source.deck_map;
    const Chart& chart = scene.source.chart;
    const int m = chart.dim;
    std::vector<Expression> exprs;
    std::vector<PolyScalar> phi;
    for (const std::string& s : spec.map) {
        exprs.push_back(parse_expr(s, chart.coords, false));
        phi.push_back(exprs.back().to_poly(m));
    }
    std::vector<Rational> shift;
    for (const std::string& s : spec.shift_pi) shift.push_back(parse_rational(s));
    std::vector<std::vector<PolyScalar>> jac(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int a = 0; a < m; ++a) jac[static_cast<std::size_t>(i)].push_back(phi[static_cast<std::size_t>(i)].derivative(a));
    }
    DeckCheck d;
    const PolyScalar det = poly_det(jac, m);
    d.orientation_reversing = det.is_constant() && sgn(det.constant_term()) < 0;
    d.jacobian_det = det.is_constant() ? det.constant_term() : Rational(0);

    const Multivector& pi = scene.pi.bivector;
    d.preserves = true;
    for (int i = 0; i < m && d.preserves; ++i) {
        for (int j = i + 1; j < m && d.preserves; ++j) {
            PolyScalar pushed(m);
            for (const auto& [mask, coeff] : pi.terms()) {
                const auto idx = indices_of(mask);
                const auto& ji = jac[static_cast<std::size_t>(i)];
                const auto& jj = jac[static_cast<std::size_t>(j)];
                pushed += coeff * (ji[static_cast<std::size_t>(idx[0])] * jj[static_cast<std::size_t>(idx[1])] -
                                   ji[static_cast<std::size_t>(idx[1])] * jj[static_cast<std::size_t>(idx[0])]);
            }
            const PolyScalar target = from_poly(pi.coefficient(mask_of({i, j})), chart.coords).substitute(exprs).to_poly(m);
            if (!(pushed == target)) {
                d.preserves = false;
                d.detail = "phi_* pi differs from pi o phi in component (" + chart.coords[static_cast<std::size_t>(i)] + ", " +
                           chart.coords[static_cast<std::size_t>(j)] + ")";
            }
        }
    }

    d.involution = true;
    for (int k = 0; k < m && d.involution; ++k) {
        const PolyScalar twice = from_poly(phi[static_cast<std::size_t>(k)], chart.coords).substitute(exprs).to_poly(m);
        if (!(twice == PolyScalar::variable(m, k))) d.involution = false;
        Rational total = shift[static_cast<std::size_t>(k)];
        for (int a = 0; a < m; ++a) {
            if (sgn(shift[static_cast<std::size_t>(a)]) == 0) continue;
            const PolyScalar& entry = jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
            if (!entry.is_constant()) {
                d.involution = false;
                break;
            }
            total += entry.constant_term() * shift[static_cast<std::size_t>(a)];
        }
        if (chart.periodic[static_cast<std::size_t>(k)]) {
            const Rational half = total / 2;
            if (half.get_den() != 1) d.involution = false;
        } else if (sgn(total) != 0) {
            d.involution = false;
        }
    }
    if (d.detail.empty()) {
        d.detail = std::string(d.preserves ? "pi is deck-invariant" : "pi is not deck-invariant") + "; det(Jacobian) = " +
                   (det.is_constant() ? to_string(d.jacobian_det) : "non-constant") +
                   (d.involution ? "; involution" : "; not an involution");
    }
    return d;
}

// ---- scenes -------------------------------------------------------------------

namespace {

Scene base_scene(std::string name, std::string description, std::vector<std::string> coords) {
    Scene s;
    s.name = std::move(name);
    s.description = std::move(description);
    s.chart = Chart::euclidean(std::move(coords));
    return s;
}

Scene book_scene(const std::string& name, const std::string& description, const std::string& matrix) {
    Scene s = base_scene(name, description, {"x", "y", "z"});
    const Matrix a = parse_matrix(matrix);
    s.terms = terms_of(book_structure(a).bivector, s.chart.coords);
    s.book_matrix = matrix;
    s.densities.push_back(DensitySpec{"volume", "1", "coordinate volume dx dy dz"});
    const Lie3Classification c = classify_lie3(a);
    PatchSpec circle = c.circle ? *c.circle : circle_spec("circle", 1, 0, 0, 1);
    s.patches.push_back(circle);
    return s;
}

Scene lie_scene(const std::string& name, const std::string& description, const LieAlgebraData& g) {
    Scene s = base_scene(name, description, {"x", "y", "z"});
    s.terms = terms_of(lie_poisson(g).bivector, s.chart.coords);
    s.densities.push_back(DensitySpec{"volume", "1", "coordinate volume dx dy dz"});
    return s;
}

PatchSpec point(const std::string& name, std::vector<std::string> coords) {
    return PatchSpec{name, {}, std::move(coords)};
}

Scene cylinder_scene(const std::string& name, const std::string& description) {
    Scene s = base_scene(name, description, {"z", "theta"});
    s.chart.periodic = {false, true};
    return s;
}

}  // namespace

std::vector<Scene> builtin_scenes() {
    std::vector<Scene> out;

    Scene book_id = book_scene("book-Id", "dual of the book-form Lie algebra with A = Id; circle around the binding", "1,0;0,1");
    book_id.forms.push_back(FormSpec{"rotation", 1, {FormTerm{{0}, "-y"}, FormTerm{{1}, "x"}}});
    book_id.annotations = {{"H1_vanishes", "H_1 of R^3 vanishes"},
                           {"saturation_class_nontrivial", "[X] is nonzero in the complement of the binding"}};
    out.push_back(book_id);

    Scene diag = book_scene("book-diag", "book-form Lie algebra with A = diag(1, -1); unit circle is not transverse", "1,0;0,-1");
    diag.annotations = {{"H1_vanishes", "H_1 of R^3 vanishes"}};
    out.push_back(diag);

    Scene spiral = book_scene("book-spiral", "book-form Lie algebra with complex eigenvalues 1 +- i", "1,-1;1,1");
    spiral.annotations = {{"H1_vanishes", "H_1 of R^3 vanishes"},
                          {"saturation_class_nontrivial", "[X] is nonzero in the complement of the binding"}};
    out.push_back(spiral);

    Scene so3 = lie_scene("so3", "Lie-Poisson structure on so(3)*", LieAlgebraData::so3());
    so3.annotations = {{"leaves_closed", "the leaves are the spheres about the origin and the origin"}};
    out.push_back(so3);

    Scene sphere = cylinder_scene("so3-sphere", "unit sphere leaf of so(3)* in cylindrical coordinates, poles omitted");
    sphere.terms = {BivectorTerm{0, 1, "-1"}};
    sphere.densities.push_back(DensitySpec{"area", "1", "area form dz dtheta of the unit sphere"});
    sphere.patches.push_back(point("P", {"1/2", "0"}));
    sphere.annotations = {{"leaves_closed", "Lie-Poisson spheres have compact leaves"},
                          {"compact", "the unit sphere"},
                          {"orientable", "the unit sphere"}};
    out.push_back(sphere);

    out.push_back(lie_scene("sl2", "Lie-Poisson structure on sl(2)*", LieAlgebraData::sl2()));
    out.push_back(lie_scene("heisenberg", "Lie-Poisson structure on the dual of the Heisenberg algebra",
                            LieAlgebraData::heisenberg()));

    Scene s2 = cylinder_scene("s2-log", "log-symplectic sphere z d/dz ^ d/dtheta in cylindrical coordinates");
    s2.terms = {BivectorTerm{0, 1, "z"}};
    s2.densities.push_back(DensitySpec{"area", "1", "area form dz dtheta of the unit sphere"});
    s2.patches = {point("N", {"1/2", "0"}), point("S", {"-1/2", "0"})};
    s2.witnesses = {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}};
    s2.annotations = {{"compact", "the unit sphere"}, {"orientable", "the unit sphere"}};
    out.push_back(s2);

    Scene p2 = cylinder_scene("p2-log", "projective plane as the quotient of s2-log by the antipodal map");
    p2.terms = {BivectorTerm{0, 1, "z"}};
    p2.patches = {point("P", {"1/2", "0"})};
    p2.witnesses = {{0.0, 0.0}, {0.5, 0.0}};
    p2.deck_map = DeckMapSpec{{"-z", "theta"}, {"0", "1"}};
    p2.annotations = {{"compact", "the projective plane"},
                      {"deck_free", "the antipodal action is free"}};
    out.push_back(p2);

    Scene reeb = base_scene("reeb-s3", "Reeb foliation of the three-sphere with a leafwise area form; declared facts only",
                            {"x", "y", "z"});
    reeb.symbolic = false;
    reeb.annotations = {{"compact", "the three-sphere"},
                        {"orientable", "the three-sphere"},
                        {"H1_vanishes", "H_1 of the three-sphere vanishes"},
                        {"transversal_circles_exist", "the two central circles"},
                        {"regular_corank_one", "the leaves form a codimension-one foliation"},
                        {"saturation_class_nontrivial", "St(X_i) = C_i"}};
    out.push_back(reeb);

    Scene r2 = base_scene("symplectic-r2", "standard symplectic plane", {"x", "y"});
    r2.terms = {BivectorTerm{0, 1, "1"}};
    r2.densities.push_back(DensitySpec{"volume", "1", "dx dy"});
    r2.patches.push_back(point("origin", {"0", "0"}));
    out.push_back(r2);

    Scene r4 = base_scene("symplectic-r4", "standard symplectic four-space", {"x", "y", "u", "v"});
    r4.terms = {BivectorTerm{0, 1, "1"}, BivectorTerm{2, 3, "1"}};
    r4.densities.push_back(DensitySpec{"volume", "1", "dx dy du dv"});
    r4.patches.push_back(point("origin", {"0", "0", "0", "0"}));
    out.push_back(r4);

    Scene product = base_scene("product-r2xs1", "symplectic plane times a circle", {"x", "y", "theta"});
    product.chart.periodic = {false, false, true};
    product.terms = {BivectorTerm{0, 1, "1"}};
    product.densities.push_back(DensitySpec{"volume", "1", "dx dy dtheta"});
    product.forms.push_back(FormSpec{"dtheta", 1, {FormTerm{{2}, "1"}}});
    product.patches.push_back(PatchSpec{"fiber", {ParamSpec{"t", true, 0.0, 2.0 * std::numbers::pi}}, {"0", "0", "t"}});
    out.push_back(product);

    Scene flat = base_scene("flat-bundle-g2", "principal circle bundle over a genus 2 surface with a transverse foliation",
                            {"x", "y", "theta"});
    flat.chart.periodic = {false, false, true};
    flat.symbolic = false;
    flat.flat_bundle = FlatBundleSpec{2, 1};
    flat.annotations = {{"compact", "compact total space"}, {"connected", "connected base"}};
    out.push_back(flat);

    return out;
}

std::optional<Scene> find_builtin(const std::string& name) {
    for (Scene& s : builtin_scenes()) {
        if (s.name == name) return s;
    }
    return std::nullopt;
}

}  // namespace ptk
