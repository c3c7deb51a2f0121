#include "ptk/dirac.hpp"

#include "ptk/error.hpp"

#include <algorithm>

namespace ptk {

namespace {

std::size_t slots(int n) { return std::size_t{1} << n; }

Matrix isotropy_defect(const LinearDirac& l) {
    const std::size_t n = static_cast<std::size_t>(l.n);
    Matrix g = zero_matrix(l.basis.size(), l.basis.size());
    for (std::size_t r = 0; r < l.basis.size(); ++r) {
        for (std::size_t s = 0; s < l.basis.size(); ++s) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) v += l.basis[r][n + i] * l.basis[s][i] + l.basis[s][n + i] * l.basis[r][i];
            g[r][s] = v;
        }
    }
    return g;
}

// Equations (iota_u + xi^) phi = 0 for every basis row, as sparse rows over the 2^n slots.
// With swap_halves the roles of u and xi are exchanged, which gives u^w + iota_xi w = 0.
ExtVector annihilated_line(const LinearDirac& l, bool swap_halves, const char* what) {
    const int n = l.n;
    const std::size_t size = slots(n);
    SparseReducer reducer(static_cast<int>(size));
    for (const Row& row : l.basis) {
        const auto contract_part = [&](int i) -> const Rational& {
            return row[static_cast<std::size_t>(swap_halves ? n + i : i)];
        };
        const auto wedge_part = [&](int i) -> const Rational& {
            return row[static_cast<std::size_t>(swap_halves ? i : n + i)];
        };
        for (Mask k = 0; k < size; ++k) {
            SparseReducer::SparseRow eq;
            for (int i = 0; i < n; ++i) {
                const Mask bit = Mask{1} << i;
                if (k & bit) {
                    const Rational& x = wedge_part(i);
                    if (sgn(x) != 0) eq[static_cast<int>(k & ~bit)] += wedge_sign(bit, k & ~bit) * x;
                } else {
                    const Rational& u = contract_part(i);
                    if (sgn(u) != 0) eq[static_cast<int>(k | bit)] += contraction_sign(i, k | bit) * u;
                }
            }
            if (!eq.empty()) reducer.add(std::move(eq));
        }
    }
    const Matrix kernel = reducer.nullspace();
    if (kernel.size() != 1) {
        throw PreconditionError(std::string(what) + " space has dimension " + std::to_string(kernel.size()) +
                                " (input is not Lagrangian)");
    }
    ExtVector v = kernel[0];
    // normalize at the first nonzero slot in (degree, lexicographic) order
    Mask lead = 0;
    bool found = false;
    for (Mask m = 0; m < size; ++m) {
        if (sgn(v[m]) == 0) continue;
        if (!found || tuple_less(m, lead)) lead = m;
        found = true;
    }
    const Rational scale = 1 / v[lead];
    for (Rational& x : v) x *= scale;
    return v;
}

Rational minor_det(const Matrix& f, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix m = zero_matrix(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
            m[a][b] = f[static_cast<std::size_t>(rows[a])][static_cast<std::size_t>(cols[b])];
        }
    }
    return determinant(m);
}

// Top exterior power of the rows of `vectors` (each of length n).
ExtVector wedge_rows(const Matrix& vectors, int n) {
    ExtVector acc(slots(n));
    acc[0] = 1;
    for (const Row& x : vectors) {
        ExtVector next(slots(n));
        for (Mask k = 0; k < slots(n); ++k) {
            if (sgn(acc[k]) == 0) continue;
            for (int i = 0; i < n; ++i) {
                const Mask bit = Mask{1} << i;
                if ((k & bit) || sgn(x[static_cast<std::size_t>(i)]) == 0) continue;
                next[k | bit] += wedge_sign(k, bit) * acc[k] * x[static_cast<std::size_t>(i)];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

LinearDirac LinearDirac::tangent(int n) {
    LinearDirac l;
    l.n = n;
    l.basis = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) l.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return l;
}

LinearDirac LinearDirac::cotangent(int n) {
    LinearDirac l;
    l.n = n;
    l.basis = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) l.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    return l;
}

LinearDirac LinearDirac::graph_bivector(const Matrix& p) {
    const std::size_t n = p.size();
    LinearDirac l;
    l.n = static_cast<int>(n);
    l.basis = zero_matrix(n, 2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) l.basis[a][b] = p[a][b];
        l.basis[a][n + a] = 1;
    }
    if (!l.is_lagrangian()) throw InputError("bivector matrix is not antisymmetric");
    return l;
}

LinearDirac LinearDirac::graph_form(const Matrix& w) {
    const std::size_t n = w.size();
    LinearDirac l;
    l.n = static_cast<int>(n);
    l.basis = zero_matrix(n, 2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        l.basis[a][a] = 1;
        for (std::size_t b = 0; b < n; ++b) l.basis[a][n + b] = w[a][b];
    }
    if (!l.is_lagrangian()) throw InputError("2-form matrix is not antisymmetric");
    return l;
}

LinearDirac LinearDirac::from_rows(int n, const Matrix& rows) {
    for (const Row& r : rows) {
        if (static_cast<int>(r.size()) != 2 * n) throw InputError("Dirac basis rows must have length 2n");
    }
    LinearDirac l;
    l.n = n;
    l.basis = rowspace_basis(rows, 2 * n);
    if (!l.is_lagrangian()) throw InputError("subspace is not Lagrangian");
    return l;
}

bool LinearDirac::is_lagrangian() const {
    if (static_cast<int>(basis.size()) != n || rank(basis, 2 * n) != n) return false;
    return is_zero_matrix(isotropy_defect(*this));
}

Matrix antisymmetric_matrix(const Multivector& pi, const std::vector<Rational>& point) {
    const std::size_t n = static_cast<std::size_t>(pi.dim());
    Matrix p = zero_matrix(n, n);
    for (const auto& [m, c] : pi.terms()) {
        const auto a = static_cast<std::size_t>(std::countr_zero(m));
        const auto b = static_cast<std::size_t>(31 - std::countl_zero(m));
        const Rational v = c.evaluate(std::span<const Rational>(point));
        p[a][b] = v;
        p[b][a] = -v;
    }
    return p;
}

Matrix antisymmetric_matrix(const DiffForm& omega, const std::vector<Rational>& point) {
    const std::size_t n = static_cast<std::size_t>(omega.dim());
    Matrix w = zero_matrix(n, n);
    for (const auto& [m, c] : omega.terms()) {
        const auto a = static_cast<std::size_t>(std::countr_zero(m));
        const auto b = static_cast<std::size_t>(31 - std::countl_zero(m));
        const Rational v = c.evaluate(std::span<const Rational>(point));
        w[a][b] = v;
        w[b][a] = -v;
    }
    return w;
}

ExtVector spinor_line(const LinearDirac& l) { return annihilated_line(l, false, "spinor"); }

ExtVector cospinor_line(const LinearDirac& l) { return annihilated_line(l, true, "co-spinor"); }

ExtVector contract(const ExtVector& v, const ExtVector& phi, int n) {
    ExtVector out(slots(n));
    for (Mask i = 0; i < slots(n); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (Mask j = 0; j < slots(n); ++j) {
            if (sgn(phi[j]) == 0) continue;
            const int s = interior_sign(i, j);
            if (s != 0) out[j & ~i] += s * v[i] * phi[j];
        }
    }
    return out;
}

ExtVector spinor_cospinor_iso(const ExtVector& phi, const ExtVector& w_top, int n) { return contract(phi, w_top, n); }

bool is_zero_vector(const ExtVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool same_line(const ExtVector& a, const ExtVector& b) {
    if (a.size() != b.size() || is_zero_vector(a) || is_zero_vector(b)) return false;
    std::size_t k = 0;
    while (sgn(a[k]) == 0) ++k;
    if (sgn(b[k]) == 0) return false;
    const Rational ratio = b[k] / a[k];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] != ratio * a[i]) return false;
    }
    return true;
}

ExtVector pullback_forms(const ExtVector& psi, const Matrix& f, int dim_w, int dim_v) {
    ExtVector out(slots(dim_v));
    for (Mask i = 0; i < slots(dim_w); ++i) {
        if (sgn(psi[i]) == 0) continue;
        const std::vector<int> rows = indices_of(i);
        for (Mask j : masks_of_degree(dim_v, degree_of(i))) out[j] += psi[i] * minor_det(f, rows, indices_of(j));
    }
    return out;
}

ExtVector pushforward_multivectors(const ExtVector& w, const Matrix& f, int dim_w, int dim_v) {
    ExtVector out(slots(dim_w));
    for (Mask j = 0; j < slots(dim_v); ++j) {
        if (sgn(w[j]) == 0) continue;
        const std::vector<int> cols = indices_of(j);
        for (Mask i : masks_of_degree(dim_w, degree_of(j))) out[i] += w[j] * minor_det(f, indices_of(i), cols);
    }
    return out;
}

PullbackResult backward_pullback(const LinearDirac& lm, const Matrix& f, int dim_v) {
    const int dim_w = lm.n;
    if (static_cast<int>(f.size()) != dim_w) throw InputError("map matrix must have dim W rows");
    for (const Row& r : f) {
        if (static_cast<int>(r.size()) != dim_v) throw InputError("map matrix must have dim V columns");
    }
    const std::size_t nv = static_cast<std::size_t>(dim_v);
    const std::size_t nw = static_cast<std::size_t>(dim_w);
    // unknowns (u, c): f u = sum_r c_r a_r
    Matrix constraint = zero_matrix(nw, nv + lm.basis.size());
    for (std::size_t a = 0; a < nw; ++a) {
        for (std::size_t j = 0; j < nv; ++j) constraint[a][j] = f[a][j];
        for (std::size_t r = 0; r < lm.basis.size(); ++r) constraint[a][nv + r] = -lm.basis[r][a];
    }
    Matrix rows;
    for (const Row& k : nullspace(constraint, static_cast<int>(nv + lm.basis.size()))) {
        Row out(2 * nv);
        for (std::size_t j = 0; j < nv; ++j) out[j] = k[j];
        for (std::size_t r = 0; r < lm.basis.size(); ++r) {
            if (sgn(k[nv + r]) == 0) continue;
            // f^* eta: (f^T eta)_j = sum_a f[a][j] eta_a
            for (std::size_t j = 0; j < nv; ++j) {
                for (std::size_t a = 0; a < nw; ++a) out[nv + j] += k[nv + r] * f[a][j] * lm.basis[r][nw + a];
            }
        }
        rows.push_back(std::move(out));
    }
    PullbackResult res;
    res.result.n = dim_v;
    res.result.basis = rowspace_basis(rows, 2 * dim_v);
    res.lagrangian = res.result.is_lagrangian();
    Matrix kernel_rows;
    for (const Row& eta : nullspace(transpose(f), dim_w)) {
        Row r(2 * nw);
        for (std::size_t a = 0; a < nw; ++a) r[nw + a] = eta[a];
        kernel_rows.push_back(std::move(r));
    }
    res.transverse = intersect_rowspaces(lm.basis, kernel_rows, 2 * dim_w).empty();
    if (res.transverse && res.lagrangian) {
        res.spinor_relation = same_line(pullback_forms(spinor_line(lm), f, dim_w, dim_v), spinor_line(res.result));
    }
    return res;
}

PushforwardResult forward_pushforward(const LinearDirac& lp, const Matrix& f, int dim_w) {
    const int dim_v = lp.n;
    if (static_cast<int>(f.size()) != dim_w) throw InputError("map matrix must have dim W rows");
    for (const Row& r : f) {
        if (static_cast<int>(r.size()) != dim_v) throw InputError("map matrix must have dim V columns");
    }
    const std::size_t nv = static_cast<std::size_t>(dim_v);
    const std::size_t nw = static_cast<std::size_t>(dim_w);
    const std::size_t nr = lp.basis.size();
    // unknowns (c, xi): sum_r c_r b_r = f^T xi
    Matrix constraint = zero_matrix(nv, nr + nw);
    for (std::size_t j = 0; j < nv; ++j) {
        for (std::size_t r = 0; r < nr; ++r) constraint[j][r] = lp.basis[r][nv + j];
        for (std::size_t a = 0; a < nw; ++a) constraint[j][nr + a] = -f[a][j];
    }
    Matrix rows;
    for (const Row& k : nullspace(constraint, static_cast<int>(nr + nw))) {
        Row out(2 * nw);
        for (std::size_t r = 0; r < nr; ++r) {
            if (sgn(k[r]) == 0) continue;
            for (std::size_t a = 0; a < nw; ++a) {
                for (std::size_t j = 0; j < nv; ++j) out[a] += k[r] * f[a][j] * lp.basis[r][j];
            }
        }
        for (std::size_t a = 0; a < nw; ++a) out[nw + a] = k[nr + a];
        rows.push_back(std::move(out));
    }
    PushforwardResult res;
    res.result.n = dim_w;
    res.result.basis = rowspace_basis(rows, 2 * dim_w);
    res.lagrangian = res.result.is_lagrangian();
    res.surjective = rank(f, dim_v) == dim_w;
    const Matrix kernel = nullspace(f, dim_v);
    Matrix kernel_rows;
    for (const Row& u : kernel) {
        Row r(2 * nv);
        for (std::size_t j = 0; j < nv; ++j) r[j] = u[j];
        kernel_rows.push_back(std::move(r));
    }
    res.strong = intersect_rowspaces(lp.basis, kernel_rows, 2 * dim_v).empty();
    if (res.strong && res.surjective && res.lagrangian) {
        res.checked_transport = true;
        res.cospinor_transport =
            same_line(pushforward_multivectors(cospinor_line(lp), f, dim_w, dim_v), cospinor_line(res.result));
        const ExtVector v = wedge_rows(kernel, dim_v);
        res.spinor_contraction =
            same_line(contract(v, spinor_line(lp), dim_v), pullback_forms(spinor_line(res.result), f, dim_w, dim_v));
    }
    return res;
}

TransversalFlags transversal_conditions(const LinearDirac& l, const Matrix& x) {
    const int n = l.n;
    const std::size_t nn = static_cast<std::size_t>(n);
    const int k = static_cast<int>(x.size());
    if (rank(x, n) != k) throw InputError("subspace basis is not of full rank");
    TransversalFlags flags;
    Matrix split;
    for (const Row& v : x) {
        Row r(2 * nn);
        for (std::size_t i = 0; i < nn; ++i) r[i] = v[i];
        split.push_back(std::move(r));
    }
    for (const Row& eta : nullspace(x, n)) {
        Row r(2 * nn);
        for (std::size_t i = 0; i < nn; ++i) r[nn + i] = eta[i];
        split.push_back(std::move(r));
    }
    flags.b = rank(stack(l.basis, split), 2 * n) == 2 * n;

    const ExtVector phi = spinor_line(l);
    Rational top = 0;
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) rows[static_cast<std::size_t>(a)] = a;
    for (Mask j : masks_of_degree(n, k)) {
        if (sgn(phi[j]) != 0) top += phi[j] * minor_det(x, rows, indices_of(j));
    }
    flags.c = sgn(top) != 0;

    const ExtVector w = cospinor_line(l);
    const ExtVector xtop = wedge_rows(x, n);
    Rational volume = 0;
    for (Mask j : masks_of_degree(n, n - k)) {
        const Mask rest = full_mask(n) & ~j;
        if (sgn(w[j]) != 0 && sgn(xtop[rest]) != 0) volume += wedge_sign(j, rest) * w[j] * xtop[rest];
    }
    flags.d = sgn(volume) != 0;
    return flags;
}

DiracUnimodularResult dirac_unimodular_check(const PoissonStructure& pi, const DiffForm& mu) {
    DiracUnimodularResult r;
    r.closed = true;
    Multivector power = multivector_power(pi.bivector, 0);
    Rational factorial = 1;
    for (int k = 0; 2 * k <= pi.dim(); ++k) {
        if (k > 0) factorial *= k;
        const Rational scale = (k % 2 == 0 ? Rational(1) : Rational(-1)) / factorial;
        DiffForm component = scale * interior_product(power, mu);
        const bool closed = exterior_derivative(component).is_zero();
        r.components.push_back(std::move(component));
        r.component_closed.push_back(closed);
        r.closed = r.closed && closed;
        power = wedge(power, pi.bivector);
    }
    return r;
}

LinearDirac random_lagrangian(int n, std::mt19937_64& rng, int moves) {
    const std::size_t nn = static_cast<std::size_t>(n);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> index(0, n - 1);
    const auto entry = [&]() {
        Rational r(small(rng), coin(rng) ? 1 : 2);
        r.canonicalize();
        return r;
    };
    LinearDirac l = coin(rng) ? LinearDirac::tangent(n) : LinearDirac::cotangent(n);
    for (int step = 0; step < moves; ++step) {
        const int move = kind(rng);
        if (move == 0 || move == 1) {
            // B-transform (xi += iota_u B) or beta-transform (u += iota_xi beta)
            Matrix b = zero_matrix(nn, nn);
            for (std::size_t i = 0; i < nn; ++i) {
                for (std::size_t j = i + 1; j < nn; ++j) {
                    if (coin(rng)) continue;
                    b[i][j] = entry();
                    b[j][i] = -b[i][j];
                }
            }
            const std::size_t from = move == 0 ? 0 : nn;
            const std::size_t to = move == 0 ? nn : 0;
            for (Row& row : l.basis) {
                Row delta(nn);
                for (std::size_t a = 0; a < nn; ++a) {
                    if (sgn(row[from + a]) == 0) continue;
                    for (std::size_t c = 0; c < nn; ++c) delta[c] += row[from + a] * b[a][c];
                }
                for (std::size_t c = 0; c < nn; ++c) row[to + c] += delta[c];
            }
        } else if (move == 2 && n > 1) {
            // u -> g u, xi -> g^{-T} xi for g = I + t E_ij
            const int i = index(rng);
            int j = index(rng);
            if (j == i) j = (i + 1) % n;
            const Rational t = entry();
            for (Row& row : l.basis) {
                row[static_cast<std::size_t>(i)] += t * row[static_cast<std::size_t>(j)];
                row[nn + static_cast<std::size_t>(j)] -= t * row[nn + static_cast<std::size_t>(i)];
            }
        } else {
            const std::size_t i = static_cast<std::size_t>(index(rng));
            for (Row& row : l.basis) std::swap(row[i], row[nn + i]);
        }
    }
    return LinearDirac::from_rows(n, l.basis);
}

Matrix random_subspace(int n, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-2, 2);
    while (true) {
        Matrix x = zero_matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (Row& r : x) {
            for (Rational& v : r) v = small(rng);
        }
        if (rank(x, n) == k) return x;
    }
}

Matrix parse_matrix(const std::string& text) {
    Matrix m;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(';', start), text.size());
        m.push_back(parse_rational_list(std::string_view(text).substr(start, end - start)));
        if (m.back().size() != m.front().size()) throw InputError("matrix rows have different lengths");
        start = end + 1;
    }
    return m;
}

std::string matrix_to_string(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out += ",";
            out += to_string(m[i][j]);
        }
    }
    return out;
}

std::string ext_to_string(const ExtVector& v, const std::string& prefix) {
    std::vector<Mask> order;
    for (Mask m = 0; m < v.size(); ++m) {
        if (sgn(v[m]) != 0) order.push_back(m);
    }
    if (order.empty()) return "0";
    std::sort(order.begin(), order.end(), tuple_less);
    std::string out;
    for (Mask m : order) {
        const Rational& c = v[m];
        std::string basis;
        for (int i : indices_of(m)) basis += (basis.empty() ? "" : "^") + prefix + std::to_string(i + 1);
        const Rational a = abs(c);
        std::string term;
        if (basis.empty()) {
            term = to_string(a);
        } else {
            term = a == 1 ? basis : to_string(a) + "*" + basis;
        }
        if (out.empty()) {
            out = (sgn(c) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

}  // namespace ptk
