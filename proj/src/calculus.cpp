#include "ptk/calculus.hpp"

#include "ptk/simd.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ptk {

std::vector<Mask> masks_of_degree(int dim, int degree) {
    std::vector<Mask> out;
    if (degree < 0 || degree > dim) return out;
    std::vector<int> idx(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(mask_of(idx));
        int i = degree - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == dim - degree + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < degree; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

template <class G>
G wedge_impl(const G& a, const G& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge of objects on different charts");
    const int degree = a.degree() + b.degree();
    if (degree > a.dim()) return G(a.dim(), a.dim());
    G out(a.dim(), degree);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

// Right derivative P <- d/dtheta_i of a homogeneous superfunction.
Multivector right_theta_derivative(const Multivector& p, int i) {
    Multivector out(p.dim(), p.degree() - 1);
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : p.terms()) {
        if (!(m & bit)) continue;
        const Mask rest = m & ~bit;
        out.add(rest, wedge_sign(rest, bit) > 0 ? c : -c);
    }
    return out;
}

Multivector partial(const Multivector& p, int i) {
    Multivector out(p.dim(), p.degree());
    for (const auto& [m, c] : p.terms()) out.add(m, c.derivative(i));
    return out;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) { return wedge_impl(a, b); }
DiffForm wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }

DiffForm interior_product(const Multivector& w, const DiffForm& eta) {
    if (w.dim() != eta.dim()) throw std::invalid_argument("contraction of objects on different charts");
    if (w.degree() > eta.degree()) return DiffForm(eta.dim(), 0);
    DiffForm out(eta.dim(), eta.degree() - w.degree());
    for (const auto& [mw, cw] : w.terms()) {
        for (const auto& [me, ce] : eta.terms()) {
            const int s = interior_sign(mw, me);
            if (s == 0) continue;
            out.add(me & ~mw, s > 0 ? cw * ce : -(cw * ce));
        }
    }
    return out;
}

DiffForm exterior_derivative(const DiffForm& eta) {
    const int dim = eta.dim();
    if (eta.degree() >= dim) return DiffForm(dim, dim);
    DiffForm out(dim, eta.degree() + 1);
    for (const auto& [m, c] : eta.terms()) {
        for (int i = 0; i < dim; ++i) {
            const Mask bit = Mask{1} << i;
            if (m & bit) continue;
            PolyScalar di = c.derivative(i);
            if (di.is_zero()) continue;
            out.add(m | bit, wedge_sign(bit, m) > 0 ? di : -di);
        }
    }
    return out;
}

Multivector schouten_bracket(const Multivector& p, const Multivector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("bracket of objects on different charts");
    const int dim = p.dim();
    const int degree = p.degree() + q.degree() - 1;
    if (degree < 0) return Multivector(dim, 0);
    if (degree > dim) return Multivector(dim, dim);
    const bool flip = ((p.degree() - 1) * (q.degree() - 1)) % 2 != 0;
    Multivector out(dim, degree);
    for (int i = 0; i < dim; ++i) {
        if (p.degree() > 0) out += wedge(right_theta_derivative(p, i), partial(q, i));
        if (q.degree() > 0) {
            const Multivector t = wedge(right_theta_derivative(q, i), partial(p, i));
            if (flip) {
                out += t;
            } else {
                out -= t;
            }
        }
    }
    return out;
}

Multivector multivector_power(const Multivector& pi, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    Multivector out = Multivector::scalar(pi.dim(), PolyScalar::constant(pi.dim(), Rational(1)));
    for (int i = 0; i < k; ++i) out = wedge(out, pi);
    return out;
}

DiffForm differential(const PolyScalar& f) {
    return exterior_derivative(DiffForm::scalar(f.nvars(), f));
}

Multivector sharp(const Multivector& pi, const DiffForm& alpha) {
    if (pi.degree() != 2 || alpha.degree() != 1) throw std::invalid_argument("sharp expects a bivector and a 1-form");
    const int dim = pi.dim();
    Multivector out(dim, 1);
    for (const auto& [m, c] : pi.terms()) {
        const int a = std::countr_zero(m);
        const int b = 31 - std::countl_zero(m);
        const PolyScalar aa = alpha.coefficient(Mask{1} << a);
        const PolyScalar ab = alpha.coefficient(Mask{1} << b);
        if (!aa.is_zero()) out.add(Mask{1} << b, c * aa);
        if (!ab.is_zero()) out.add(Mask{1} << a, -(c * ab));
    }
    return out;
}

DiffForm lie_derivative(const Multivector& x, const DiffForm& eta) {
    DiffForm out = exterior_derivative(interior_product(x, eta));
    out += interior_product(x, exterior_derivative(eta));
    return out;
}

PolyScalar apply_vector(const Multivector& u, const PolyScalar& f) {
    if (u.degree() != 1) throw std::invalid_argument("apply_vector expects a vector field");
    PolyScalar out(u.dim());
    for (const auto& [m, c] : u.terms()) out += c * f.derivative(std::countr_zero(m));
    return out;
}

double small_determinant(std::vector<double> a, int n) {
    double det = 1.0;
    const auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r * n + c)]; };
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::fabs(at(r, col)) > std::fabs(at(pivot, col))) pivot = r;
        }
        if (at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(col, c));
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = at(r, col) / at(col, col);
            for (int c = col; c < n; ++c) at(r, c) -= f * at(col, c);
        }
    }
    return det;
}

MapJets evaluate_jets(const std::vector<Expression>& phi, int param_dim,
                      const std::vector<std::vector<double>>& points) {
    if (static_cast<int>(points.size()) != param_dim) throw std::invalid_argument("point dimension mismatch");
    MapJets jets;
    jets.target_dim = static_cast<int>(phi.size());
    jets.param_dim = param_dim;
    jets.count = param_dim == 0 ? 1 : points[0].size();
    jets.values.assign(phi.size(), std::vector<double>(jets.count));
    jets.jacobian.assign(phi.size() * static_cast<std::size_t>(param_dim), std::vector<double>(jets.count));
    std::vector<double> t(static_cast<std::size_t>(param_dim));
    for (std::size_t a = 0; a < phi.size(); ++a) {
        std::vector<Expression> partials;
        for (int b = 0; b < param_dim; ++b) partials.push_back(phi[a].derivative(b));
        for (std::size_t s = 0; s < jets.count; ++s) {
            for (int b = 0; b < param_dim; ++b) t[static_cast<std::size_t>(b)] = points[static_cast<std::size_t>(b)][s];
            jets.values[a][s] = phi[a].evaluate(t);
            for (int b = 0; b < param_dim; ++b) {
                jets.jacobian[a * static_cast<std::size_t>(param_dim) + static_cast<std::size_t>(b)][s] =
                    partials[static_cast<std::size_t>(b)].evaluate(t);
            }
        }
    }
    return jets;
}

std::vector<double> evaluate_poly_batch(const PolyScalar& p, const std::vector<std::vector<double>>& points) {
    const std::size_t count = points.empty() ? 1 : points[0].size();
    std::vector<double> out(count);
    const CompiledPoly compiled(p);
    std::vector<const double*> vars;
    for (const auto& column : points) vars.push_back(column.data());
    if (static_cast<int>(vars.size()) < compiled.nvars) throw std::invalid_argument("too few coordinates for polynomial");
    const simd::PolyView view{compiled.coefficients.size(), compiled.nvars, compiled.coefficients.data(),
                              compiled.exponents.data()};
    simd::active().poly_eval(view, vars.data(), count, out.data());
    return out;
}

PullbackEvaluator::PullbackEvaluator(const DiffForm& eta, std::vector<Expression> phi, int param_dim)
    : eta_(eta), phi_(std::move(phi)), param_dim_(param_dim), degree_(eta.degree()) {
    if (static_cast<int>(phi_.size()) != eta.dim()) throw std::invalid_argument("parametrization has wrong number of components");
    if (degree_ <= param_dim_) out_masks_ = masks_of_degree(param_dim_, degree_);
}

std::vector<double> PullbackEvaluator::operator()(std::span<const double> t) const {
    std::vector<std::vector<double>> points;
    for (double v : t) points.push_back({v});
    const auto batch = evaluate_batch(points);
    std::vector<double> out;
    for (const auto& column : batch) out.push_back(column[0]);
    return out;
}

std::vector<std::vector<double>> PullbackEvaluator::evaluate_batch(const std::vector<std::vector<double>>& points) const {
    return evaluate_jets(ptk::evaluate_jets(phi_, param_dim_, points));
}

std::vector<std::vector<double>> PullbackEvaluator::evaluate_jets(const MapJets& jets) const {
    std::vector<std::vector<double>> out(out_masks_.size(), std::vector<double>(jets.count, 0.0));
    if (out_masks_.empty()) return out;
    const int k = degree_;
    std::vector<double> minor(static_cast<std::size_t>(k * k));
    std::vector<double> det(jets.count);
    for (const auto& [mj, c] : eta_.terms()) {
        const std::vector<double> coeff = evaluate_poly_batch(c, jets.values);
        const std::vector<int> rows = indices_of(mj);
        for (std::size_t o = 0; o < out_masks_.size(); ++o) {
            const std::vector<int> cols = indices_of(out_masks_[o]);
            for (std::size_t s = 0; s < jets.count; ++s) {
                for (int r = 0; r < k; ++r) {
                    for (int q = 0; q < k; ++q) {
                        minor[static_cast<std::size_t>(r * k + q)] =
                            jets.jacobian[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)] * param_dim_ +
                                                                   cols[static_cast<std::size_t>(q)])][s];
                    }
                }
                det[s] = k == 0 ? 1.0 : small_determinant(minor, k);
            }
            simd::active().fma_accumulate(coeff.data(), det.data(), jets.count, out[o].data());
        }
    }
    return out;
}

}  // namespace ptk
