#include "ptk/poisson.hpp"

#include "ptk/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace ptk {

Chart Chart::euclidean(std::vector<std::string> names) {
    Chart c;
    c.dim = static_cast<int>(names.size());
    c.coords = std::move(names);
    c.periodic.assign(c.coords.size(), false);
    return c;
}

JacobiResult jacobi_check(const Multivector& b) {
    if (b.degree() != 2 && !b.is_zero()) throw std::invalid_argument("jacobi_check expects a bivector");
    JacobiResult r;
    r.bracket = schouten_bracket(b, b);
    r.ok = r.bracket.is_zero();
    r.witness_coefficient = PolyScalar(b.dim());
    if (!r.ok) {
        std::vector<Mask> order;
        for (const auto& [m, c] : r.bracket.terms()) order.push_back(m);
        const Mask first = *std::min_element(order.begin(), order.end(), tuple_less);
        r.witness_mask = first;
        r.witness_coefficient = r.bracket.coefficient(first);
    }
    return r;
}

PoissonStructure make_poisson(const Multivector& b) {
    const JacobiResult r = jacobi_check(b);
    if (!r.ok) throw PreconditionError("bivector is not Poisson: [pi, pi] has a nonzero term");
    Multivector bivector = b;
    if (bivector.is_zero()) bivector = Multivector(b.dim(), 2);
    return PoissonStructure{bivector, true};
}

LieAlgebraData::LieAlgebraData(int n, std::vector<Rational> constants) : n_(n), constants_(std::move(constants)) {
    if (n < 0 || static_cast<int>(constants_.size()) != n * n * n) throw InputError("structure constants have the wrong size");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (c(i, j, k) != -c(j, i, k)) throw InputError("structure constants are not antisymmetric");
            }
        }
    }
    // sum over cyclic (i, j, k) of [[e_i, e_j], e_k] = 0
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int m = 0; m < n; ++m) {
                    Rational s = 0;
                    for (int l = 0; l < n; ++l) {
                        s += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) + c(k, i, l) * c(l, j, m);
                    }
                    if (sgn(s) != 0) throw InputError("structure constants violate the Jacobi identity");
                }
            }
        }
    }
}

namespace {

std::vector<Rational> constants_from(int n, const std::vector<std::tuple<int, int, int, Rational>>& brackets) {
    std::vector<Rational> c(static_cast<std::size_t>(n * n * n));
    for (const auto& [i, j, k, v] : brackets) {
        c[static_cast<std::size_t>((i * n + j) * n + k)] += v;
        c[static_cast<std::size_t>((j * n + i) * n + k)] -= v;
    }
    return c;
}

}  // namespace

LieAlgebraData LieAlgebraData::so3() {
    return LieAlgebraData(3, constants_from(3, {{1, 2, 0, 1}, {2, 0, 1, 1}, {0, 1, 2, 1}}));
}

LieAlgebraData LieAlgebraData::sl2() {
    return LieAlgebraData(3, constants_from(3, {{1, 2, 0, 1}, {2, 0, 1, 1}, {0, 1, 2, -1}}));
}

LieAlgebraData LieAlgebraData::heisenberg() { return LieAlgebraData(3, constants_from(3, {{0, 1, 2, 1}})); }

LieAlgebraData LieAlgebraData::abelian(int n) {
    return LieAlgebraData(n, std::vector<Rational>(static_cast<std::size_t>(n * n * n)));
}

LieAlgebraData LieAlgebraData::book(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return LieAlgebraData(3, constants_from(3, {{0, 2, 0, a}, {0, 2, 1, b}, {1, 2, 0, c}, {1, 2, 1, d}}));
}

PoissonStructure lie_poisson(const LieAlgebraData& g) {
    const int n = g.dim();
    Multivector pi(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            PolyScalar coeff(n);
            for (int k = 0; k < n; ++k) {
                if (sgn(g.c(i, j, k)) != 0) coeff += g.c(i, j, k) * PolyScalar::variable(n, k);
            }
            pi.add(mask_of({i, j}), coeff);
        }
    }
    return make_poisson(pi);
}

PolyScalar poisson_bracket(const Multivector& pi, const PolyScalar& f, const PolyScalar& g) {
    return apply_vector(sharp(pi, differential(f)), g);
}

Multivector hamiltonian_field(const PoissonStructure& pi, const PolyScalar& f) {
    return sharp(pi.bivector, differential(f));
}

DensityCheck check_invariant_density(const PoissonStructure& pi, const DiffForm& mu) {
    if (mu.degree() != pi.dim() && !mu.is_zero()) throw std::invalid_argument("density must be a top form");
    DensityCheck r;
    r.d_iota = exterior_derivative(interior_product(pi.bivector, mu));
    r.ok = r.d_iota.is_zero();
    return r;
}

std::vector<ChainEntry> modular_chain(const PoissonStructure& pi, const DiffForm& mu) {
    std::vector<ChainEntry> chain;
    Multivector power = multivector_power(pi.bivector, 0);
    for (int k = 0; 2 * k <= pi.dim(); ++k) {
        ChainEntry e;
        e.k = k;
        e.form = interior_product(power, mu);
        e.derivative = exterior_derivative(e.form);
        e.closed = e.derivative.is_zero();
        chain.push_back(std::move(e));
        power = wedge(power, pi.bivector);
    }
    return chain;
}

std::vector<PolyScalar> solve_invariant_density(const PoissonStructure& pi, int degree_bound) {
    const int m = pi.dim();
    const std::vector<PolyScalar::Exponents> monomials = monomials_up_to(m, degree_bound);
    const DiffForm omega = coordinate_volume(m);
    // rows indexed by (basis mask, exponent) of d iota_pi(g Omega)
    std::map<std::pair<Mask, PolyScalar::Exponents>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    for (const auto& e : monomials) {
        const DiffForm image =
            exterior_derivative(interior_product(pi.bivector, PolyScalar::monomial(m, e, Rational(1)) * omega));
        std::vector<std::pair<std::size_t, Rational>> column;
        for (const auto& [mask, coeff] : image.terms()) {
            for (const auto& [exps, value] : coeff.terms()) {
                const auto [it, inserted] = row_of.try_emplace({mask, exps}, row_of.size());
                column.emplace_back(it->second, value);
            }
        }
        columns.push_back(std::move(column));
    }
    Matrix system = zero_matrix(row_of.size(), monomials.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [i, v] : columns[j]) system[i][j] = v;
    }
    const Matrix kernel = rowspace_basis(nullspace(system, static_cast<int>(monomials.size())),
                                         static_cast<int>(monomials.size()));
    std::vector<PolyScalar> basis;
    for (const Row& row : kernel) {
        PolyScalar g(m);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) g.add_term(monomials[j], row[j]);
        }
        basis.push_back(std::move(g));
    }
    return basis;
}

double density_min(const DiffForm& mu, const std::vector<std::vector<double>>& points) {
    const std::vector<double> values = evaluate_poly_batch(mu.coefficient(full_mask(mu.dim())), points);
    double lo = INFINITY;
    for (double v : values) lo = std::fmin(lo, v);
    return lo;
}

LogSymplecticReport log_symplectic_analysis(const PoissonStructure& pi, const std::vector<std::vector<double>>& witnesses,
                                            double tol) {
    const int m = pi.dim();
    if (m % 2 != 0) throw PreconditionError("log-symplectic analysis needs an even-dimensional chart");
    LogSymplecticReport r;
    r.f = multivector_power(pi.bivector, m / 2).coefficient(full_mask(m));
    for (int i = 0; i < m; ++i) {
        const PolyScalar di = r.f.derivative(i);
        if (!di.is_zero() && di.is_constant()) {
            r.exact_certificate = true;
            r.certificate_coordinate = i;
            break;
        }
    }
    std::vector<PolyScalar> gradient;
    for (int i = 0; i < m; ++i) gradient.push_back(r.f.derivative(i));
    for (const auto& p : witnesses) {
        if (static_cast<int>(p.size()) != m) throw InputError("witness point has the wrong dimension");
        WitnessVerdict w;
        w.point = p;
        w.f = r.f.evaluate(p);
        double norm2 = 0.0;
        for (const PolyScalar& g : gradient) {
            const double v = g.evaluate(p);
            norm2 += v * v;
        }
        w.df_norm = std::sqrt(norm2);
        if (std::fabs(w.f) <= tol) {
            w.status = w.df_norm > tol ? LocusStatus::OnLocusTransverse : LocusStatus::OnLocusDegenerate;
        } else if (std::fabs(w.f) >= 100.0 * tol) {
            w.status = LocusStatus::OffLocus;
            w.sign = w.f > 0 ? 1 : -1;
        } else {
            w.status = LocusStatus::Inconclusive;
        }
        r.witnesses.push_back(std::move(w));
    }
    return r;
}

ExprForm ExprForm::exterior_derivative() const {
    ExprForm out;
    out.dim = dim;
    out.degree = degree + 1;
    if (out.degree > dim) return out;
    for (const auto& [m, c] : terms) {
        for (int i = 0; i < dim; ++i) {
            const Mask bit = Mask{1} << i;
            if (m & bit) continue;
            Expression di = c.derivative(i);
            if (di.is_zero()) continue;
            if (wedge_sign(bit, m) < 0) di = -di;
            auto [it, inserted] = out.terms.try_emplace(m | bit, di);
            if (!inserted) it->second = it->second + di;
        }
    }
    return out;
}

std::vector<double> ExprForm::evaluate(std::span<const double> point) const {
    const std::vector<Mask> masks = masks_of_degree(dim, degree);
    std::vector<double> out(masks.size(), 0.0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        const auto it = terms.find(masks[i]);
        if (it != terms.end()) out[i] = it->second.evaluate(point);
    }
    return out;
}

FiberIntegral::FiberIntegral(ExprForm omega, Fiber fiber, std::size_t nodes)
    : omega_(std::move(omega)), fiber_(std::move(fiber)) {
    if (fiber_.coords.size() != fiber_.ranges.size()) throw InputError("fiber coordinates and ranges differ in number");
    for (std::size_t i = 0; i < fiber_.coords.size(); ++i) {
        const ParamRange& r = fiber_.ranges[i];
        if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max)) {
            throw InputError("fiber direction is not a closed bounded interval or circle");
        }
        if (fiber_.coords[i] < 0 || fiber_.coords[i] >= omega_.dim) throw InputError("fiber coordinate out of range");
        if (i > 0 && fiber_.coords[i] <= fiber_.coords[i - 1]) throw InputError("fiber coordinates must increase");
    }
    grid_ = make_grid(fiber_.ranges, nodes, nodes);
    Mask fiber_mask = 0;
    for (int c : fiber_.coords) fiber_mask |= Mask{1} << c;
    for (int c = 0; c < omega_.dim; ++c) {
        if (!(fiber_mask & (Mask{1} << c))) base_coords_.push_back(c);
    }
    if (degree() >= 0) masks_ = masks_of_degree(base_dim(), degree());
}

std::vector<double> FiberIntegral::operator()(std::span<const double> base_point) const {
    if (static_cast<int>(base_point.size()) != base_dim()) throw std::invalid_argument("base point has the wrong dimension");
    std::vector<double> out(masks_.size(), 0.0);
    if (masks_.empty()) return out;
    Mask fiber_mask = 0;
    for (int c : fiber_.coords) fiber_mask |= Mask{1} << c;
    std::vector<double> point(static_cast<std::size_t>(omega_.dim));
    for (std::size_t b = 0; b < base_coords_.size(); ++b) point[static_cast<std::size_t>(base_coords_[b])] = base_point[b];
    std::vector<double> samples(grid_.size());
    for (const auto& [m, c] : omega_.terms) {
        if ((m & fiber_mask) != fiber_mask) continue;
        const Mask j = m & ~fiber_mask;
        const int sign = wedge_sign(j, fiber_mask);
        Mask base = 0;
        for (std::size_t b = 0; b < base_coords_.size(); ++b) {
            if (j & (Mask{1} << base_coords_[b])) base |= Mask{1} << b;
        }
        for (std::size_t s = 0; s < grid_.size(); ++s) {
            for (std::size_t f = 0; f < fiber_.coords.size(); ++f) {
                point[static_cast<std::size_t>(fiber_.coords[f])] = grid_.points[f][s];
            }
            samples[s] = c.evaluate(point);
        }
        const double integral = integrate_on(grid_, samples);
        const auto slot = std::find(masks_.begin(), masks_.end(), base) - masks_.begin();
        out[static_cast<std::size_t>(slot)] += sign * integral;
    }
    return out;
}

std::vector<MapCheckSample> poisson_map_check(const std::vector<Expression>& phi, const Multivector& pi_p,
                                              const Multivector& pi_m, const std::vector<std::vector<double>>& samples,
                                              double tol) {
    const int p = pi_p.dim();
    const int m = pi_m.dim();
    if (static_cast<int>(phi.size()) != m) throw InputError("map has the wrong number of components");
    std::vector<std::vector<Expression>> jac(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        for (int i = 0; i < p; ++i) jac[static_cast<std::size_t>(a)].push_back(phi[static_cast<std::size_t>(a)].derivative(i));
    }
    std::vector<MapCheckSample> out;
    for (const auto& x : samples) {
        if (static_cast<int>(x.size()) != p) throw InputError("sample point has the wrong dimension");
        std::vector<double> y(static_cast<std::size_t>(m));
        std::vector<double> j(static_cast<std::size_t>(m * p));
        for (int a = 0; a < m; ++a) {
            y[static_cast<std::size_t>(a)] = phi[static_cast<std::size_t>(a)].evaluate(x);
            for (int i = 0; i < p; ++i) {
                j[static_cast<std::size_t>(a * p + i)] = jac[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].evaluate(x);
            }
        }
        MapCheckSample s;
        s.point = x;
        for (Mask target : masks_of_degree(m, 2)) {
            const int a = std::countr_zero(target);
            const int b = 31 - std::countl_zero(target);
            double pushed = 0.0;
            for (const auto& [mask, coeff] : pi_p.terms()) {
                const int i = std::countr_zero(mask);
                const int k = 31 - std::countl_zero(mask);
                const double v = coeff.evaluate(x);
                pushed += v * (j[static_cast<std::size_t>(a * p + i)] * j[static_cast<std::size_t>(b * p + k)] -
                               j[static_cast<std::size_t>(a * p + k)] * j[static_cast<std::size_t>(b * p + i)]);
            }
            const double expected = pi_m.coefficient(target).evaluate(y);
            s.deviation = std::fmax(s.deviation, std::fabs(pushed - expected));
        }
        s.ok = s.deviation <= tol;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace ptk
