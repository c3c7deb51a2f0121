#pragma once

// Homogeneous multivector fields and differential forms on a coordinate chart,
// with polynomial coefficients. Basis elements are bitmasks (see exterior.hpp).

#include "ptk/exterior.hpp"
#include "ptk/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptk {

struct MultivectorTag {
    static constexpr const char* basis_prefix = "D";
};
struct FormTag {
    static constexpr const char* basis_prefix = "d";
};

template <class Tag>
class Graded {
public:
    using TermMap = std::map<Mask, PolyScalar>;

    Graded() = default;
    Graded(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("chart dimension out of range");
    }

    static Graded scalar(int dim, const PolyScalar& f) {
        Graded g(dim, 0);
        g.add(0, f);
        return g;
    }

    static Graded basis(int dim, const std::vector<int>& indices, const PolyScalar& coeff) {
        Graded g(dim, static_cast<int>(indices.size()));
        // sort while tracking the permutation sign
        std::vector<int> idx = indices;
        int sign = 1;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
                std::swap(idx[j - 1], idx[j]);
                sign = -sign;
            }
        }
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return g;
        g.add(mask_of(idx), sign > 0 ? coeff : -coeff);
        return g;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyScalar coefficient(Mask m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? PolyScalar(dim_) : it->second;
    }

    /// Adds c * e_m; m must have the declared degree.
    void add(Mask m, const PolyScalar& c) {
        if (degree_of(m) != degree_) throw std::invalid_argument("basis element of wrong degree");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Graded& operator+=(const Graded& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    Graded operator-() const {
        Graded out(dim_, degree_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend Graded operator*(const PolyScalar& f, const Graded& g) {
        Graded out(g.dim_, g.degree_);
        for (const auto& [m, c] : g.terms_) out.add(m, f * c);
        return out;
    }
    friend Graded operator*(const Rational& r, const Graded& g) { return PolyScalar::constant(g.dim_, r) * g; }
    friend bool operator==(const Graded& a, const Graded& b) {
        if (a.is_zero() && b.is_zero()) return a.dim_ == b.dim_;
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// e.g. "-x*dx - y*dy" or "(x + 1)*Dx^Dz".
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<Mask> order;
        for (const auto& [m, c] : terms_) order.push_back(m);
        std::sort(order.begin(), order.end(), tuple_less);
        std::string out;
        for (Mask m : order) {
            const PolyScalar& c = terms_.at(m);
            std::string basis;
            for (int i : indices_of(m)) {
                if (!basis.empty()) basis += '^';
                basis += Tag::basis_prefix;
                basis += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i);
            }
            std::string coeff = c.to_string(names);
            bool negative = false;
            if (c.terms().size() == 1 && coeff.front() == '-') {
                negative = true;
                coeff.erase(0, 1);
            } else if (c.terms().size() > 1) {
                coeff = "(" + coeff + ")";
            }
            std::string term;
            if (basis.empty()) {
                term = coeff;
            } else if (coeff == "1") {
                term = basis;
            } else {
                term = coeff + "*" + basis;
            }
            if (out.empty()) {
                out = (negative ? "-" : "") + term;
            } else {
                out += (negative ? " - " : " + ") + term;
            }
        }
        return out;
    }

private:
    // a zero object adopts the degree of the other summand
    void check_compatible(const Graded& o) {
        if (o.is_zero()) return;
        if (o.dim_ != dim_) throw std::invalid_argument("objects on different charts");
        if (o.degree_ != degree_) {
            if (!is_zero()) throw std::invalid_argument("adding objects of different degree");
            degree_ = o.degree_;
        }
    }

    int dim_ = 0;
    int degree_ = 0;
    TermMap terms_;
};

using Multivector = Graded<MultivectorTag>;
using DiffForm = Graded<FormTag>;

/// The coordinate volume form dx_1 ^ ... ^ dx_m.
inline DiffForm coordinate_volume(int dim) {
    DiffForm v(dim, dim);
    v.add(full_mask(dim), PolyScalar::constant(dim, Rational(1)));
    return v;
}

/// Formal sum of homogeneous forms, indexed by degree (size dim + 1).
struct MixedForm {
    std::vector<DiffForm> components;
};

}  // namespace ptk
