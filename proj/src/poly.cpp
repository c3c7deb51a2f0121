#include "ptk/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptk {

PolyScalar PolyScalar::constant(int nvars, const Rational& c) {
    PolyScalar p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

PolyScalar PolyScalar::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

PolyScalar PolyScalar::monomial(int nvars, Exponents exponents, const Rational& c) {
    if (exponents.size() != static_cast<std::size_t>(nvars)) throw std::invalid_argument("exponent length mismatch");
    PolyScalar p(nvars);
    p.add_term(exponents, c);
    return p;
}

bool PolyScalar::is_constant() const {
    for (const auto& [e, c] : terms_) {
        if (std::any_of(e.begin(), e.end(), [](auto k) { return k != 0; })) return false;
    }
    return true;
}

Rational PolyScalar::constant_term() const {
    const auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int PolyScalar::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

void PolyScalar::add_term(const Exponents& exponents, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void PolyScalar::promote(int nvars) {
    if (nvars == nvars_) return;
    if (nvars < nvars_ || !is_constant()) throw std::invalid_argument("polynomials over different charts");
    const Rational c = constant_term();
    terms_.clear();
    nvars_ = nvars;
    add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& other) {
    if (other.nvars_ > nvars_) promote(other.nvars_);
    if (other.nvars_ < nvars_) {
        if (!other.is_constant()) throw std::invalid_argument("polynomials over different charts");
        add_term(Exponents(static_cast<std::size_t>(nvars_), 0), other.constant_term());
        return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& other) { return *this += -other; }

PolyScalar& PolyScalar::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    if (a.nvars_ != b.nvars_) {
        if (a.is_constant() && a.nvars_ < b.nvars_) return b * a.constant_term();
        if (b.is_constant() && b.nvars_ < a.nvars_) return a * b.constant_term();
        throw std::invalid_argument("polynomials over different charts");
    }
    PolyScalar out(a.nvars_);
    PolyScalar::Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool operator==(const PolyScalar& a, const PolyScalar& b) {
    if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
}

PolyScalar PolyScalar::derivative(int var) const {
    PolyScalar out(nvars_);
    for (const auto& [e, c] : terms_) {
        const auto k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k - 1);
        out.add_term(d, c * k);
    }
    return out;
}

PolyScalar PolyScalar::pow(unsigned exponent) const {
    PolyScalar result = constant(nvars_, Rational(1));
    PolyScalar base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

double PolyScalar::evaluate(std::span<const double> point) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Rational PolyScalar::evaluate(std::span<const Rational> point) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

namespace {

std::string monomial_text(const PolyScalar::Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string PolyScalar::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const std::string mono = monomial_text(e, names);
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << ptk::to_string(mag);
        } else if (mag == 1) {
            os << mono;
        } else {
            os << ptk::to_string(mag) << '*' << mono;
        }
    }
    return os.str();
}

std::vector<PolyScalar::Exponents> monomials_up_to(int nvars, int bound) {
    std::vector<PolyScalar::Exponents> out;
    PolyScalar::Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int degree = 0; degree <= bound; ++degree) {
        // enumerate compositions of `degree` into nvars parts, lexicographically descending
        auto rec = [&](auto&& self, int slot, int remaining) -> void {
            if (slot == nvars - 1) {
                e[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(remaining);
                out.push_back(e);
                return;
            }
            for (int k = remaining; k >= 0; --k) {
                e[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(k);
                self(self, slot + 1, remaining - k);
            }
        };
        if (nvars == 0) {
            if (degree == 0) out.push_back(e);
            continue;
        }
        rec(rec, 0, degree);
    }
    return out;
}

CompiledPoly::CompiledPoly(const PolyScalar& p) : nvars(p.nvars()) {
    for (const auto& [e, c] : p.terms()) {
        coefficients.push_back(c.get_d());
        exponents.insert(exponents.end(), e.begin(), e.end());
    }
}

}  // namespace ptk
