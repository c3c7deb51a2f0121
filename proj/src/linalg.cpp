#include "ptk/linalg.hpp"

#include <stdexcept>

namespace ptk {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, Row(cols)); }

Matrix identity_matrix(std::size_t n) {
    Matrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t = zero_matrix(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    if (a[0].size() != inner) throw std::invalid_argument("matrix shapes do not match");
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix c = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

bool is_zero_matrix(const Matrix& a) {
    for (const Row& r : a) {
        for (const Rational& x : r) {
            if (sgn(x) != 0) return false;
        }
    }
    return true;
}

namespace {

using IntRow = std::vector<Integer>;

IntRow clear_denominators(const Row& row, Integer* multiplier = nullptr) {
    Integer l = 1;
    for (const Rational& x : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
    if (multiplier) *multiplier = l;
    return out;
}

// Fraction-free Gauss-Jordan. On return, rows [0, rank) hold the reduced rows, each
// pivot entry equal to the last pivot used (the common denominator).
struct IntegerEchelon {
    std::vector<IntRow> rows;
    std::vector<int> pivots;
    Integer scale = 1;
};

IntegerEchelon bareiss(const Matrix& a, int cols) {
    IntegerEchelon e;
    for (const Row& r : a) {
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
        e.rows.push_back(clear_denominators(r));
    }
    const std::size_t nrows = e.rows.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (sgn(e.rows[i][static_cast<std::size_t>(c)]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == nrows) continue;
        std::swap(e.rows[pivot], e.rows[r]);
        const Integer p = e.rows[r][static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            IntRow& row = e.rows[i];
            const Integer f = row[static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) {
                Integer v = p * row[j] - f * e.rows[r][j];
                mpz_divexact(row[j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        e.pivots.push_back(c);
        prev = p;
        ++r;
    }
    e.rows.resize(r);
    e.scale = prev;
    return e;
}

}  // namespace

Echelon row_reduce(const Matrix& a, int cols) {
    IntegerEchelon ie = bareiss(a, cols);
    Echelon e;
    e.cols = cols;
    e.pivots = ie.pivots;
    for (std::size_t i = 0; i < ie.rows.size(); ++i) {
        Row row(static_cast<std::size_t>(cols));
        const Integer& d = ie.rows[i][static_cast<std::size_t>(ie.pivots[i])];
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = Rational(ie.rows[i][j], d);
            row[j].canonicalize();
        }
        e.rref.push_back(std::move(row));
    }
    return e;
}

int rank(const Matrix& a, int cols) { return static_cast<int>(bareiss(a, cols).pivots.size()); }

Matrix nullspace(const Matrix& a, int cols) {
    const Echelon e = row_reduce(a, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Row v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            v[static_cast<std::size_t>(e.pivots[i])] = -e.rref[i][static_cast<std::size_t>(f)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    std::vector<IntRow> m;
    Integer scale = 1;
    for (const Row& r : a) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
        Integer l;
        m.push_back(clear_denominators(r, &l));
        scale *= l;
    }
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        const auto ku = static_cast<std::size_t>(k);
        for (std::size_t i = ku + 1; i < static_cast<std::size_t>(n); ++i) {
            for (std::size_t j = ku + 1; j < static_cast<std::size_t>(n); ++j) {
                Integer v = m[ku][ku] * m[i][j] - m[i][ku] * m[ku][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][ku] = 0;
        }
        prev = m[ku][ku];
    }
    Rational det(prev, scale);
    det.canonicalize();
    return sign > 0 ? det : Rational(-det);
}

Matrix rowspace_basis(const Matrix& a, int cols) { return row_reduce(a, cols).rref; }

bool same_rowspace(const Matrix& a, const Matrix& b, int cols) {
    return row_reduce(a, cols).rref == row_reduce(b, cols).rref;
}

Matrix intersect_rowspaces(const Matrix& a, const Matrix& b, int cols) {
    const Matrix ra = rowspace_basis(a, cols);
    const Matrix rb = rowspace_basis(b, cols);
    if (ra.empty() || rb.empty()) return {};
    Matrix stacked = ra;
    for (const Row& r : rb) stacked.push_back(r);
    // coefficients (u, v) with u ra + v rb = 0
    const Matrix kernel = nullspace(transpose(stacked), static_cast<int>(stacked.size()));
    Matrix out;
    for (const Row& k : kernel) {
        Row x(static_cast<std::size_t>(cols));
        for (std::size_t i = 0; i < ra.size(); ++i) {
            if (sgn(k[i]) == 0) continue;
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += k[i] * ra[i][j];
        }
        out.push_back(std::move(x));
    }
    return rowspace_basis(out, cols);
}

bool SparseReducer::add(SparseRow row) {
    auto it = row.begin();
    while (it != row.end()) {
        if (sgn(it->second) == 0) {
            it = row.erase(it);
            continue;
        }
        const auto basis = rows_.find(it->first);
        if (basis == rows_.end()) {
            ++it;
            continue;
        }
        const int col = it->first;
        const Rational f = it->second;
        for (const auto& [j, v] : basis->second) row[j] -= f * v;
        row.erase(col);
        it = row.upper_bound(col);
    }
    if (row.empty()) return false;
    const int pivot = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [j, v] : row) v *= inv;
    rows_.emplace(pivot, std::move(row));
    return true;
}

Matrix SparseReducer::nullspace() const {
    Matrix basis;
    for (int f = 0; f < cols_; ++f) {
        if (rows_.count(f)) continue;
        std::map<int, Rational> x;
        x[f] = 1;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            if (it->first > f) continue;
            Rational s = 0;
            for (const auto& [j, v] : it->second) {
                if (j == it->first) continue;
                const auto xv = x.find(j);
                if (xv != x.end()) s += v * xv->second;
            }
            if (sgn(s) != 0) x[it->first] = -s;
        }
        Row v(static_cast<std::size_t>(cols_));
        for (const auto& [j, val] : x) v[static_cast<std::size_t>(j)] = val;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ptk
