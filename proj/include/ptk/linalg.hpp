#pragma once

// Exact linear algebra over the rationals.
//
// Dense routines clear denominators row by row and run fraction-free
// (Bareiss) Gauss-Jordan elimination over the integers. SparseReducer keeps an
// incrementally reduced row basis for large, very sparse systems.

#include "ptk/rational.hpp"

#include <map>
#include <vector>

namespace ptk {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& a);

struct Echelon {
    Matrix rref;               // nonzero rows only, pivots normalized to 1
    std::vector<int> pivots;   // pivot column of each row
    int cols = 0;
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form; `cols` is needed when a has no rows.
Echelon row_reduce(const Matrix& a, int cols);
int rank(const Matrix& a, int cols);
/// Rows form a basis of {x : a x = 0}.
Matrix nullspace(const Matrix& a, int cols);
Rational determinant(const Matrix& a);
/// Basis of the intersection of two row spaces.
Matrix intersect_rowspaces(const Matrix& a, const Matrix& b, int cols);
/// Basis rows of the row space (RREF).
Matrix rowspace_basis(const Matrix& a, int cols);
/// True when the row spaces coincide.
bool same_rowspace(const Matrix& a, const Matrix& b, int cols);

/// Incremental reduced row basis for sparse rows.
class SparseReducer {
public:
    using SparseRow = std::map<int, Rational>;

    explicit SparseReducer(int cols) : cols_(cols) {}

    /// Reduces `row` against the basis; returns true if it was independent (and adds it).
    bool add(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    /// Basis of {x : r . x = 0 for all added rows r}, dense.
    Matrix nullspace() const;

private:
    int cols_;
    std::map<int, SparseRow> rows_;  // pivot column -> row with pivot 1, fully reduced
};

}  // namespace ptk
