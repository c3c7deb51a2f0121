#include "ptk/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ptk;

namespace {

Rational leibniz(const Matrix& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Rational term = (inversions % 2) ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 0) {
    std::uniform_int_distribution<int> num(-4 - zero_bias, 4 + zero_bias);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m = zero_matrix(rows, cols);
    for (auto& row : m)
        for (auto& x : row) {
            const int p = num(rng);
            if (std::abs(p) > 4) {
                x = 0;
            } else {
                x = Rational(p, den(rng));
                x.canonicalize();
            }
        }
    return m;
}

}  // namespace

TEST_CASE("Bareiss determinant matches the permutation expansion") {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int t = 0; t < 5; ++t) {
            const Matrix a = random_matrix(n, n, rng, t);
            CHECK(determinant(a) == leibniz(a));
        }
    }
    Matrix singular = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(determinant(singular) == 0);
}

TEST_CASE("nullspace and rank") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
        const std::size_t rows = 2 + t % 4, cols = 3 + t % 5;
        Matrix a = random_matrix(rows, cols, rng, 3);
        if (rows > 2) a[rows - 1] = a[0];
        const Matrix ns = nullspace(a, static_cast<int>(cols));
        CHECK(rank(a, static_cast<int>(cols)) + static_cast<int>(ns.size()) == static_cast<int>(cols));
        if (!ns.empty()) CHECK(is_zero_matrix(multiply(a, transpose(ns))));
        CHECK(rank(ns, static_cast<int>(cols)) == static_cast<int>(ns.size()));

        SparseReducer sparse(static_cast<int>(cols));
        for (const auto& row : a) {
            SparseReducer::SparseRow s;
            for (std::size_t c = 0; c < cols; ++c)
                if (sgn(row[c]) != 0) s[static_cast<int>(c)] = row[c];
            sparse.add(s);
        }
        CHECK(sparse.rank() == rank(a, static_cast<int>(cols)));
        CHECK(same_rowspace(sparse.nullspace(), ns, static_cast<int>(cols)));
    }
}

TEST_CASE("row space intersection") {
    const Matrix a = {{1, 0, 0}, {0, 1, 0}};
    const Matrix b = {{0, 1, 0}, {0, 0, 1}};
    const Matrix c = intersect_rowspaces(a, b, 3);
    REQUIRE(c.size() == 1);
    CHECK(same_rowspace(c, {{0, 1, 0}}, 3));
    const Echelon e = row_reduce({{2, 4}, {1, 2}}, 2);
    CHECK(e.rank() == 1);
    CHECK(e.rref[0][1] == 2);
}
