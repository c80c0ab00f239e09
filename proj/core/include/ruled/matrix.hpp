#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ruled/field.hpp"

namespace ruled {

// Dense matrix over an exact field.  Pivot selection everywhere is "first
// nonzero in row-major order", so every elimination result is deterministic.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        require(cols_ == o.rows_, "matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    // Rank by fraction-free (Bareiss) elimination for rationals, plain
    // elimination for prime fields.
    [[nodiscard]] std::size_t rank() const {
        if constexpr (is_rational_field_v<K>) {
            return bareiss_rank(*this);
        } else {
            Matrix m = *this;
            std::size_t rank = 0;
            for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
                std::size_t piv = rank;
                while (piv < m.rows_ && m(piv, col).is_zero()) ++piv;
                if (piv == m.rows_) continue;
                m.swap_rows(rank, piv);
                for (std::size_t i = rank + 1; i < m.rows_; ++i) {
                    if (m(i, col).is_zero()) continue;
                    K f = m(i, col) / m(rank, col);
                    for (std::size_t j = col; j < m.cols_; ++j)
                        m(i, j) -= f * m(rank, j);
                }
                ++rank;
            }
            return rank;
        }
    }

    // Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            swap_rows(row, piv);
            K inv = (*this)(row, col).inv();
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                K f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    // Right null space basis read off the RREF: one vector per free column,
    // with a 1 in the free coordinate.  Deterministic and itself in echelon
    // form up to column order.
    [[nodiscard]] std::vector<std::vector<K>> kernel() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, K(0));
            v[f] = K(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Particular solution of A x = b, or nullopt when inconsistent.
    [[nodiscard]] std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        require(b.size() == rows_, "solve: rhs size mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, K(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
        return x;
    }

    [[nodiscard]] K det() const {
        require(rows_ == cols_, "det of non-square matrix");
        Matrix m = *this;
        K d(1);
        for (std::size_t col = 0; col < m.cols_; ++col) {
            std::size_t piv = col;
            while (piv < m.rows_ && m(piv, col).is_zero()) ++piv;
            if (piv == m.rows_) return K(0);
            if (piv != col) {
                m.swap_rows(col, piv);
                d = -d;
            }
            d *= m(col, col);
            K inv = m(col, col).inv();
            for (std::size_t i = col + 1; i < m.rows_; ++i) {
                if (m(i, col).is_zero()) continue;
                K f = m(i, col) * inv;
                for (std::size_t j = col; j < m.cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    static std::size_t bareiss_rank(const Matrix& in) {
        // Scale each row to integers first, then eliminate with exact
        // divisions by the previous pivot.  All intermediates stay integral.
        Matrix m = in;
        for (std::size_t i = 0; i < m.rows_; ++i) {
            mpz_class l(1);
            for (std::size_t j = 0; j < m.cols_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
            if (l != 1) {
                Rational f{mpz_class(l)};
                for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) *= f;
            }
        }
        K prev(1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
            std::size_t piv = rank;
            while (piv < m.rows_ && m(piv, col).is_zero()) ++piv;
            if (piv == m.rows_) continue;
            m.swap_rows(rank, piv);
            for (std::size_t i = rank + 1; i < m.rows_; ++i) {
                for (std::size_t j = col + 1; j < m.cols_; ++j)
                    m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
                m(i, col) = K(0);
            }
            prev = m(rank, col);
            ++rank;
        }
        return rank;
    }

    std::size_t rows_, cols_;
    std::vector<K> a_;
};

// Determinant over a commutative ring (no divisions): direct cofactor
// expansion through n = 4, column-subset dynamic programming beyond.  Used
// for matrices of polynomial forms.
template <class Ring>
Ring ring_det(const std::vector<std::vector<Ring>>& m, const Ring& zero) {
    const std::size_t n = m.size();
    require(n > 0, "ring_det of empty matrix");
    for (const auto& row : m) require(row.size() == n, "ring_det of non-square matrix");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n <= 4) {
        // expand along the first row; accumulate lazily so graded rings never
        // mix the placeholder zero into a sum of higher degree
        std::optional<Ring> acc;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Ring>> minor;
            minor.reserve(n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<Ring> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[i][c]);
                minor.push_back(std::move(row));
            }
            Ring term = m[0][j] * ring_det(minor, zero);
            if (j % 2 != 0) term = -term;
            if (acc) acc = *acc + term;
            else acc = std::move(term);
        }
        return acc ? *acc : zero;
    }
    // dp[S] = signed minor over the first popcount(S) rows and column set S,
    // seeded with the first row to avoid needing a ring unit
    std::vector<Ring> dp(std::size_t(1) << n, zero);
    std::vector<bool> live(std::size_t(1) << n, false);
    for (std::size_t j = 0; j < n; ++j) {
        dp[std::size_t(1) << j] = m[0][j];
        live[std::size_t(1) << j] = true;
    }
    for (std::size_t s = 0; s < dp.size(); ++s) {
        if (!live[s]) continue;
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bit = std::size_t(1) << j;
            if (s & bit) continue;
            // parity of columns already used above j
            const int above = __builtin_popcountll(s >> (j + 1));
            Ring term = dp[s] * m[row][j];
            if (above % 2 != 0) term = -term;
            auto& slot = dp[s | bit];
            slot = live[s | bit] ? slot + term : std::move(term);
            live[s | bit] = true;
        }
    }
    return dp[dp.size() - 1];
}

}  // namespace ruled
