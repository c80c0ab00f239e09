#pragma once

#include <optional>
#include <vector>

#include "ruled/binary_form.hpp"

namespace ruled {

// Bihomogeneous form of bidegree (m, n) in the point pairs (s,t) and (u,v).
// coeff(i, j) multiplies s^(m-i) t^i u^(n-j) v^j.
template <class K>
class BiForm {
  public:
    BiForm(int m, int n)
        : m_(m), n_(n), c_(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1), K(0)) {}

    [[nodiscard]] int deg_st() const { return m_; }
    [[nodiscard]] int deg_uv() const { return n_; }

    K& coeff(int i, int j) { return c_[idx(i, j)]; }
    [[nodiscard]] const K& coeff(int i, int j) const { return c_[idx(i, j)]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    BiForm operator-() const {
        BiForm r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend BiForm operator+(const BiForm& a, const BiForm& b) {
        require(a.m_ == b.m_ && a.n_ == b.n_, "biform bidegree mismatch in +");
        BiForm r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend BiForm operator-(const BiForm& a, const BiForm& b) { return a + (-b); }
    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        BiForm r(a.m_ + b.m_, a.n_ + b.n_);
        for (int i = 0; i <= a.m_; ++i)
            for (int j = 0; j <= a.n_; ++j) {
                if (a.coeff(i, j).is_zero()) continue;
                for (int k = 0; k <= b.m_; ++k)
                    for (int l = 0; l <= b.n_; ++l)
                        r.coeff(i + k, j + l) += a.coeff(i, j) * b.coeff(k, l);
            }
        return r;
    }
    friend BiForm operator*(const K& k, const BiForm& f) {
        BiForm r = f;
        for (auto& x : r.c_) x = k * x;
        return r;
    }
    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.c_ == b.c_;
    }

    // product of two one-sided forms f(s,t) g(u,v)
    static BiForm split_product(const BinaryForm<K>& f, const BinaryForm<K>& g) {
        BiForm r(f.degree(), g.degree());
        for (int i = 0; i <= f.degree(); ++i)
            for (int j = 0; j <= g.degree(); ++j) r.coeff(i, j) = f.coeff(i) * g.coeff(j);
        return r;
    }

    static BiForm diagonal_form() {  // sv - tu
        BiForm d(1, 1);
        d.coeff(0, 1) = K(1);
        d.coeff(1, 0) = K(-1);
        return d;
    }

    [[nodiscard]] BiForm swapped() const {
        BiForm r(n_, m_);
        for (int i = 0; i <= m_; ++i)
            for (int j = 0; j <= n_; ++j) r.coeff(j, i) = coeff(i, j);
        return r;
    }

    [[nodiscard]] bool symmetric() const { return m_ == n_ && *this == swapped(); }

    [[nodiscard]] K eval(const std::array<K, 2>& p, const std::array<K, 2>& q) const {
        std::vector<K> sp(static_cast<std::size_t>(m_) + 1, K(1)), tp = sp;
        std::vector<K> up(static_cast<std::size_t>(n_) + 1, K(1)), vp = up;
        for (int i = 1; i <= m_; ++i) { sp[i] = sp[i - 1] * p[0]; tp[i] = tp[i - 1] * p[1]; }
        for (int j = 1; j <= n_; ++j) { up[j] = up[j - 1] * q[0]; vp[j] = vp[j - 1] * q[1]; }
        K acc(0);
        for (int i = 0; i <= m_; ++i)
            for (int j = 0; j <= n_; ++j) {
                if (coeff(i, j).is_zero()) continue;
                acc += coeff(i, j) * sp[m_ - i] * tp[i] * up[n_ - j] * vp[j];
            }
        return acc;
    }

    // restriction to the diagonal (u,v) = (s,t)
    [[nodiscard]] BinaryForm<K> restrict_diagonal() const {
        BinaryForm<K> r(m_ + n_);
        for (int i = 0; i <= m_; ++i)
            for (int j = 0; j <= n_; ++j) r.coeff(i + j) += coeff(i, j);
        return r;
    }

    // partial evaluation: fix (s,t) = p, leaving a form in (u,v)
    [[nodiscard]] BinaryForm<K> eval_left(const std::array<K, 2>& p) const {
        std::vector<K> sp(static_cast<std::size_t>(m_) + 1, K(1)), tp = sp;
        for (int i = 1; i <= m_; ++i) { sp[i] = sp[i - 1] * p[0]; tp[i] = tp[i - 1] * p[1]; }
        BinaryForm<K> r(n_);
        for (int j = 0; j <= n_; ++j)
            for (int i = 0; i <= m_; ++i) r.coeff(j) += coeff(i, j) * sp[m_ - i] * tp[i];
        return r;
    }

    // coefficient of u^(n-j) v^j as a form in (s,t)
    [[nodiscard]] BinaryForm<K> uv_coefficient(int j) const {
        BinaryForm<K> r(m_);
        for (int i = 0; i <= m_; ++i) r.coeff(i) = coeff(i, j);
        return r;
    }
    [[nodiscard]] BinaryForm<K> st_coefficient(int i) const {
        BinaryForm<K> r(n_);
        for (int j = 0; j <= n_; ++j) r.coeff(j) = coeff(i, j);
        return r;
    }

    // Exact division by sv - tu.  Solving F = (sv-tu) Q row by row:
    // F[i][j] = Q[i][j-1] - Q[i-1][j], with the unused equations acting as
    // divisibility checks.  Returns nullopt when the division is inexact.
    [[nodiscard]] std::optional<BiForm> divide_diagonal() const {
        if (m_ < 1 || n_ < 1) return std::nullopt;
        BiForm q(m_ - 1, n_ - 1);
        for (int i = 0; i <= m_ - 1; ++i)
            for (int j = 1; j <= n_; ++j) {
                K prev = (i >= 1 && j <= n_ - 1) ? q.coeff(i - 1, j) : K(0);
                q.coeff(i, j - 1) = coeff(i, j) + prev;
            }
        // checks: column j = 0 for all i, and the last row i = m
        for (int i = 0; i <= m_; ++i) {
            K lhs = coeff(i, 0);
            K rhs = (i >= 1) ? -q.coeff(i - 1, 0) : K(0);
            if (lhs != rhs) return std::nullopt;
        }
        for (int j = 1; j <= n_; ++j) {
            K lhs = coeff(m_, j);
            K rhs = (j <= n_ - 1) ? -q.coeff(m_ - 1, j) : K(0);
            if (lhs != rhs) return std::nullopt;
        }
        return q;
    }

    // exact division by (sv - tu)^2; errors if not divisible
    [[nodiscard]] BiForm divide_diagonal_sq() const {
        auto once = divide_diagonal();
        require(once.has_value(), "biform not divisible by the diagonal");
        auto twice = once->divide_diagonal();
        require(twice.has_value(), "biform not divisible by the diagonal squared");
        return *twice;
    }

  private:
    [[nodiscard]] std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j);
    }

    int m_, n_;
    std::vector<K> c_;
};

template <class K>
bool proportional(const BiForm<K>& a, const BiForm<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.deg_st() != b.deg_st() || a.deg_uv() != b.deg_uv()) return false;
    int pi = -1, pj = -1;
    for (int i = 0; i <= a.deg_st() && pi < 0; ++i)
        for (int j = 0; j <= a.deg_uv(); ++j)
            if (!a.coeff(i, j).is_zero()) { pi = i; pj = j; break; }
    if (b.coeff(pi, pj).is_zero()) return false;
    for (int i = 0; i <= a.deg_st(); ++i)
        for (int j = 0; j <= a.deg_uv(); ++j)
            if (a.coeff(i, j) * b.coeff(pi, pj) != b.coeff(i, j) * a.coeff(pi, pj)) return false;
    return true;
}

}  // namespace ruled
