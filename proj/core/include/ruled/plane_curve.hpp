#pragma once

#include <optional>
#include <vector>

#include "ruled/biform.hpp"

namespace ruled {

// Plane curve of degree k in the pair space P(S_2) with coordinates
// (e0, e1, e2).  Dense coefficients in graded-lex order: e0 exponent
// descending, then e1 exponent descending.  A pair of parameters {(s:t),(u:v)}
// sits at (e0, e1, e2) = (su, sv+tu, tv); the diagonal is the conic
// C0 = e1^2 - 4 e0 e2.
template <class K>
class PlaneCurve {
  public:
    explicit PlaneCurve(int degree = 0)
        : k_(degree), c_(monomial_count(degree), K(0)) {}

    static std::size_t monomial_count(int k) {
        return static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
    }

    // position of e0^a e1^b e2^(k-a-b) in the graded-lex enumeration
    [[nodiscard]] std::size_t index(int a, int b) const {
        const int r = k_ - a;  // monomials with larger e0 exponent come first
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(r + 1) / 2 +
               static_cast<std::size_t>(r - b);
    }

    [[nodiscard]] int degree() const { return k_; }
    [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }
    K& coeff(int a, int b) { return c_[index(a, b)]; }
    [[nodiscard]] const K& coeff(int a, int b) const { return c_[index(a, b)]; }
    K& coeff_at(std::size_t i) { return c_[i]; }
    [[nodiscard]] const K& coeff_at(std::size_t i) const { return c_[i]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    PlaneCurve operator-() const {
        PlaneCurve r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend PlaneCurve operator+(const PlaneCurve& a, const PlaneCurve& b) {
        require(a.k_ == b.k_, "curve degree mismatch in +");
        PlaneCurve r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend PlaneCurve operator-(const PlaneCurve& a, const PlaneCurve& b) { return a + (-b); }
    friend PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b) {
        PlaneCurve r(a.k_ + b.k_);
        for (int a0 = 0; a0 <= a.k_; ++a0)
            for (int a1 = 0; a0 + a1 <= a.k_; ++a1) {
                if (a.coeff(a0, a1).is_zero()) continue;
                for (int b0 = 0; b0 <= b.k_; ++b0)
                    for (int b1 = 0; b0 + b1 <= b.k_; ++b1) {
                        if (b.coeff(b0, b1).is_zero()) continue;
                        r.coeff(a0 + b0, a1 + b1) += a.coeff(a0, a1) * b.coeff(b0, b1);
                    }
            }
        return r;
    }
    friend PlaneCurve operator*(const K& k, const PlaneCurve& f) {
        PlaneCurve r = f;
        for (auto& x : r.c_) x = k * x;
        return r;
    }
    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }

    [[nodiscard]] K eval(const K& e0, const K& e1, const K& e2) const {
        std::vector<K> p0(static_cast<std::size_t>(k_) + 1, K(1)), p1 = p0, p2 = p0;
        for (int i = 1; i <= k_; ++i) {
            p0[i] = p0[i - 1] * e0;
            p1[i] = p1[i - 1] * e1;
            p2[i] = p2[i - 1] * e2;
        }
        K acc(0);
        for (int a = 0; a <= k_; ++a)
            for (int b = 0; a + b <= k_; ++b) {
                if (coeff(a, b).is_zero()) continue;
                acc += coeff(a, b) * p0[a] * p1[b] * p2[k_ - a - b];
            }
        return acc;
    }

    // value at the image of the parameter pair {p, q}
    [[nodiscard]] K eval_at_pair(const std::array<K, 2>& p, const std::array<K, 2>& q) const {
        return eval(p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]);
    }

    // substitution e0 = su, e1 = sv + tu, e2 = tv; lands in symmetric
    // biforms of bidegree (k, k)
    [[nodiscard]] BiForm<K> lift() const {
        BiForm<K> e0(1, 1), e1(1, 1), e2(1, 1);
        e0.coeff(0, 0) = K(1);                        // su
        e1.coeff(0, 1) = K(1); e1.coeff(1, 0) = K(1); // sv + tu
        e2.coeff(1, 1) = K(1);                        // tv
        std::vector<BiForm<K>> pow0, pow1, pow2;
        auto powers = [&](const BiForm<K>& base) {
            std::vector<BiForm<K>> pw;
            BiForm<K> one(0, 0);
            one.coeff(0, 0) = K(1);
            pw.push_back(one);
            for (int i = 1; i <= k_; ++i) pw.push_back(pw.back() * base);
            return pw;
        };
        pow0 = powers(e0); pow1 = powers(e1); pow2 = powers(e2);
        BiForm<K> acc(k_, k_);
        for (int a = 0; a <= k_; ++a)
            for (int b = 0; a + b <= k_; ++b) {
                if (coeff(a, b).is_zero()) continue;
                acc = acc + coeff(a, b) * (pow0[a] * pow1[b] * pow2[k_ - a - b]);
            }
        return acc;
    }

    // restriction to the conic C0 via (e0, e1, e2) = (p0^2, 2 p0 p1, p1^2)
    [[nodiscard]] BinaryForm<K> restrict_to_conic() const {
        BinaryForm<K> r(2 * k_);
        for (int a = 0; a <= k_; ++a)
            for (int b = 0; a + b <= k_; ++b) {
                if (coeff(a, b).is_zero()) continue;
                K two_b(1);
                for (int i = 0; i < b; ++i) two_b = K(2) * two_b;
                // p0^(2a+b) p1^(b+2c): exponent of p1 indexes the coefficient
                r.coeff(b + 2 * (k_ - a - b)) += coeff(a, b) * two_b;
            }
        return r;
    }

  private:
    int k_;
    std::vector<K> c_;
};

template <class K>
bool proportional(const PlaneCurve<K>& a, const PlaneCurve<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    std::size_t p = 0;
    while (a.coeff_at(p).is_zero()) ++p;
    if (b.coeff_at(p).is_zero()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeff_at(i) * b.coeff_at(p) != b.coeff_at(i) * a.coeff_at(p)) return false;
    return true;
}

// scalar c with a = c * b, when both are nonzero and proportional
template <class K>
std::optional<K> proportionality_scalar(const PlaneCurve<K>& a, const PlaneCurve<K>& b) {
    if (!proportional(a, b) || a.is_zero()) return std::nullopt;
    std::size_t p = 0;
    while (b.coeff_at(p).is_zero()) ++p;
    return a.coeff_at(p) / b.coeff_at(p);
}

template <class K>
PlaneCurve<K> veronese_conic() {
    PlaneCurve<K> c(2);
    c.coeff(0, 2) = K(1);
    c.coeff(1, 0) = K(-4);
    return c;
}

// tangent line of C0 at the image of p = (alpha:beta):
// alpha^2 e2 - alpha beta e1 + beta^2 e0
template <class K>
PlaneCurve<K> tangent_line(const std::array<K, 2>& p) {
    require(!(p[0].is_zero() && p[1].is_zero()), "tangent line at an undefined point");
    PlaneCurve<K> l(1);
    l.coeff(1, 0) = p[1] * p[1];
    l.coeff(0, 1) = -p[0] * p[1];
    l.coeff(0, 0) = p[0] * p[0];
    return l;
}

// The inverse of lift(): the unique G of degree k with
// G(su, sv+tu, tv) = F, computed by an explicit linear solve.  Rejects
// non-symmetric input.
template <class K>
PlaneCurve<K> descend_biform(const BiForm<K>& f) {
    require(f.deg_st() == f.deg_uv(), "descend of a non-balanced biform");
    require(f.symmetric(), "descend of a non-symmetric biform");
    const int k = f.deg_st();
    // the substitution matrix has integer entries; tie them to the scalar
    // field of f so prime-field elimination sees bound residues
    K unit = [&] {
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                if (!f.coeff(i, j).is_zero()) return f.coeff(i, j) / f.coeff(i, j);
        return K(1);
    }();
    const std::size_t ncols = PlaneCurve<K>::monomial_count(k);
    const std::size_t nrows = static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 1);
    Matrix<K> m(nrows, ncols);
    std::size_t col = 0;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b, ++col) {
            PlaneCurve<K> mono(k);
            mono.coeff(a, b) = K(1);
            BiForm<K> lifted = mono.lift();
            std::size_t row = 0;
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j, ++row) m(row, col) = unit * lifted.coeff(i, j);
        }
    std::vector<K> rhs;
    rhs.reserve(nrows);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) rhs.push_back(f.coeff(i, j));
    auto sol = m.solve(rhs);
    require(sol.has_value(), "descend: symmetric biform outside the substitution image");
    PlaneCurve<K> g(k);
    col = 0;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b, ++col) g.coeff(a, b) = (*sol)[col];
    return g;
}

// substitution e_i -> sum_j M[i][j] e_j for a 3x3 matrix M
template <class K>
PlaneCurve<K> compose_linear(const PlaneCurve<K>& g, const std::array<std::array<K, 3>, 3>& m) {
    const int k = g.degree();
    PlaneCurve<K> lin[3] = {PlaneCurve<K>(1), PlaneCurve<K>(1), PlaneCurve<K>(1)};
    for (int i = 0; i < 3; ++i) {
        lin[i].coeff(1, 0) = m[i][0];
        lin[i].coeff(0, 1) = m[i][1];
        lin[i].coeff(0, 0) = m[i][2];
    }
    auto powers = [&](const PlaneCurve<K>& base) {
        std::vector<PlaneCurve<K>> pw;
        PlaneCurve<K> one(0);
        one.coeff(0, 0) = K(1);
        pw.push_back(one);
        for (int i = 1; i <= k; ++i) pw.push_back(pw.back() * base);
        return pw;
    };
    auto p0 = powers(lin[0]), p1 = powers(lin[1]), p2 = powers(lin[2]);
    PlaneCurve<K> acc(k);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) {
            if (g.coeff(a, b).is_zero()) continue;
            acc = acc + g.coeff(a, b) * (p0[a] * p1[b] * p2[k - a - b]);
        }
    return acc;
}

// the 3x3 matrix by which pair-space coordinates transform under the
// parameter substitution (s,t) -> (a s + b t, c s + d t)
template <class K>
std::array<std::array<K, 3>, 3> pair_space_action(const std::array<std::array<K, 2>, 2>& h) {
    const K &a = h[0][0], &b = h[0][1], &c = h[1][0], &d = h[1][1];
    return {{{a * a, a * b, b * b},
             {K(2) * a * c, a * d + b * c, K(2) * b * d},
             {c * c, c * d, d * d}}};
}

// Division with remainder by C0 = e1^2 - 4 e0 e2, treating the curve as a
// polynomial in e1.  Returns (quotient, remainder) with deg_{e1}(rem) <= 1.
template <class K>
std::pair<PlaneCurve<K>, PlaneCurve<K>> conic_divmod(const PlaneCurve<K>& g) {
    const int k = g.degree();
    // layers[b] = coefficient of e1^b as arrays over (a = e0 exponent)
    std::vector<std::vector<K>> layer(static_cast<std::size_t>(k) + 1);
    for (int b = 0; b <= k; ++b) {
        layer[b].assign(static_cast<std::size_t>(k - b) + 1, K(0));
        for (int a = 0; a + b <= k; ++a) layer[b][a] = g.coeff(a, b);
    }
    std::vector<std::vector<K>> qlayer(k >= 2 ? static_cast<std::size_t>(k - 1) : 0);
    for (int b = 0; b + 2 <= k; ++b) qlayer[b].assign(static_cast<std::size_t>(k - 2 - b) + 1, K(0));
    for (int b = k; b >= 2; --b) {
        for (int a = 0; a + b <= k; ++a) {
            K c = layer[b][a];
            if (c.is_zero()) continue;
            qlayer[b - 2][a] = qlayer[b - 2][a] + c;
            // e1^2 -> 4 e0 e2 + C0: push 4 e0 e2 down
            layer[b - 2][a + 1] += K(4) * c;
            layer[b][a] = K(0);
        }
    }
    PlaneCurve<K> q(k >= 2 ? k - 2 : 0), r(k);
    for (int b = 0; b + 2 <= k; ++b)
        for (int a = 0; a + b <= k - 2; ++a) q.coeff(a, b) = qlayer[b][a];
    for (int b = 0; b <= std::min(k, 1); ++b)
        for (int a = 0; a + b <= k; ++a) r.coeff(a, b) = layer[b][a];
    return {q, r};
}

// whether C0 divides g; quotient returned when it does
template <class K>
std::optional<PlaneCurve<K>> divide_by_conic(const PlaneCurve<K>& g) {
    if (g.degree() < 2) return std::nullopt;
    auto [q, r] = conic_divmod(g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace ruled
