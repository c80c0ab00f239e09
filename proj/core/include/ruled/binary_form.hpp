#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ruled/matrix.hpp"

namespace ruled {

// Homogeneous binary form of fixed degree n; coeff(i) multiplies s^(n-i) t^i.
// Plain monomial coefficients, no binomial weights.  The zero form of each
// degree is representable (all coefficients zero).
template <class K>
class BinaryForm {
  public:
    explicit BinaryForm(int degree = 0) : c_(static_cast<std::size_t>(degree) + 1, K(0)) {}
    explicit BinaryForm(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        require(!c_.empty(), "binary form needs at least one coefficient");
    }

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const K& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    K& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool is_constant_times_one() const {
        return degree() == 0 && !c_[0].is_zero();
    }

    BinaryForm operator-() const {
        BinaryForm r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        require(a.degree() == b.degree(), "binary form degree mismatch in +");
        BinaryForm r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree() + b.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; j <= b.degree(); ++j)
                r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
        return r;
    }
    friend BinaryForm operator*(const K& k, const BinaryForm& f) {
        BinaryForm r = f;
        for (auto& x : r.c_) x = k * x;
        return r;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

    [[nodiscard]] K eval(const K& s0, const K& t0) const {
        K acc(0);
        K tp(1);
        std::vector<K> spow(c_.size(), K(1));
        for (std::size_t i = 1; i < c_.size(); ++i) spow[i] = spow[i - 1] * s0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            acc += c_[i] * spow[c_.size() - 1 - i] * tp;
            tp = tp * t0;
        }
        return acc;
    }

    [[nodiscard]] K eval_point(const std::array<K, 2>& p) const { return eval(p[0], p[1]); }

    [[nodiscard]] BinaryForm derivative_s() const {
        require(degree() >= 1, "derivative of a constant form");
        BinaryForm r(degree() - 1);
        for (int i = 0; i < degree(); ++i) r.coeff(i) = K(degree() - i) * c_[static_cast<std::size_t>(i)];
        return r;
    }
    [[nodiscard]] BinaryForm derivative_t() const {
        require(degree() >= 1, "derivative of a constant form");
        BinaryForm r(degree() - 1);
        for (int i = 1; i <= degree(); ++i) r.coeff(i - 1) = K(i) * c_[static_cast<std::size_t>(i)];
        return r;
    }

    // order of vanishing at (1:0), i.e. the power of t dividing the form
    [[nodiscard]] int t_order() const {
        for (int i = 0; i <= degree(); ++i)
            if (!coeff(i).is_zero()) return i;
        return degree() + 1;  // zero form
    }
    // order of vanishing at (0:1) = power of s
    [[nodiscard]] int s_order() const {
        for (int i = degree(); i >= 0; --i)
            if (!coeff(i).is_zero()) return degree() - i;
        return degree() + 1;
    }

    [[nodiscard]] BinaryForm monic() const {
        require(!is_zero(), "monic normalization of the zero form");
        K lead = coeff(t_order());
        return lead.inv() * *this;
    }

  private:
    std::vector<K> c_;
};

template <class K>
bool proportional(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    int k = a.t_order();
    if (b.t_order() != k) return false;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) * b.coeff(k) != b.coeff(i) * a.coeff(k)) return false;
    return true;
}

// Exact quotient a / b, or nullopt when b does not divide a.
template <class K>
std::optional<BinaryForm<K>> divide_exact(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    require(!b.is_zero(), "division by the zero form");
    if (a.is_zero()) {
        if (a.degree() < b.degree()) return std::nullopt;
        return BinaryForm<K>(a.degree() - b.degree());
    }
    if (a.degree() < b.degree()) return std::nullopt;
    const int ta = a.t_order(), tb = b.t_order();
    const int sa = a.s_order(), sb = b.s_order();
    if (ta < tb || sa < sb) return std::nullopt;
    // strip t^ta s^sa and divide the cores as univariate polynomials in t
    const int na = a.degree() - ta - sa, nb = b.degree() - tb - sb;
    if (na < nb) return std::nullopt;
    std::vector<K> p(static_cast<std::size_t>(na) + 1), q(static_cast<std::size_t>(nb) + 1);
    for (int i = 0; i <= na; ++i) p[static_cast<std::size_t>(i)] = a.coeff(ta + i);
    for (int i = 0; i <= nb; ++i) q[static_cast<std::size_t>(i)] = b.coeff(tb + i);
    std::vector<K> quot(static_cast<std::size_t>(na - nb) + 1, K(0));
    K lead_inv = q[static_cast<std::size_t>(nb)].inv();
    for (int d = na - nb; d >= 0; --d) {
        K f = p[static_cast<std::size_t>(d + nb)] * lead_inv;
        quot[static_cast<std::size_t>(d)] = f;
        if (f.is_zero()) continue;
        for (int i = 0; i <= nb; ++i) p[static_cast<std::size_t>(d + i)] -= f * q[static_cast<std::size_t>(i)];
    }
    for (const auto& x : p)
        if (!x.is_zero()) return std::nullopt;
    BinaryForm<K> result(a.degree() - b.degree());
    for (int i = 0; i <= na - nb; ++i) result.coeff((ta - tb) + i) = quot[static_cast<std::size_t>(i)];
    return result;
}

// Monic gcd.  Factors of s and t are split off first; the cores are reduced
// by the Euclidean algorithm on their dehomogenizations.
template <class K>
BinaryForm<K> poly_gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    if (a.is_zero() && b.is_zero()) return BinaryForm<K>(0);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int ta = a.t_order(), tb = b.t_order();
    const int sa = a.s_order(), sb = b.s_order();
    auto core = [](const BinaryForm<K>& f, int t0, int s0) {
        std::vector<K> u(static_cast<std::size_t>(f.degree() - t0 - s0) + 1);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = f.coeff(t0 + static_cast<int>(i));
        return u;  // univariate in x = t/s, nonzero ends
    };
    std::vector<K> p = core(a, ta, sa), q = core(b, tb, sb);
    auto deg = [](const std::vector<K>& u) {
        for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
            if (!u[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    };
    while (deg(q) >= 0) {
        // p mod q
        int dp = deg(p), dq = deg(q);
        if (dp < dq) { std::swap(p, q); continue; }
        K lead_inv = q[static_cast<std::size_t>(dq)].inv();
        for (int d = dp - dq; d >= 0; --d) {
            int top = d + dq;
            if (p[static_cast<std::size_t>(top)].is_zero()) continue;
            K f = p[static_cast<std::size_t>(top)] * lead_inv;
            for (int i = 0; i <= dq; ++i) p[static_cast<std::size_t>(d + i)] -= f * q[static_cast<std::size_t>(i)];
        }
        std::swap(p, q);
    }
    int dg = deg(p);
    require(dg >= 0, "gcd internal: both cores vanished");
    const int st = std::min(ta, tb), ss = std::min(sa, sb);
    BinaryForm<K> g(dg + st + ss);
    for (int i = 0; i <= dg; ++i) g.coeff(st + i) = p[static_cast<std::size_t>(i)];
    return g.monic();
}

template <class K>
BinaryForm<K> gcd_many(const std::vector<BinaryForm<K>>& fs) {
    require(!fs.empty(), "gcd of empty list");
    BinaryForm<K> g = fs[0].is_zero() ? BinaryForm<K>(0) : fs[0].monic();
    bool any = !fs[0].is_zero();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (fs[i].is_zero()) continue;
        g = any ? poly_gcd(g, fs[i]) : fs[i].monic();
        any = true;
        if (g.degree() == 0) break;
    }
    require(any, "gcd of all-zero list");
    return g;
}

// Sylvester resultant of two scalar-coefficient forms.
template <class K>
K resultant(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    const int n = f.degree(), m = g.degree();
    require(n >= 1 && m >= 1, "resultant needs positive degrees");
    Matrix<K> syl(static_cast<std::size_t>(n + m), static_cast<std::size_t>(n + m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = f.coeff(i);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl(static_cast<std::size_t>(m + r), static_cast<std::size_t>(r + i)) = g.coeff(i);
    return syl.det();
}

template <class K>
bool squarefree(const BinaryForm<K>& f) {
    require(!f.is_zero(), "squarefree test of the zero form");
    if (f.degree() == 0) return true;
    if (f.degree() == 1) return true;
    return poly_gcd(f, f.derivative_s()).degree() == 0 &&
           poly_gcd(f, f.derivative_t()).degree() == 0;
}

template <class K>
BinaryForm<K> squarefree_part(const BinaryForm<K>& f) {
    require(!f.is_zero(), "squarefree part of the zero form");
    if (f.degree() == 0) return f.monic();
    BinaryForm<K> g = poly_gcd(poly_gcd(f, f.derivative_s()), f.derivative_t());
    auto q = divide_exact(f, g);
    require(q.has_value(), "squarefree part: gcd does not divide");
    return q->monic();
}

template <class Field>
BinaryForm<typename Field::Element> random_form(int degree, const Field& field, std::mt19937_64& rng) {
    BinaryForm<typename Field::Element> f(degree);
    for (int i = 0; i <= degree; ++i) f.coeff(i) = field.random(rng);
    return f;
}

// Contraction S_{m+k} x S_k -> S_m,
//   d_h(a) = sum_j (-1)^j h_{k-j} d^k a / (ds^{k-j} dt^j),
// the classical transvectant pairing with normalization constant 1.  The
// complementary index pairing is what makes this equivariant under coordinate
// changes; results are compared up to scalar across module boundaries.
template <class K>
BinaryForm<K> apolar_contract(const BinaryForm<K>& a, const BinaryForm<K>& h) {
    const int k = h.degree();
    require(a.degree() >= k, "contraction needs deg(a) >= deg(h)");
    BinaryForm<K> acc(a.degree() - k);
    for (int j = 0; j <= k; ++j) {
        if (h.coeff(k - j).is_zero()) continue;
        BinaryForm<K> d = a;
        for (int r = 0; r < k - j; ++r) d = d.derivative_s();
        for (int r = 0; r < j; ++r) d = d.derivative_t();
        K c = (j % 2 == 0) ? h.coeff(k - j) : -h.coeff(k - j);
        acc = acc + c * d;
    }
    return acc;
}

}  // namespace ruled
