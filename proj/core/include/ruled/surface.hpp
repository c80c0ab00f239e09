#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ruled/biform.hpp"
#include "ruled/plane_curve.hpp"

namespace ruled {

// Index order for the six wedge-basis coordinates:
//   0 <-> e1^e2, 1 <-> e1^e3, 2 <-> e1^e4, 3 <-> e2^e3, 4 <-> e2^e4, 5 <-> e3^e4
// so a 6-tuple x reads (x12, x13, x14, x23, x24, x34).

// hyperplane-pairing of two wedge vectors; x and y may live in any
// commutative ring (scalars, binary forms, biforms)
template <class T>
T plucker_pairing(const std::array<T, 6>& x, const std::array<T, 6>& y) {
    return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
}

// the involution identifying a wedge vector with its q-dual:
// (p12, p13, p14, p23, p24, p34) -> (p34, -p24, p23, p14, -p13, p12)
template <class T>
std::array<T, 6> star6(const std::array<T, 6>& x) {
    return {x[5], -x[4], x[3], x[2], -x[1], x[0]};
}

// wedge coordinates of span{a, b} for two 4-vectors
template <class T>
std::array<T, 6> wedge_of(const std::array<T, 4>& a, const std::array<T, 4>& b) {
    auto minor = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
    return {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

// rows of the contraction V-check -> V against a wedge vector w:
// row k lists the coefficients of e_k ../ w on e_1..e_4
template <class T>
std::array<std::array<T, 4>, 4> contraction_rows(const std::array<T, 6>& w, const T& zero) {
    return {{{zero, w[0], w[1], w[2]},
             {-w[0], zero, w[3], w[4]},
             {-w[1], -w[3], zero, w[5]},
             {-w[2], -w[4], -w[5], zero}}};
}

// rows of v -> v ^ w in the basis e123, e124, e134, e234 of Lambda^3 V
template <class T>
std::array<std::array<T, 4>, 4> wedge_rows(const std::array<T, 6>& w, const T& zero) {
    return {{{w[3], -w[1], w[0], zero},
             {w[4], -w[2], zero, w[0]},
             {w[5], zero, -w[2], w[1]},
             {zero, w[5], -w[4], w[3]}}};
}

enum class StabilityClass { Stable, StrictlySemistable, Unstable };

template <class K>
struct StabilityReport {
    StabilityClass cls = StabilityClass::Stable;
    // Unstable witnesses: either all generators pass through the point P(v),
    // or all generators lie in the plane annihilated by the covector.
    std::optional<std::array<K, 4>> point_witness;
    std::optional<std::array<K, 4>> plane_witness;
    // StrictlySemistable witness: isotropic wedge vector killed by the
    // coefficient pairing (when one exists over the base field).
    std::optional<std::array<K, 6>> isotropic_witness;
    std::size_t kernel_dim = 0;
};

template <class K>
struct ValidityReport {
    bool decomposable = false;
    bool base_point_free = false;
    bool in_family = false;  // decomposable, base-point-free and not unstable
    std::optional<BinaryForm<K>> boundary_factor;  // common factor, when nonconstant
};

template <class K>
struct Line {
    std::array<K, 4> a, b;  // spanning points of the line in P(V)
};

// A degree-d morphism P^1 -> G(1,3) given by its six coordinate forms, the
// wedge coordinates of the moving line.
template <class K>
class SurfaceMap {
  public:
    explicit SurfaceMap(std::array<BinaryForm<K>, 6> forms) : w_(std::move(forms)) {
        for (int i = 1; i < 6; ++i)
            require(w_[i].degree() == w_[0].degree(), "coordinate forms must share one degree");
        bool any = false;
        for (const auto& f : w_) any = any || !f.is_zero();
        require(any, "all six coordinate forms vanish");
    }

    [[nodiscard]] int degree() const { return w_[0].degree(); }
    [[nodiscard]] const std::array<BinaryForm<K>, 6>& forms() const { return w_; }
    [[nodiscard]] const BinaryForm<K>& form(int i) const { return w_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] std::array<K, 6> eval(const std::array<K, 2>& t) const {
        std::array<K, 6> r{K(0), K(0), K(0), K(0), K(0), K(0)};
        for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = w_[static_cast<std::size_t>(i)].eval_point(t);
        return r;
    }

    // w12 w34 - w13 w24 + w14 w23, identically zero iff the image sits in
    // the Pluecker quadric
    [[nodiscard]] BinaryForm<K> isotropy_form() const {
        return w_[0] * w_[5] - w_[1] * w_[4] + w_[2] * w_[3];
    }

    // (d+1) x 6 matrix of coefficients, columns in wedge-index order
    [[nodiscard]] Matrix<K> coefficient_matrix() const {
        Matrix<K> a(static_cast<std::size_t>(degree()) + 1, 6);
        for (int i = 0; i <= degree(); ++i)
            for (int j = 0; j < 6; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w_[static_cast<std::size_t>(j)].coeff(i);
        return a;
    }

  private:
    std::array<BinaryForm<K>, 6> w_;
};

template <class K>
SurfaceMap<K> dual_surface(const SurfaceMap<K>& s) {
    return SurfaceMap<K>(star6(s.forms()));
}

// multiply every coordinate form by a common factor; the result parametrizes
// the same ruled surface but sits on the boundary of its degree family
template <class K>
SurfaceMap<K> boundary_compose(const SurfaceMap<K>& s, const BinaryForm<K>& xi) {
    require(xi.degree() >= 1 && !xi.is_zero(), "boundary factor must be nonconstant");
    std::array<BinaryForm<K>, 6> out{xi * s.form(0), xi * s.form(1), xi * s.form(2),
                                     xi * s.form(3), xi * s.form(4), xi * s.form(5)};
    return SurfaceMap<K>(out);
}

// constant 4-vectors v with v ^ omega(t) == 0 for all t
template <class K>
std::vector<std::array<K, 4>> constant_wedge_kernel(const SurfaceMap<K>& s) {
    const int d = s.degree();
    auto rows = wedge_rows(s.forms(), BinaryForm<K>(d));
    Matrix<K> m(4 * static_cast<std::size_t>(d + 1), 4);
    for (int blk = 0; blk < 4; ++blk)
        for (int c = 0; c <= d; ++c)
            for (int j = 0; j < 4; ++j)
                m(static_cast<std::size_t>(blk * (d + 1) + c), static_cast<std::size_t>(j)) =
                    rows[static_cast<std::size_t>(blk)][static_cast<std::size_t>(j)].coeff(c);
    std::vector<std::array<K, 4>> out;
    for (auto& v : m.kernel()) out.push_back({v[0], v[1], v[2], v[3]});
    return out;
}

// constant covectors u with u ../ omega(t) == 0 for all t
template <class K>
std::vector<std::array<K, 4>> constant_contraction_kernel(const SurfaceMap<K>& s) {
    const int d = s.degree();
    auto rows = contraction_rows(s.forms(), BinaryForm<K>(d));
    Matrix<K> m(4 * static_cast<std::size_t>(d + 1), 4);
    for (int blk = 0; blk < 4; ++blk)
        for (int c = 0; c <= d; ++c)
            for (int j = 0; j < 4; ++j)
                m(static_cast<std::size_t>(blk * (d + 1) + c), static_cast<std::size_t>(j)) =
                    rows[static_cast<std::size_t>(blk)][static_cast<std::size_t>(j)].coeff(c);
    std::vector<std::array<K, 4>> out;
    for (auto& v : m.kernel()) out.push_back({v[0], v[1], v[2], v[3]});
    return out;
}

namespace detail {

// exact square root in the base field, used only for witness extraction
inline std::optional<Rational> field_sqrt(const Rational& x) {
    if (x.is_zero()) return Rational(0);
    if (sgn(x.raw()) < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(mpq_class(rn) / mpq_class(rd)));
}

inline std::optional<Fp> field_sqrt(const Fp& x) {
    if (x.is_zero()) return x;
    const std::uint64_t p = x.modulus();
    if (p == 0) return std::nullopt;
    // Tonelli-Shanks
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return (a * b) % p; };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::uint64_t a = static_cast<std::uint64_t>(x.residue());
    if (powmod(a, (p - 1) / 2) != 1) return std::nullopt;
    if (p % 4 == 3) return Fp::from_residue(powmod(a, (p + 1) / 4), p);
    std::uint64_t q = p - 1, ss = 0;
    while (q % 2 == 0) { q /= 2; ++ss; }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2) == 1) ++z;
    std::uint64_t m = ss, c = powmod(z, q), t = powmod(a, q), r = powmod(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b);
        m = i;
        c = mulmod(b, b);
        t = mulmod(t, c);
        r = mulmod(r, b);
    }
    return Fp::from_residue(r, p);
}

}  // namespace detail

// Numerical-stability-free GIT classification by the rank rules:
//  - Unstable  <=> all generators pass through a point or lie in a plane
//    (a constant kernel vector of the wedge or contraction system);
//  - otherwise let k = dim of the right kernel of the coefficient matrix:
//    StrictlySemistable <=> k >= 2, or k = 1 with isotropic generator;
//  - Stable otherwise.
template <class K>
StabilityReport<K> stability(const SurfaceMap<K>& s) {
    StabilityReport<K> rep;
    auto point = constant_wedge_kernel(s);
    if (!point.empty()) {
        rep.cls = StabilityClass::Unstable;
        rep.point_witness = point.front();
        return rep;
    }
    auto plane = constant_contraction_kernel(s);
    if (!plane.empty()) {
        rep.cls = StabilityClass::Unstable;
        rep.plane_witness = plane.front();
        return rep;
    }
    auto kern = s.coefficient_matrix().kernel();
    rep.kernel_dim = kern.size();
    if (kern.empty()) {
        rep.cls = StabilityClass::Stable;
        return rep;
    }
    auto as6 = [](const std::vector<K>& v) {
        return std::array<K, 6>{v[0], v[1], v[2], v[3], v[4], v[5]};
    };
    auto qq = [&](const std::array<K, 6>& x, const std::array<K, 6>& y) { return plucker_pairing(x, y); };
    if (kern.size() == 1) {
        auto z = as6(kern[0]);
        if (qq(z, z).is_zero()) {
            rep.cls = StabilityClass::StrictlySemistable;
            rep.isotropic_witness = z;
        } else {
            rep.cls = StabilityClass::Stable;
        }
        return rep;
    }
    // k >= 2: an isotropic vector always exists over the closure
    rep.cls = StabilityClass::StrictlySemistable;
    for (const auto& kv : kern) {
        auto z = as6(kv);
        if (qq(z, z).is_zero()) {
            rep.isotropic_witness = z;
            return rep;
        }
    }
    // search pairs b_i + x b_j: q(bi,bi) + 2x q(bi,bj) + x^2 q(bj,bj) = 0
    for (std::size_t i = 0; i < kern.size(); ++i)
        for (std::size_t j = i + 1; j < kern.size(); ++j) {
            auto zi = as6(kern[i]), zj = as6(kern[j]);
            K a = qq(zj, zj), b = qq(zi, zj), c = qq(zi, zi);
            K disc = b * b - a * c;
            auto root = detail::field_sqrt(disc);
            if (!root.has_value()) continue;
            K x = (-b + *root) / a;
            std::array<K, 6> z{};
            for (int t = 0; t < 6; ++t) z[static_cast<std::size_t>(t)] = zi[static_cast<std::size_t>(t)] + x * zj[static_cast<std::size_t>(t)];
            rep.isotropic_witness = z;
            return rep;
        }
    return rep;
}

template <class K>
ValidityReport<K> validate(const SurfaceMap<K>& s) {
    ValidityReport<K> rep;
    rep.decomposable = s.isotropy_form().is_zero();
    std::vector<BinaryForm<K>> forms(s.forms().begin(), s.forms().end());
    BinaryForm<K> g = gcd_many(forms);
    rep.base_point_free = (g.degree() == 0);
    if (g.degree() > 0) rep.boundary_factor = g;
    if (rep.decomposable && rep.base_point_free) {
        rep.in_family = constant_wedge_kernel(s).empty() && constant_contraction_kernel(s).empty();
    }
    return rep;
}

// the moving line at parameter t0, as two spanning points
template <class K>
Line<K> generator_line(const SurfaceMap<K>& s, const std::array<K, 2>& t0) {
    auto z = s.eval(t0);
    bool any = false;
    for (const auto& x : z) any = any || !x.is_zero();
    require(any, "generator line undefined: all coordinates vanish at t0");
    require(plucker_pairing(z, z).is_zero(), "generator line undefined: non-decomposable value");
    auto rows = contraction_rows(z, K(0));
    Matrix<K> m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    auto pivots = m.rref();
    require(pivots.size() == 2, "generator line undefined: contraction rank != 2");
    Line<K> l;
    for (int j = 0; j < 4; ++j) {
        l.a[static_cast<std::size_t>(j)] = m(0, static_cast<std::size_t>(j));
        l.b[static_cast<std::size_t>(j)] = m(1, static_cast<std::size_t>(j));
    }
    // the span must reproduce the wedge vector
    auto w = wedge_of(l.a, l.b);
    std::size_t p = 0;
    while (z[p].is_zero()) ++p;
    for (std::size_t i = 0; i < 6; ++i)
        require(w[i] * z[p] == z[i] * w[p], "generator line internal: span mismatch");
    return l;
}

template <class K>
bool lines_meet(const SurfaceMap<K>& s, const std::array<K, 2>& t0, const std::array<K, 2>& t1) {
    return plucker_pairing(s.eval(t0), s.eval(t1)).is_zero();
}

// independent check: two lines meet iff their four spanning points are
// linearly dependent
template <class K>
bool lines_meet_det_oracle(const Line<K>& l0, const Line<K>& l1) {
    Matrix<K> m(4, 4);
    for (int j = 0; j < 4; ++j) {
        m(0, static_cast<std::size_t>(j)) = l0.a[static_cast<std::size_t>(j)];
        m(1, static_cast<std::size_t>(j)) = l0.b[static_cast<std::size_t>(j)];
        m(2, static_cast<std::size_t>(j)) = l1.a[static_cast<std::size_t>(j)];
        m(3, static_cast<std::size_t>(j)) = l1.b[static_cast<std::size_t>(j)];
    }
    return m.det().is_zero();
}

// action of g in GL(V) through its second wedge power
template <class K>
SurfaceMap<K> act_pgl4(const SurfaceMap<K>& s, const Matrix<K>& g) {
    require(g.rows() == 4 && g.cols() == 4, "act_pgl4 needs a 4x4 matrix");
    require(!g.det().is_zero(), "act_pgl4 needs an invertible matrix");
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const int d = s.degree();
    std::array<BinaryForm<K>, 6> out{BinaryForm<K>(d), BinaryForm<K>(d), BinaryForm<K>(d),
                                     BinaryForm<K>(d), BinaryForm<K>(d), BinaryForm<K>(d)};
    for (int r = 0; r < 6; ++r) {
        const int a = pairs[r][0], b = pairs[r][1];
        for (int c = 0; c < 6; ++c) {
            const int i = pairs[c][0], j = pairs[c][1];
            K coeff = g(static_cast<std::size_t>(a), static_cast<std::size_t>(i)) * g(static_cast<std::size_t>(b), static_cast<std::size_t>(j)) -
                      g(static_cast<std::size_t>(a), static_cast<std::size_t>(j)) * g(static_cast<std::size_t>(b), static_cast<std::size_t>(i));
            if (coeff.is_zero()) continue;
            out[static_cast<std::size_t>(r)] = out[static_cast<std::size_t>(r)] + coeff * s.form(c);
        }
    }
    return SurfaceMap<K>(out);
}

// parameter substitution (s,t) -> (a s + b t, c s + d t)
template <class K>
BinaryForm<K> substitute_linear(const BinaryForm<K>& f, const std::array<std::array<K, 2>, 2>& h) {
    const int n = f.degree();
    BinaryForm<K> ls(1), lt(1);
    ls.coeff(0) = h[0][0]; ls.coeff(1) = h[0][1];
    lt.coeff(0) = h[1][0]; lt.coeff(1) = h[1][1];
    std::vector<BinaryForm<K>> ps{BinaryForm<K>(0)}, pt{BinaryForm<K>(0)};
    ps[0].coeff(0) = K(1);
    pt[0].coeff(0) = K(1);
    for (int i = 1; i <= n; ++i) {
        ps.push_back(ps.back() * ls);
        pt.push_back(pt.back() * lt);
    }
    BinaryForm<K> acc(n);
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        acc = acc + f.coeff(i) * (ps[static_cast<std::size_t>(n - i)] * pt[static_cast<std::size_t>(i)]);
    }
    return acc;
}

template <class K>
SurfaceMap<K> act_pgl2(const SurfaceMap<K>& s, const std::array<std::array<K, 2>, 2>& h) {
    require(!(h[0][0] * h[1][1] - h[0][1] * h[1][0]).is_zero(), "act_pgl2 needs an invertible substitution");
    std::array<BinaryForm<K>, 6> out{BinaryForm<K>(0), BinaryForm<K>(0), BinaryForm<K>(0),
                                     BinaryForm<K>(0), BinaryForm<K>(0), BinaryForm<K>(0)};
    for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(i)] = substitute_linear(s.form(i), h);
    return SurfaceMap<K>(out);
}

}  // namespace ruled
