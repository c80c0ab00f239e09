#pragma once

#include <utility>

#include "ruled/plane_curve.hpp"
#include "ruled/splitting.hpp"

namespace ruled {

// Gram matrix of the hyperplane pairing on the six wedge coordinates
template <class K>
Matrix<K> pairing_gram() {
    Matrix<K> q(6, 6);
    q(0, 5) = K(1);
    q(5, 0) = K(1);
    q(1, 4) = K(-1);
    q(4, 1) = K(-1);
    q(2, 3) = K(1);
    q(3, 2) = K(1);
    return q;
}

// the (d+1) x (d+1) quadratic form A Q A^T carried by the coefficient matrix
template <class K>
Matrix<K> phi_matrix(const SurfaceMap<K>& s) {
    Matrix<K> a = s.coefficient_matrix();
    return a * pairing_gram<K>() * a.transposed();
}

template <class K>
std::size_t phi_rank(const SurfaceMap<K>& s) {
    return phi_matrix(s).rank();
}

// pairing of the map against itself at two parameters: vanishes exactly when
// the generators at (s,t) and (u,v) meet
template <class K>
BiForm<K> incidence_biform(const SurfaceMap<K>& s) {
    const auto& w = s.forms();
    auto sp = [](const BinaryForm<K>& f, const BinaryForm<K>& g) { return BiForm<K>::split_product(f, g); };
    return sp(w[0], w[5]) + sp(w[5], w[0]) - sp(w[1], w[4]) - sp(w[4], w[1]) + sp(w[2], w[3]) + sp(w[3], w[2]);
}

// singular-locus curve of degree d-2: the incidence biform is symmetric and
// doubly diagonal-divisible, and the quotient is the lift of a plane curve
template <class K>
PlaneCurve<K> psi_biform(const SurfaceMap<K>& s) {
    require(s.degree() >= 2, "singular locus needs degree >= 2");
    BiForm<K> f = incidence_biform(s);
    if (f.is_zero())
        throw math_error("singular locus undefined: all generator pairs meet (cone or planar image)");
    return descend_biform(f.divide_diagonal_sq());
}

// Same curve by the resolution route: multiplication by the universal conic
// on the splitting quotient.  Entirely independent of psi_biform.
template <class K>
PlaneCurve<K> psi_determinantal(const SurfaceMap<K>& s) {
    const int d = s.degree();
    require(d >= 3, "determinantal route needs degree >= 3");
    SplitQuotient<K> sq = split_quotient(s);
    const int a = sq.a, b = d - a;
    require(a >= 1, "determinantal route undefined for splitting degree 0");
    const std::size_t dim = static_cast<std::size_t>(d) + 2;

    // coordinates of the four generator images inside S_a + S_b
    Matrix<K> img(4, dim);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k <= a; ++k) img(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = sq.g1[static_cast<std::size_t>(j)].coeff(k);
        for (int k = 0; k <= b; ++k) img(static_cast<std::size_t>(j), static_cast<std::size_t>(a + 1 + k)) = sq.g2[static_cast<std::size_t>(j)].coeff(k);
    }
    auto pivots = img.rref();
    require(pivots.size() == 4, "degenerate splitting data: image rank below 4");
    std::vector<std::size_t> quot;
    {
        std::vector<bool> isp(dim, false);
        for (auto p : pivots) isp[p] = true;
        for (std::size_t c = 0; c < dim; ++c)
            if (!isp[c]) quot.push_back(c);
    }
    require(quot.size() == static_cast<std::size_t>(d - 2), "quotient dimension mismatch");

    auto reduce = [&](std::vector<K> x) {
        for (std::size_t r = 0; r < 4; ++r) {
            K c = x[pivots[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) x[j] = x[j] - c * img(r, j);
        }
        std::vector<K> y;
        y.reserve(quot.size());
        for (auto c : quot) y.push_back(x[c]);
        return y;
    };

    // source basis: monomials of S_{a-2} then of S_{b-2}
    struct Col {
        std::size_t off;
        int k;
    };
    std::vector<Col> cols;
    for (int k = 0; k + 2 <= a; ++k) cols.push_back({0u, k});
    for (int k = 0; k + 2 <= b; ++k) cols.push_back({static_cast<std::size_t>(a) + 1, k});
    require(cols.size() == quot.size(), "multiplication source dimension mismatch");

    const std::size_t n = cols.size();
    std::vector<std::vector<PlaneCurve<K>>> mat(n, std::vector<PlaneCurve<K>>(n, PlaneCurve<K>(1)));
    for (std::size_t c = 0; c < n; ++c) {
        // (e2 s^2 - e1 st + e0 t^2) * monomial: three shifted unit vectors
        std::vector<K> v2(dim, K(0)), v1(dim, K(0)), v0(dim, K(0));
        v2[cols[c].off + static_cast<std::size_t>(cols[c].k)] = K(1);
        v1[cols[c].off + static_cast<std::size_t>(cols[c].k) + 1] = K(1);
        v0[cols[c].off + static_cast<std::size_t>(cols[c].k) + 2] = K(1);
        auto r2 = reduce(std::move(v2)), r1 = reduce(std::move(v1)), r0 = reduce(std::move(v0));
        for (std::size_t r = 0; r < n; ++r) {
            PlaneCurve<K> entry(1);
            entry.coeff(1, 0) = r0[r];
            entry.coeff(0, 1) = -r1[r];
            entry.coeff(0, 0) = r2[r];
            mat[r][c] = entry;
        }
    }
    PlaneCurve<K> det = ring_det(mat, PlaneCurve<K>(d - 2));
    if (det.is_zero()) throw math_error("determinantal singular locus vanished identically");
    require(det.degree() == d - 2, "determinantal locus has unexpected degree");
    return det;
}

template <class K>
struct TheoremCheck {
    bool equal = false;
    K scale{0};  // determinantal = scale * biform when equal
    PlaneCurve<K> biform_route, determinantal_route;
};

template <class K>
TheoremCheck<K> check_main_theorem(const SurfaceMap<K>& s) {
    TheoremCheck<K> r;
    r.biform_route = psi_biform(s);
    r.determinantal_route = psi_determinantal(s);
    auto sc = proportionality_scalar(r.determinantal_route, r.biform_route);
    if (sc.has_value() && !sc->is_zero()) {
        r.equal = true;
        r.scale = *sc;
    }
    return r;
}

// parameters whose generator is tangent to the ruling envelope: the
// restriction of the singular locus to the distinguished conic
template <class K>
BinaryForm<K> pinch_points(const SurfaceMap<K>& s) {
    return psi_biform(s).restrict_to_conic();
}

// all linear factors of a split binary form, as parameter points with
// multiplicity; throws when the form does not split over the base field
template <class K>
std::vector<std::array<K, 2>> split_into_roots(const BinaryForm<K>& f) {
    require(!f.is_zero(), "cannot factor the zero form");
    std::vector<std::array<K, 2>> roots;
    BinaryForm<K> core = f;
    auto strip = [&](const std::array<K, 2>& p) {
        BinaryForm<K> lin(1);
        lin.coeff(0) = p[1];
        lin.coeff(1) = -p[0];
        while (core.degree() >= 1) {
            auto q = divide_exact(core, lin);
            if (!q.has_value()) break;
            core = *q;
            roots.push_back(p);
        }
    };
    strip({K(1), K(0)});
    strip({K(0), K(1)});
    if constexpr (is_rational_field_v<K>) {
        // candidate roots u/v from divisor pairs of the outer coefficients
        while (core.degree() >= 1) {
            const int n = core.degree();
            mpz_class lead = core.coeff(0).num(), trail = core.coeff(n).num(), den_l(1);
            for (int i = 0; i <= n; ++i) den_l = den_l * core.coeff(i).den();
            // scale to integer coefficients before reading off divisors
            mpz_class lead_i = lead * den_l / core.coeff(0).den();
            mpz_class trail_i = trail * den_l / core.coeff(n).den();
            lead_i = abs(lead_i);
            trail_i = abs(trail_i);
            bool found = false;
            for (mpz_class v = 1; v * v <= lead_i && !found; ++v) {
                if (lead_i % v != 0) continue;
                for (const mpz_class& vv : {mpz_class(v), mpz_class(lead_i / v)}) {
                    for (mpz_class u = 1; u * u <= trail_i && !found; ++u) {
                        if (trail_i % u != 0) continue;
                        for (const mpz_class& uu : {mpz_class(u), mpz_class(trail_i / u)}) {
                            for (int sign = -1; sign <= 1 && !found; sign += 2) {
                                std::array<K, 2> p{Rational(mpq_class(sign * uu)), Rational(mpq_class(vv))};
                                if (core.eval_point(p).is_zero()) {
                                    strip(p);
                                    found = true;
                                }
                            }
                        }
                    }
                }
            }
            if (!found) throw math_error("form does not split over the rationals");
        }
    } else {
        std::uint64_t p = 0;
        for (int i = 0; i <= core.degree() && p == 0; ++i) p = core.coeff(i).modulus();
        if (core.degree() >= 1) require(p != 0, "cannot enumerate roots without a bound modulus");
        for (std::uint64_t x = 0; x < p && core.degree() >= 1; ++x)
            strip({K::from_residue(x, p), K::from_residue(1, p)});
        if (core.degree() >= 1) throw math_error("form does not split over the prime field");
    }
    return roots;
}

// the boundary identity: composing with a split factor multiplies the
// singular locus by the tangent lines at the factor's roots
template <class K>
bool boundary_factorization_check(const SurfaceMap<K>& inner, const BinaryForm<K>& xi) {
    require(xi.degree() >= 1, "factor must be nonconstant");
    auto roots = split_into_roots(xi);
    PlaneCurve<K> expected = psi_biform(inner);
    for (const auto& p : roots) expected = expected * tangent_line<K>(p);
    return proportional(psi_biform(boundary_compose(inner, xi)), expected);
}

}  // namespace ruled
