#pragma once

#include "ruled/generators.hpp"

namespace ruled {

// Plane curve attached to a two-dimensional space of binary forms: the
// divided difference (f(s,t)g(u,v) - f(u,v)g(s,t)) / (sv - tu) descends to a
// curve of degree n for a pencil inside the forms of degree n+1.  Vanishes
// exactly on the parameter pairs killed by a common pencil member.
template <class K>
PlaneCurve<K> poncelet_curve(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    require(f.degree() == g.degree() && f.degree() >= 1, "pencil needs equal degree >= 1");
    require(pencil_independent(f, g), "pencil members must be independent");
    BiForm<K> num = BiForm<K>::split_product(f, g) - BiForm<K>::split_product(g, f);
    auto q = num.divide_diagonal();
    require(q.has_value(), "divided difference is not exact");
    return descend_biform(*q);
}

// prediction for the two-pencil construction: the singular locus splits as a
// product of the two attached curves
template <class K>
bool cone_factorization_check(const Generated<K>& gen) {
    require(gen.rec.tuple1[2].is_zero() && gen.rec.tuple1[3].is_zero(),
            "check expects a two-coordinate first tuple");
    PlaneCurve<K> left = poncelet_curve(gen.rec.tuple1[0], gen.rec.tuple1[1]);
    PlaneCurve<K> right = poncelet_curve(gen.rec.tuple2[2], gen.rec.tuple2[3]);
    return proportional(psi_biform(gen.map), left * right);
}

// prediction for the squared-pencil construction: tangent lines at the split
// factor's roots times the pencil curve squared
template <class K>
bool rank3_factorization_check(const Generated<K>& gen) {
    PlaneCurve<K> pc = poncelet_curve(gen.rec.pencil_u, gen.rec.pencil_v);
    PlaneCurve<K> expected = pc * pc;
    for (const auto& p : gen.rec.factor_roots) expected = expected * tangent_line(p);
    return proportional(psi_biform(gen.map), expected);
}

// exhaustive triangle search over a small prime field
inline std::vector<std::array<std::array<Fp, 2>, 3>> find_triangles_bruteforce(const PlaneCurve<Fp>& x) {
    require(x.degree() == 3, "triangle search needs a cubic");
    std::uint64_t p = 0;
    for (int a = 0; a <= 3 && p == 0; ++a)
        for (int b = 0; a + b <= 3 && p == 0; ++b) p = x.coeff(a, b).modulus();
    require(p != 0, "triangle search needs a bound modulus");
    require(p <= 257, "modulus too large for exhaustive search");
    const std::size_t n = static_cast<std::size_t>(p) + 1;
    std::vector<std::array<Fp, 2>> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < p; ++i) pts.push_back({Fp::from_residue(i, p), Fp::from_residue(1, p)});
    pts.push_back({Fp::from_residue(1, p), Fp::from_residue(0, p)});
    std::vector<char> inc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const char v = x.eval_at_pair(pts[i], pts[j]).is_zero() ? 1 : 0;
            inc[i * n + j] = v;
            inc[j * n + i] = v;
        }
    std::vector<std::array<std::array<Fp, 2>, 3>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!inc[i * n + j]) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                if (inc[i * n + k] && inc[j * n + k]) out.push_back({pts[i], pts[j], pts[k]});
        }
    return out;
}

enum class TriangleStatus { Finite, Infinite, Indeterminate };

template <class K>
struct TriangleCount {
    TriangleStatus status = TriangleStatus::Indeterminate;
    long count = 0;                 // valid in the Finite case
    BinaryForm<K> vertex_form{};    // squarefree; roots over the closure are the vertices
};

namespace detail {

// resultant of two polynomials in an auxiliary variable with coefficients in
// a commutative ring, as the full Sylvester determinant with formal degrees
template <class Ring>
Ring sylvester_resultant(const std::vector<Ring>& fa, const std::vector<Ring>& fb,
                         const Ring& zero_a, const Ring& zero_b, const Ring& zero_out) {
    const std::size_t da = fa.size() - 1, db = fb.size() - 1;
    require(da >= 1 && db >= 1, "resultant needs positive degrees");
    const std::size_t n = da + db;
    std::vector<std::vector<Ring>> mat;
    mat.reserve(n);
    for (std::size_t r = 0; r < db; ++r) {
        std::vector<Ring> row(n, zero_a);
        for (std::size_t j = 0; j <= da; ++j) row[r + j] = fa[j];
        mat.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < da; ++r) {
        std::vector<Ring> row(n, zero_b);
        for (std::size_t j = 0; j <= db; ++j) row[r + j] = fb[j];
        mat.push_back(std::move(row));
    }
    return ring_det(mat, zero_out);
}

template <class K>
BiForm<K> left_embed(const BinaryForm<K>& f) {
    BiForm<K> r(f.degree(), 0);
    for (int i = 0; i <= f.degree(); ++i) r.coeff(i, 0) = f.coeff(i);
    return r;
}

template <class K>
BiForm<K> right_embed(const BinaryForm<K>& f) {
    BiForm<K> r(0, f.degree());
    for (int j = 0; j <= f.degree(); ++j) r.coeff(0, j) = f.coeff(j);
    return r;
}

// clear denominators and integer content so the elimination stays small
template <class K>
PlaneCurve<K> normalize_content(PlaneCurve<K> x) {
    if constexpr (is_rational_field_v<K>) {
        mpz_class den(1), num(0);
        for (int a = 0; a <= x.degree(); ++a)
            for (int b = 0; a + b <= x.degree(); ++b) {
                if (x.coeff(a, b).is_zero()) continue;
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.coeff(a, b).den().get_mpz_t());
            }
        x = Rational(mpq_class(den)) * x;
        for (int a = 0; a <= x.degree(); ++a)
            for (int b = 0; a + b <= x.degree(); ++b) {
                if (x.coeff(a, b).is_zero()) continue;
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.coeff(a, b).num().get_mpz_t());
            }
        if (num != 0) x = Rational(mpq_class(mpq_class(1) / mpq_class(num))) * x;
    }
    return x;
}

template <class K>
void strip_shared_roots(BinaryForm<K>& e, const BinaryForm<K>& with) {
    if (with.is_zero()) return;
    while (e.degree() >= 1) {
        BinaryForm<K> g = poly_gcd(e, with);
        if (g.degree() == 0) return;
        auto q = divide_exact(e, g);
        require(q.has_value(), "gcd division must be exact");
        e = *q;
    }
}

}  // namespace detail

// Counts closure triangles of a cubic incidence curve through two bivariate
// eliminations, stripping the declared degenerate loci: the diagonal factor
// of the first eliminant, the self-incident parameters, and the parameters
// whose partner is self-incident.  A clean count requires the final eliminant
// to be a nonzero perfect square of a squarefree form of degree 3k.
template <class K>
TriangleCount<K> count_triangles_exact(const PlaneCurve<K>& cubic) {
    require(cubic.degree() == 3, "triangle counting needs a cubic");
    TriangleCount<K> out;
    PlaneCurve<K> x = detail::normalize_content(cubic);
    BiForm<K> b = x.lift();
    std::vector<BinaryForm<K>> bc;
    for (int j = 0; j <= 3; ++j) bc.push_back(b.uv_coefficient(j));

    // eliminate the third vertex from the two incidences that involve it
    std::vector<BiForm<K>> fa, fb;
    for (int j = 0; j <= 3; ++j) {
        fa.push_back(detail::left_embed(bc[static_cast<std::size_t>(j)]));
        fb.push_back(detail::right_embed(bc[static_cast<std::size_t>(j)]));
    }
    BiForm<K> r = detail::sylvester_resultant(fa, fb, BiForm<K>(3, 0), BiForm<K>(0, 3), BiForm<K>(9, 9));
    if (r.is_zero()) {
        out.status = TriangleStatus::Infinite;
        return out;
    }
    int mu = 0;
    while (true) {
        auto q = r.divide_diagonal();
        if (!q.has_value()) break;
        r = *q;
        ++mu;
    }
    require(mu >= 1, "first eliminant must contain the diagonal");

    BinaryForm<K> rc = x.restrict_to_conic();
    if (rc.is_zero()) return out;  // the distinguished conic divides the cubic

    if (r.deg_uv() == 0) {
        // no residual condition on the second vertex: no triangles at all
        out.status = TriangleStatus::Finite;
        out.vertex_form = BinaryForm<K>(0);
        out.vertex_form.coeff(0) = K(1);
        return out;
    }

    // eliminate the second vertex
    std::vector<BinaryForm<K>> fa2, fb2;
    for (int j = 0; j <= 3; ++j) fa2.push_back(bc[static_cast<std::size_t>(j)]);
    for (int l = 0; l <= r.deg_uv(); ++l) fb2.push_back(r.uv_coefficient(l));
    BinaryForm<K> e = detail::sylvester_resultant(fa2, fb2, BinaryForm<K>(3), BinaryForm<K>(r.deg_st()),
                                                  BinaryForm<K>(3 * r.deg_uv() + 3 * r.deg_st()));
    if (e.is_zero()) {
        out.status = TriangleStatus::Infinite;
        return out;
    }

    // parameters whose incidence partner is self-incident
    std::vector<BinaryForm<K>> frc;
    for (int l = 0; l <= rc.degree(); ++l) {
        BinaryForm<K> c(0);
        c.coeff(0) = rc.coeff(l);
        frc.push_back(c);
    }
    BinaryForm<K> partner = detail::sylvester_resultant(fa2, frc, BinaryForm<K>(3), BinaryForm<K>(0),
                                                        BinaryForm<K>(3 * rc.degree()));
    if (partner.is_zero()) return out;  // a full tangent line lies on the cubic

    detail::strip_shared_roots(e, rc);
    detail::strip_shared_roots(e, partner);

    if (e.degree() == 0) {
        out.status = TriangleStatus::Finite;
        out.vertex_form = BinaryForm<K>(0);
        out.vertex_form.coeff(0) = K(1);
        return out;
    }
    BinaryForm<K> s = squarefree_part(e);
    if (!proportional(e, s * s)) return out;
    if (s.degree() % 3 != 0) return out;
    out.status = TriangleStatus::Finite;
    out.count = s.degree() / 3;
    out.vertex_form = s;
    return out;
}

template <class K>
struct FiberProbe {
    PlaneCurve<K> cubic{};
    TriangleCount<K> triangles{};
};

// degree-5 fiber data: the attached cubic and its triangle count
template <class K>
FiberProbe<K> quintic_fiber_probe(const SurfaceMap<K>& s) {
    require(s.degree() == 5, "fiber probe is defined for degree 5");
    FiberProbe<K> r;
    r.cubic = psi_biform(s);
    r.triangles = count_triangles_exact(r.cubic);
    return r;
}

}  // namespace ruled
