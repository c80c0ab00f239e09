#pragma once

#include <random>

#include "ruled/locus.hpp"

namespace ruled {

inline constexpr int kGeneratorRetryBudget = 32;

// Construction record kept alongside every generated map; the factorization
// checks downstream re-derive predictions from this data.
template <class K>
struct GenRecord {
    int d = 0;
    int a = 0;
    std::uint64_t seed = 0;
    int attempts = 1;
    FormVec4<K> tuple1, tuple2;                  // role depends on the construction
    BinaryForm<K> alpha, factor;                 // rank-3 data: free form and split factor
    BinaryForm<K> pencil_u, pencil_v;            // rank-3 pencil
    std::vector<std::array<K, 2>> factor_roots;  // roots of the split factor
};

template <class K>
struct Generated {
    SurfaceMap<K> map;
    GenRecord<K> rec;
};

// the six minors of a pair of 4-tuples read as functionals on the wedge
// basis, pulled back to wedge coordinates through the pairing
template <class K>
std::array<BinaryForm<K>, 6> minors_dual(const FormVec4<K>& f1, const FormVec4<K>& f2) {
    return star6(wedge_of(f1, f2));
}

template <class K>
bool pencil_independent(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.degree() != g.degree()) return false;
    Matrix<K> m(2, static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        m(0, static_cast<std::size_t>(i)) = f.coeff(i);
        m(1, static_cast<std::size_t>(i)) = g.coeff(i);
    }
    return m.rank() == 2;
}

namespace detail {

template <class K>
bool any_nonzero(const std::array<BinaryForm<K>, 6>& w) {
    for (const auto& f : w)
        if (!f.is_zero()) return true;
    return false;
}

[[noreturn]] inline void retry_exhausted(const char* which) {
    throw math_error(std::string("generator retry budget exhausted: ") + which);
}

}  // namespace detail

// generic split surface: two random tuples of degrees a and d-a
template <class F>
Generated<typename F::Element> gen_type_a(const F& field, int d, int a, std::uint64_t seed) {
    using K = typename F::Element;
    require(d >= 2 && a >= 1 && a <= d - 1, "need 1 <= a <= d-1");
    std::mt19937_64 rng(mix_seed(seed, 0x5b1a5ull));
    const int expect = std::min(a, d - a);
    for (int attempt = 1; attempt <= kGeneratorRetryBudget; ++attempt) {
        GenRecord<K> rec;
        rec.d = d;
        rec.a = a;
        rec.seed = seed;
        rec.attempts = attempt;
        for (int j = 0; j < 4; ++j) {
            rec.tuple1[static_cast<std::size_t>(j)] = random_form(a, field, rng);
            rec.tuple2[static_cast<std::size_t>(j)] = random_form(d - a, field, rng);
        }
        auto w = minors_dual(rec.tuple1, rec.tuple2);
        if (!detail::any_nonzero(w)) continue;
        try {
            SurfaceMap<K> s(w);
            if (!validate(s).in_family) continue;
            if (splitting_type(s).a_q != expect) continue;
            // Unbalanced splittings (a_Q = 1) force rank 4: every generator
            // meets the directrix line, so only ask for full rank when a >= 2.
            if (d >= 5 && expect >= 2 && phi_rank(s) != 6) continue;
            return {std::move(s), std::move(rec)};
        } catch (const math_error&) {
            continue;
        }
    }
    detail::retry_exhausted("type_a");
}

// all generators meet one fixed line: the first tuple is supported on two
// coordinates only
template <class F>
Generated<typename F::Element> gen_cone(const F& field, int d, int a, std::uint64_t seed) {
    using K = typename F::Element;
    require(d >= 2 && a >= 1 && a <= d - 1, "need 1 <= a <= d-1");
    std::mt19937_64 rng(mix_seed(seed, 0xc01eull));
    const int expect = std::min(a, d - a);
    for (int attempt = 1; attempt <= kGeneratorRetryBudget; ++attempt) {
        GenRecord<K> rec;
        rec.d = d;
        rec.a = a;
        rec.seed = seed;
        rec.attempts = attempt;
        rec.tuple1[0] = random_form(a, field, rng);
        rec.tuple1[1] = random_form(a, field, rng);
        rec.tuple1[2] = BinaryForm<K>(a);
        rec.tuple1[3] = BinaryForm<K>(a);
        for (int j = 0; j < 4; ++j) rec.tuple2[static_cast<std::size_t>(j)] = random_form(d - a, field, rng);
        if (!pencil_independent(rec.tuple1[0], rec.tuple1[1])) continue;
        if (!pencil_independent(rec.tuple2[2], rec.tuple2[3])) continue;
        auto w = minors_dual(rec.tuple1, rec.tuple2);
        if (!detail::any_nonzero(w)) continue;
        require(w[0].is_zero(), "cone assembly: first coordinate must vanish");
        try {
            SurfaceMap<K> s(w);
            if (!validate(s).in_family) continue;
            if (splitting_type(s).a_q != expect) continue;
            if (stability(s).cls != StabilityClass::StrictlySemistable) continue;
            if (d >= 5 && phi_rank(s) != 4) continue;
            return {std::move(s), std::move(rec)};
        } catch (const math_error&) {
            continue;
        }
    }
    detail::retry_exhausted("cone");
}

// image orthogonal to a symplectic form: draw v, solve for w with
// sigma(v, w) == 0, take the wedge directly
template <class F>
Generated<typename F::Element> gen_rank5(const F& field, int d, std::uint64_t seed) {
    using K = typename F::Element;
    require(d >= 4, "need degree >= 4 for a one-dimensional kernel");
    const int k = d / 2;
    std::mt19937_64 rng(mix_seed(seed, 0x5a5e5ull));
    for (int attempt = 1; attempt <= kGeneratorRetryBudget; ++attempt) {
        GenRecord<K> rec;
        rec.d = d;
        rec.seed = seed;
        rec.attempts = attempt;
        for (int j = 0; j < 4; ++j) rec.tuple1[static_cast<std::size_t>(j)] = random_form(k, field, rng);
        // sigma(x, y) = x1 y3 - x3 y1 + x2 y4 - x4 y2 on components
        const int dw = d - k;
        Matrix<K> sys(static_cast<std::size_t>(d) + 1, 4u * static_cast<std::size_t>(dw + 1));
        const int sign[4] = {-1, -1, 1, 1};
        const int mate[4] = {2, 3, 0, 1};
        for (int c = 0; c <= d; ++c)
            for (int j = 0; j < 4; ++j)
                for (int l = 0; l <= dw; ++l) {
                    if (c - l < 0 || c - l > k) continue;
                    K coeff = rec.tuple1[static_cast<std::size_t>(mate[j])].coeff(c - l);
                    sys(static_cast<std::size_t>(c), static_cast<std::size_t>(j * (dw + 1) + l)) =
                        sign[j] < 0 ? -coeff : coeff;
                }
        auto kern = sys.kernel();
        for (const auto& kv : kern) {
            for (int j = 0; j < 4; ++j) {
                rec.tuple2[static_cast<std::size_t>(j)] = BinaryForm<K>(dw);
                for (int l = 0; l <= dw; ++l)
                    rec.tuple2[static_cast<std::size_t>(j)].coeff(l) = kv[static_cast<std::size_t>(j * (dw + 1) + l)];
            }
            auto w = wedge_of(rec.tuple1, rec.tuple2);
            if (!detail::any_nonzero(w)) continue;
            require((w[1] + w[4]).is_zero(), "symplectic assembly: 13 + 24 coordinate must vanish");
            try {
                SurfaceMap<K> s(w);
                if (!validate(s).in_family) continue;
                auto rep = stability(s);
                if (rep.kernel_dim != 1 || rep.cls != StabilityClass::Stable) continue;
                if (d >= 5 && phi_rank(s) != 5) continue;
                return {std::move(s), std::move(rec)};
            } catch (const math_error&) {
                continue;
            }
        }
    }
    detail::retry_exhausted("rank5");
}

// first coordinate free, the rest a split factor times the squares of a
// pencil; isotropy holds identically and the quadratic form drops to rank 3
template <class F>
Generated<typename F::Element> gen_rank3(const F& field, int d, int a, std::uint64_t seed) {
    using K = typename F::Element;
    require(a >= 1 && d - 2 * a >= 0, "need 1 <= a <= d/2");
    std::mt19937_64 rng(mix_seed(seed, 0x3a3ull));
    for (int attempt = 1; attempt <= kGeneratorRetryBudget; ++attempt) {
        GenRecord<K> rec;
        rec.d = d;
        rec.a = a;
        rec.seed = seed;
        rec.attempts = attempt;
        rec.alpha = random_form(d, field, rng);
        rec.pencil_u = random_form(a, field, rng);
        rec.pencil_v = random_form(a, field, rng);
        rec.factor = BinaryForm<K>(0);
        rec.factor.coeff(0) = K(1);
        rec.factor_roots.clear();
        for (int i = 0; i < d - 2 * a; ++i) {
            std::array<K, 2> p{field.random(rng), K(1)};
            BinaryForm<K> lin(1);
            lin.coeff(0) = p[1];
            lin.coeff(1) = -p[0];
            rec.factor = rec.factor * lin;
            rec.factor_roots.push_back(p);
        }
        if (!pencil_independent(rec.pencil_u, rec.pencil_v)) continue;
        const auto& e = rec.factor;
        const auto& u = rec.pencil_u;
        const auto& v = rec.pencil_v;
        std::array<BinaryForm<K>, 6> w{rec.alpha, e * (u * u), e * (u * v), e * (u * v), e * (v * v), BinaryForm<K>(d)};
        try {
            SurfaceMap<K> s(w);
            require(s.isotropy_form().is_zero(), "rank-3 assembly: isotropy must hold identically");
            if (!validate(s).in_family) continue;
            if (d >= 5 && phi_rank(s) != 3) continue;
            return {std::move(s), std::move(rec)};
        } catch (const math_error&) {
            continue;
        }
    }
    detail::retry_exhausted("rank3");
}

// tangent lines of a random rational curve of degree e
template <class F>
Generated<typename F::Element> gen_developable(const F& field, int e, std::uint64_t seed) {
    using K = typename F::Element;
    require(e >= 2, "need curve degree >= 2");
    std::mt19937_64 rng(mix_seed(seed, 0xdeffull));
    for (int attempt = 1; attempt <= kGeneratorRetryBudget; ++attempt) {
        GenRecord<K> rec;
        rec.d = 2 * e - 2;
        rec.seed = seed;
        rec.attempts = attempt;
        FormVec4<K> cs, ct;
        for (int j = 0; j < 4; ++j) {
            rec.tuple1[static_cast<std::size_t>(j)] = random_form(e, field, rng);
            cs[static_cast<std::size_t>(j)] = rec.tuple1[static_cast<std::size_t>(j)].derivative_s();
            ct[static_cast<std::size_t>(j)] = rec.tuple1[static_cast<std::size_t>(j)].derivative_t();
        }
        auto w = wedge_of(cs, ct);
        if (!detail::any_nonzero(w)) continue;
        try {
            SurfaceMap<K> s(w);
            if (!validate(s).in_family) continue;
            return {std::move(s), std::move(rec)};
        } catch (const math_error&) {
            continue;
        }
    }
    detail::retry_exhausted("developable");
}

}  // namespace ruled
