#pragma once

#include <array>
#include <vector>

#include "ruled/surface.hpp"

namespace ruled {

template <class K>
using FormVec4 = std::array<BinaryForm<K>, 4>;

namespace detail {

// coefficient matrix of the level-m system  M(s,t) c(s,t) == 0,
// M a 4x4 matrix of degree-d forms, c a 4-tuple of degree-m forms
template <class K>
Matrix<K> level_matrix(const std::array<std::array<BinaryForm<K>, 4>, 4>& rows, int d, int m) {
    const std::size_t nr = 4u * static_cast<std::size_t>(d + m + 1);
    const std::size_t nc = 4u * static_cast<std::size_t>(m + 1);
    Matrix<K> mat(nr, nc);
    for (int blk = 0; blk < 4; ++blk)
        for (int c = 0; c <= d + m; ++c)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k <= m; ++k) {
                    if (c - k < 0 || c - k > d) continue;
                    mat(static_cast<std::size_t>(blk * (d + m + 1) + c),
                        static_cast<std::size_t>(j * (m + 1) + k)) =
                        rows[static_cast<std::size_t>(blk)][static_cast<std::size_t>(j)].coeff(c - k);
                }
    return mat;
}

template <class K>
std::vector<FormVec4<K>> level_kernel(const std::array<std::array<BinaryForm<K>, 4>, 4>& rows, int d, int m) {
    auto kern = level_matrix(rows, d, m).kernel();
    std::vector<FormVec4<K>> out;
    out.reserve(kern.size());
    for (const auto& v : kern) {
        FormVec4<K> g{BinaryForm<K>(m), BinaryForm<K>(m), BinaryForm<K>(m), BinaryForm<K>(m)};
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k <= m; ++k)
                g[static_cast<std::size_t>(j)].coeff(k) = v[static_cast<std::size_t>(j * (m + 1) + k)];
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace detail

// degree-m covector syzygies: c with c(t) ../ omega(t) == 0, viewing the
// 4-tuple c through the contraction rows
template <class K>
std::vector<FormVec4<K>> contraction_syzygies(const SurfaceMap<K>& s, int m) {
    return detail::level_kernel(contraction_rows(s.forms(), BinaryForm<K>(s.degree())), s.degree(), m);
}

// degree-m point syzygies: c with c(t) ^ omega(t) == 0
template <class K>
std::vector<FormVec4<K>> wedge_syzygies(const SurfaceMap<K>& s, int m) {
    return detail::level_kernel(wedge_rows(s.forms(), BinaryForm<K>(s.degree())), s.degree(), m);
}

struct SplittingType {
    int a_q = 0;  // smaller contraction-side generator degree, a_q <= d - a_q
    int b_k = 0;  // smaller wedge-side generator degree
};

namespace detail {

template <class K>
int least_syzygy_degree(const std::array<std::array<BinaryForm<K>, 4>, 4>& rows, int d) {
    for (int m = 0; m <= d; ++m) {
        auto mat = level_matrix(rows, d, m);
        const std::size_t dim = mat.cols() - mat.rank();
        if (dim > 0) {
            // the syzygy module is free on generators of degrees m and d-m,
            // so every level must match the induced Hilbert function
            for (int l = m; l <= d; ++l) {
                auto ml = level_matrix(rows, d, l);
                const std::size_t dl = ml.cols() - ml.rank();
                const int expect = std::max(0, l - m + 1) + std::max(0, l - (d - m) + 1);
                require(dl == static_cast<std::size_t>(expect), "syzygy growth is not that of a free rank-2 module");
            }
            return m;
        }
    }
    throw math_error("no syzygies up to degree d; map is not decomposable");
}

}  // namespace detail

// generator degrees (a, d-a) and (b, d-b) of the two syzygy modules
template <class K>
SplittingType splitting_type(const SurfaceMap<K>& s) {
    const int d = s.degree();
    SplittingType st;
    st.a_q = detail::least_syzygy_degree(contraction_rows(s.forms(), BinaryForm<K>(d)), d);
    st.b_k = detail::least_syzygy_degree(wedge_rows(s.forms(), BinaryForm<K>(d)), d);
    return st;
}

template <class K>
struct SplitQuotient {
    int a = 0;                        // degree of g1; g2 has degree d - a
    FormVec4<K> g1, g2;               // free generators of the contraction syzygies
};

namespace detail {

template <class K>
std::vector<K> flatten4(const FormVec4<K>& g, int m) {
    std::vector<K> v;
    v.reserve(4u * static_cast<std::size_t>(m + 1));
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k <= m; ++k) v.push_back(g[static_cast<std::size_t>(j)].coeff(k));
    return v;
}

// is y == lambda * x for a single scalar lambda != 0 across all entries?
template <class K, std::size_t N>
bool tuple_proportional(const std::array<BinaryForm<K>, N>& x, const std::array<BinaryForm<K>, N>& y) {
    K lx(0), ly(0);
    for (std::size_t i = 0; i < N; ++i) {
        if (x[i].is_zero() != y[i].is_zero()) return false;
        if (lx.is_zero() && !x[i].is_zero()) {
            int j = 0;
            while (x[i].coeff(j).is_zero()) ++j;
            lx = x[i].coeff(j);
            ly = y[i].coeff(j);
            if (ly.is_zero()) return false;
        }
    }
    if (lx.is_zero()) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (int j = 0; j <= x[i].degree(); ++j)
            if (!(y[i].coeff(j) * lx == x[i].coeff(j) * ly)) return false;
    return true;
}

}  // namespace detail

// Free generators g1, g2 (degrees a and d-a) of the contraction syzygy
// module, normalised so that the dual of their wedge reproduces the input
// coordinates up to one scalar.
template <class K>
SplitQuotient<K> split_quotient(const SurfaceMap<K>& s) {
    const int d = s.degree();
    SplitQuotient<K> sq;
    sq.a = splitting_type(s).a_q;
    const int b = d - sq.a;
    auto low = contraction_syzygies(s, sq.a);
    require(!low.empty(), "split_quotient internal: no syzygy at the computed degree");
    sq.g1 = low.front();
    if (sq.a == b) {
        require(low.size() >= 2, "split_quotient internal: balanced level must have two syzygies");
        sq.g2 = low[1];
    } else {
        auto high = contraction_syzygies(s, b);
        // g2 must be independent of the multiples of g1 by degree b-a monomials
        const int gap = b - sq.a;
        Matrix<K> span(static_cast<std::size_t>(gap + 1), 4u * static_cast<std::size_t>(b + 1));
        for (int k = 0; k <= gap; ++k) {
            BinaryForm<K> mono(gap);
            mono.coeff(k) = K(1);
            FormVec4<K> mult{sq.g1[0] * mono, sq.g1[1] * mono, sq.g1[2] * mono, sq.g1[3] * mono};
            auto flat = detail::flatten4(mult, b);
            for (std::size_t c = 0; c < flat.size(); ++c) span(static_cast<std::size_t>(k), c) = flat[c];
        }
        const std::size_t base_rank = span.rank();
        bool found = false;
        for (const auto& cand : high) {
            Matrix<K> ext(span.rows() + 1, span.cols());
            for (std::size_t r = 0; r < span.rows(); ++r)
                for (std::size_t c = 0; c < span.cols(); ++c) ext(r, c) = span(r, c);
            auto flat = detail::flatten4(cand, b);
            for (std::size_t c = 0; c < flat.size(); ++c) ext(span.rows(), c) = flat[c];
            if (ext.rank() == base_rank + 1) {
                sq.g2 = cand;
                found = true;
                break;
            }
        }
        require(found, "split_quotient internal: no independent high-degree generator");
    }
    // the generators must cut the same family: star of their wedge is the
    // original coordinate tuple up to scale
    auto chi = star6(wedge_of(sq.g1, sq.g2));
    require(detail::tuple_proportional(s.forms(), chi), "split_quotient generators fail to reconstruct the map");
    return sq;
}

}  // namespace ruled
