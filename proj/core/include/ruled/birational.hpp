#pragma once

#include "ruled/locus.hpp"

namespace ruled {

// Even-degree parametrization datum: a 2x2 matrix of forms of degree 2n-2
// classifying an extension; d = 2n.
template <class K>
struct ExtensionDatum {
    int n = 2;
    std::array<std::array<BinaryForm<K>, 2>, 2> a;
};

namespace detail {

template <class K>
BinaryForm<K> monomial_form(int degree, int k) {
    BinaryForm<K> f(degree);
    f.coeff(k) = K(1);
    return f;
}

template <class K>
void check_extension(const ExtensionDatum<K>& ex) {
    require(ex.n >= 2, "extension datum needs n >= 2");
    bool nz = false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            require(ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].degree() == 2 * ex.n - 2,
                    "extension entries must have degree 2n-2");
            nz = nz || !ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero();
        }
    require(nz, "extension datum is identically zero");
}

}  // namespace detail

// the square contraction map between the two middle spaces; invertibility
// decides whether the underlying sheaf is trivial
template <class K>
Matrix<K> trivialization_matrix(const ExtensionDatum<K>& ex) {
    detail::check_extension(ex);
    const int n = ex.n;
    Matrix<K> m(2u * static_cast<std::size_t>(n), 2u * static_cast<std::size_t>(n));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < n; ++l) {
                auto r = apolar_contract(ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         detail::monomial_form<K>(n - 1, l));
                for (int k = 0; k < n; ++k)
                    m(static_cast<std::size_t>(i * n + k), static_cast<std::size_t>(j * n + l)) = r.coeff(k);
            }
    return m;
}

template <class K>
bool extension_is_trivializable(const ExtensionDatum<K>& ex) {
    return !trivialization_matrix(ex).det().is_zero();
}

// Reconstruct the degree-2n map classified by the datum: the kernel of the
// double contraction is four-dimensional and its wedge gives the six forms.
template <class K>
SurfaceMap<K> extension_to_surface(const ExtensionDatum<K>& ex) {
    detail::check_extension(ex);
    const int n = ex.n;
    Matrix<K> sys(2u * static_cast<std::size_t>(n - 1), 2u * static_cast<std::size_t>(n + 1));
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l <= n; ++l) {
            const std::size_t col = static_cast<std::size_t>(j * (n + 1) + l);
            for (int i = 0; i < 2; ++i) {
                auto r = apolar_contract(ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                         detail::monomial_form<K>(n, l));
                for (int k = 0; k <= n - 2; ++k) sys(static_cast<std::size_t>(i * (n - 1) + k), col) = r.coeff(k);
            }
        }
    auto kern = sys.kernel();
    if (kern.size() != 4) throw math_error("extension kernel dimension is not 4");
    FormVec4<K> h1, h2;
    for (int b = 0; b < 4; ++b) {
        h1[static_cast<std::size_t>(b)] = BinaryForm<K>(n);
        h2[static_cast<std::size_t>(b)] = BinaryForm<K>(n);
        for (int l = 0; l <= n; ++l) {
            h1[static_cast<std::size_t>(b)].coeff(l) = kern[static_cast<std::size_t>(b)][static_cast<std::size_t>(l)];
            h2[static_cast<std::size_t>(b)].coeff(l) = kern[static_cast<std::size_t>(b)][static_cast<std::size_t>(n + 1 + l)];
        }
    }
    auto w = wedge_of(h1, h2);
    bool nz = false;
    for (const auto& f : w) nz = nz || !f.is_zero();
    if (!nz) throw math_error("extension kernel wedge vanished");
    SurfaceMap<K> s(w);
    if (!validate(s).in_family) throw math_error("extension datum reconstructs a degenerate map");
    if (splitting_type(s).a_q != n) throw math_error("extension datum reconstructs an unbalanced map");
    return s;
}

// determinant of the multiplication-then-contraction square, with entries
// converted to linear forms through the universal conic e2 s^2 - e1 st + e0 t^2
template <class K>
PlaneCurve<K> calcexp_curve(const ExtensionDatum<K>& ex) {
    detail::check_extension(ex);
    const int n = ex.n;
    const int m = n - 2;
    const std::size_t sz = 2u * static_cast<std::size_t>(n - 1);
    BinaryForm<K> qs2 = detail::monomial_form<K>(2, 0), qst = detail::monomial_form<K>(2, 1),
                  qt2 = detail::monomial_form<K>(2, 2);
    std::vector<std::vector<PlaneCurve<K>>> mat(sz, std::vector<PlaneCurve<K>>(sz, PlaneCurve<K>(1)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l <= m; ++l) {
                const auto& a = ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                BinaryForm<K> nu = detail::monomial_form<K>(m, l);
                auto rs = apolar_contract(a, qs2 * nu);
                auto rt = apolar_contract(a, qst * nu);
                auto ru = apolar_contract(a, qt2 * nu);
                for (int k = 0; k <= m; ++k) {
                    PlaneCurve<K> entry(1);
                    entry.coeff(0, 0) = rs.coeff(k);
                    entry.coeff(0, 1) = -rt.coeff(k);
                    entry.coeff(1, 0) = ru.coeff(k);
                    mat[static_cast<std::size_t>(i * (n - 1) + k)][static_cast<std::size_t>(j * (n - 1) + l)] = entry;
                }
            }
    return ring_det(mat, PlaneCurve<K>(2 * (n - 1)));
}

// a random datum, retried until it is trivializable and reconstructs cleanly
template <class F>
ExtensionDatum<typename F::Element> random_extension(const F& field, int n, std::uint64_t seed) {
    using K = typename F::Element;
    require(n >= 2, "extension datum needs n >= 2");
    std::mt19937_64 rng(mix_seed(seed, 0xe87ull));
    for (int attempt = 0; attempt < 32; ++attempt) {
        ExtensionDatum<K> ex;
        ex.n = n;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = random_form(2 * n - 2, field, rng);
        if (!extension_is_trivializable(ex)) continue;
        try {
            extension_to_surface(ex);
            return ex;
        } catch (const math_error&) {
            continue;
        }
    }
    throw math_error("no trivializable extension datum found");
}

}  // namespace ruled
