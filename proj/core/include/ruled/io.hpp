#pragma once

#include <string>
#include <vector>

#include "ruled/birational.hpp"

namespace ruled {

// Documents hold coefficients as decimal strings (rationals as "num/den") so
// the wire format is field-agnostic; conversion to concrete scalars happens
// against a field descriptor.  Serialization is canonical and byte-stable.

struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct SurfaceDocument {
    int d = 0;
    FieldSpec field;
    // basis order e12, e13, e14, e23, e24, e34; coefficients s^d .. t^d
    std::array<std::vector<std::string>, 6> omega{};
    friend bool operator==(const SurfaceDocument&, const SurfaceDocument&) = default;
};

struct CurveDocument {
    int degree = 0;
    // graded-lex in (e0, e1, e2); first nonzero coefficient normalized to 1
    std::vector<std::string> coeffs;
    friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

struct MatrixDocument {
    std::size_t size = 0;
    std::vector<std::vector<std::string>> entries;
    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

struct ExtensionDocument {
    int n = 2;
    FieldSpec field;
    // 2x2 blocks of degree 2n-2 forms, coefficients s^(2n-2) .. t^(2n-2)
    std::array<std::array<std::vector<std::string>, 2>, 2> a{};
    friend bool operator==(const ExtensionDocument&, const ExtensionDocument&) = default;
};

SurfaceDocument parse_surface_document(const std::string& text);
CurveDocument parse_curve_document(const std::string& text);
MatrixDocument parse_matrix_document(const std::string& text);
ExtensionDocument parse_extension_document(const std::string& text);

std::string serialize(const SurfaceDocument& doc);
std::string serialize(const CurveDocument& doc);
std::string serialize(const MatrixDocument& doc);
std::string serialize(const ExtensionDocument& doc);

inline FieldSpec field_spec_of(const QField&) { return FieldSpec{true, 0}; }
inline FieldSpec field_spec_of(const FpField& f) { return FieldSpec{false, f.p}; }

// Runs fn with the concrete field named by fs.  Both instantiations must
// agree on the return type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.rational) {
        QField f;
        return fn(f);
    }
    try {
        FpField f(fs.p);
        return fn(f);
    } catch (const math_error& e) {
        throw document_error(e.what());
    }
}

namespace detail {

// prime fields accept "a/b" literals on input even though they never emit them
template <class F>
typename F::Element parse_scalar(const F& field, const std::string& s) {
    if constexpr (!is_rational_field_v<typename F::Element>) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            auto n = field.parse(s.substr(0, slash));
            auto d = field.parse(s.substr(slash + 1));
            if (d.is_zero()) throw document_error("division by zero in literal: " + s);
            return n / d;
        }
    }
    return field.parse(s);
}

}  // namespace detail

template <class F>
SurfaceMap<typename F::Element> surface_from_document(const F& field, const SurfaceDocument& doc) {
    using K = typename F::Element;
    std::array<BinaryForm<K>, 6> w;
    bool nz = false;
    for (std::size_t i = 0; i < 6; ++i) {
        if (doc.omega[i].size() != static_cast<std::size_t>(doc.d) + 1)
            throw document_error("omega entry has wrong coefficient count");
        w[i] = BinaryForm<K>(doc.d);
        for (int j = 0; j <= doc.d; ++j) {
            w[i].coeff(j) = detail::parse_scalar(field, doc.omega[i][static_cast<std::size_t>(j)]);
            nz = nz || !w[i].coeff(j).is_zero();
        }
    }
    if (!nz) throw document_error("omega is identically zero");
    return SurfaceMap<K>(w);
}

template <class F>
SurfaceDocument document_from_surface(const F& field, const SurfaceMap<typename F::Element>& s) {
    SurfaceDocument doc;
    doc.d = s.degree();
    doc.field = field_spec_of(field);
    for (std::size_t i = 0; i < 6; ++i) {
        doc.omega[i].reserve(static_cast<std::size_t>(doc.d) + 1);
        for (int j = 0; j <= doc.d; ++j) doc.omega[i].push_back(F::str(s.form(i).coeff(j)));
    }
    return doc;
}

template <class F>
PlaneCurve<typename F::Element> curve_from_document(const F& field, const CurveDocument& doc) {
    using K = typename F::Element;
    PlaneCurve<K> c(doc.degree);
    if (doc.coeffs.size() != PlaneCurve<K>::monomial_count(doc.degree))
        throw document_error("curve document has wrong coefficient count");
    bool seen = false;
    for (std::size_t i = 0; i < doc.coeffs.size(); ++i) {
        c.coeff_at(i) = detail::parse_scalar(field, doc.coeffs[i]);
        if (!seen && !c.coeff_at(i).is_zero()) {
            if (!c.coeff_at(i).is_one()) throw document_error("curve document is not normalized");
            seen = true;
        }
    }
    return c;
}

template <class F>
CurveDocument document_from_curve(const F& field, const PlaneCurve<typename F::Element>& c) {
    using K = typename F::Element;
    CurveDocument doc;
    doc.degree = c.degree();
    PlaneCurve<K> n = c;
    for (std::size_t i = 0; i < c.coeffs().size(); ++i)
        if (!c.coeff_at(i).is_zero()) {
            n = c.coeff_at(i).inv() * c;
            break;
        }
    doc.coeffs.reserve(n.coeffs().size());
    for (std::size_t i = 0; i < n.coeffs().size(); ++i) doc.coeffs.push_back(F::str(n.coeff_at(i)));
    return doc;
}

template <class F, std::size_t N>
std::array<std::array<typename F::Element, N>, N> matrix_from_document(const F& field,
                                                                       const MatrixDocument& doc) {
    if (doc.size != N) throw document_error("matrix document has the wrong size");
    std::array<std::array<typename F::Element, N>, N> m;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m[i][j] = detail::parse_scalar(field, doc.entries[i][j]);
    return m;
}

template <class F, std::size_t N>
MatrixDocument document_from_matrix(const F& field,
                                    const std::array<std::array<typename F::Element, N>, N>& m) {
    MatrixDocument doc;
    doc.size = N;
    doc.entries.assign(N, std::vector<std::string>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) doc.entries[i][j] = F::str(m[i][j]);
    return doc;
}

template <class F>
ExtensionDatum<typename F::Element> extension_from_document(const F& field, const ExtensionDocument& doc) {
    using K = typename F::Element;
    ExtensionDatum<K> ex;
    ex.n = doc.n;
    const std::size_t len = 2 * static_cast<std::size_t>(doc.n) - 1;
    bool nz = false;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (doc.a[i][j].size() != len) throw document_error("extension block has wrong coefficient count");
            ex.a[i][j] = BinaryForm<K>(2 * doc.n - 2);
            for (std::size_t k = 0; k < len; ++k) {
                ex.a[i][j].coeff(static_cast<int>(k)) = detail::parse_scalar(field, doc.a[i][j][k]);
                nz = nz || !ex.a[i][j].coeff(static_cast<int>(k)).is_zero();
            }
        }
    if (!nz) throw document_error("extension datum is identically zero");
    return ex;
}

template <class F>
ExtensionDocument document_from_extension(const F& field, const ExtensionDatum<typename F::Element>& ex) {
    ExtensionDocument doc;
    doc.n = ex.n;
    doc.field = field_spec_of(field);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            doc.a[i][j].reserve(2 * static_cast<std::size_t>(ex.n) - 1);
            for (int k = 0; k <= 2 * ex.n - 2; ++k) doc.a[i][j].push_back(F::str(ex.a[i][j].coeff(k)));
        }
    return doc;
}

}  // namespace ruled
