#include <doctest.h>

#include "ruled/generators.hpp"
#include "ruled/io.hpp"
#include "ruled/locus.hpp"

using namespace ruled;
using Q = Rational;

TEST_CASE("surface documents round-trip") {
    QField f;
    auto g = gen_type_a(f, 4, 1, 2);
    auto doc = document_from_surface(f, g.map);
    auto text = serialize(doc);
    auto doc2 = parse_surface_document(text);
    CHECK(doc == doc2);
    CHECK(serialize(doc2) == text);  // byte-stable canon
    auto s2 = surface_from_document(f, doc2);
    for (int i = 0; i < 6; ++i) CHECK(s2.form(i) == g.map.form(i));
}

TEST_CASE("prime-field surface documents") {
    FpField f(101);
    auto g = gen_type_a(f, 3, 1, 6);
    auto doc = document_from_surface(f, g.map);
    CHECK_FALSE(doc.field.rational);
    CHECK(doc.field.p == 101);
    auto text = serialize(doc);
    auto back = with_field(parse_surface_document(text).field, [&](auto& field) {
        auto s = surface_from_document(field, parse_surface_document(text));
        return s.degree();
    });
    CHECK(back == 3);
}

TEST_CASE("surface document rejections") {
    CHECK_THROWS_AS(parse_surface_document("not json"), document_error);
    CHECK_THROWS_AS(parse_surface_document("{}"), document_error);
    CHECK_THROWS_AS(parse_surface_document(R"({"d":1,"field":{"type":"Q"}})"), document_error);
    // wrong coefficient count
    CHECK_THROWS_AS(parse_surface_document(
                        R"({"d":2,"field":{"type":"Q"},"omega":[["1","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"]]})"),
                    document_error);
    // unexpected key
    CHECK_THROWS_AS(parse_surface_document(
                        R"({"d":1,"extra":0,"field":{"type":"Q"},"omega":[["1","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","1"]]})"),
                    document_error);
    // bad field
    CHECK_THROWS_AS(parse_surface_document(
                        R"({"d":1,"field":{"type":"Fp","p":15},"omega":[["1","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","1"]]})"),
                    document_error);
    CHECK_THROWS_AS(parse_surface_document(
                        R"({"d":1,"field":{"type":"R"},"omega":[["1","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","1"]]})"),
                    document_error);
    // all-zero omega
    QField f;
    SurfaceDocument doc;
    doc.d = 1;
    doc.field = FieldSpec{true, 0};
    doc.omega = {{{"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}}};
    CHECK_THROWS_AS(surface_from_document(f, doc), document_error);
}

TEST_CASE("curve documents normalize the leading coefficient") {
    QField f;
    PlaneCurve<Q> c(2);
    c.coeff(2, 0) = Q(3);
    c.coeff(0, 0) = Q(-6);
    auto doc = document_from_curve(f, c);
    CHECK(doc.degree == 2);
    CHECK(doc.coeffs[0] == "1");  // scaled so the first nonzero is one
    CHECK(doc.coeffs[5] == "-2");
    auto text = serialize(doc);
    auto c2 = curve_from_document(f, parse_curve_document(text));
    CHECK(proportional(c2, c));

    // consumer chooses the field: same bytes parse mod p
    FpField fp(101);
    auto cp = curve_from_document(fp, parse_curve_document(text));
    CHECK(cp.coeff(0, 0) == fp.make(-2));
}

TEST_CASE("curve document rejections") {
    CHECK_THROWS_AS(parse_curve_document(R"({"degree":2,"coeffs":["1","0","0"]})"), document_error);
    CHECK_THROWS_AS(parse_curve_document(R"({"degree":-1,"coeffs":["1"]})"), document_error);
    QField f;
    // leading coefficient must already be one
    auto doc = parse_curve_document(R"({"degree":1,"coeffs":["2","0","0"]})");
    CHECK_THROWS_AS(curve_from_document(f, doc), document_error);
    auto zero = parse_curve_document(R"({"degree":1,"coeffs":["0","0","0"]})");
    CHECK(curve_from_document(f, zero).is_zero());
}

TEST_CASE("matrix documents") {
    MatrixDocument doc;
    doc.size = 2;
    doc.entries = {{"1", "2"}, {"0", "1"}};
    auto text = serialize(doc);
    auto doc2 = parse_matrix_document(text);
    CHECK(doc == doc2);
    QField f;
    auto m = matrix_from_document<QField, 2>(f, doc2);
    CHECK(m[0][1] == Q(2));
    CHECK_THROWS_AS((matrix_from_document<QField, 4>(f, doc2)), document_error);
    CHECK_THROWS_AS(parse_matrix_document(R"({"entries":[["1","2"],["0"]]})"), document_error);
    CHECK_THROWS_AS(parse_matrix_document(R"({"entries":[]})"), document_error);
}

TEST_CASE("extension documents round-trip") {
    QField f;
    auto ex = random_extension(f, 2, 3);
    auto doc = document_from_extension(f, ex);
    CHECK(doc.n == 2);
    auto text = serialize(doc);
    auto ex2 = extension_from_document(f, parse_extension_document(text));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(ex2.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  ex.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    CHECK_THROWS_AS(parse_extension_document(R"({"n":1,"field":{"type":"Q"},"a":[[["1"],["1"]],[["1"],["1"]]]})"),
                    document_error);
}

TEST_CASE("fraction literals reduce modulo p") {
    FpField f(101);
    CHECK(detail::parse_scalar(f, "1/2") == f.make(51));  // 2 * 51 = 102 = 1
    CHECK(detail::parse_scalar(f, "-3") == f.make(98));
    CHECK_THROWS_AS(detail::parse_scalar(f, "1/0"), document_error);
    QField q;
    CHECK(detail::parse_scalar(q, "-7/3") == Q(-7, 3));
}
