#include <doctest.h>

#include "ruled/birational.hpp"

using namespace ruled;
using Q = Rational;
using FormQ = BinaryForm<Q>;

namespace {

FormQ form(std::vector<long> c) {
    std::vector<Q> v(c.begin(), c.end());
    return FormQ(v);
}

}  // namespace

TEST_CASE("shape validation") {
    ExtensionDatum<Q> ex;
    ex.n = 2;
    for (auto& row : ex.a)
        for (auto& e : row) e = FormQ(2);
    CHECK_THROWS_AS(trivialization_matrix(ex), math_error);  // identically zero
    ex.a[0][0] = form({1, 0, 0});
    ex.a[0][1] = FormQ(3);  // wrong degree
    CHECK_THROWS_AS(trivialization_matrix(ex), math_error);
}

TEST_CASE("a diagonal datum with definite entries trivializes") {
    ExtensionDatum<Q> ex;
    ex.n = 2;
    for (auto& row : ex.a)
        for (auto& e : row) e = FormQ(2);
    ex.a[0][0] = form({1, 0, 1});  // s^2 + t^2 pairs invertibly with linear forms
    ex.a[1][1] = form({1, 0, 1});
    CHECK(extension_is_trivializable(ex));
    auto m = trivialization_matrix(ex);
    CHECK(m.rows() == 4);
    CHECK_FALSE(m.det().is_zero());
    // a pure square is degenerate against its own root direction
    ex.a[0][0] = form({1, 0, 0});
    ex.a[1][1] = form({0, 0, 1});
    CHECK_FALSE(extension_is_trivializable(ex));
}

TEST_CASE("off-diagonal nilpotents do not trivialize") {
    ExtensionDatum<Q> ex;
    ex.n = 2;
    for (auto& row : ex.a)
        for (auto& e : row) e = FormQ(2);
    ex.a[0][1] = form({1, 2, 3});
    CHECK_FALSE(extension_is_trivializable(ex));
}

TEST_CASE("random data reconstruct balanced maps") {
    QField f;
    for (int n : {2, 3}) {
        auto ex = random_extension(f, n, 7);
        CHECK(extension_is_trivializable(ex));
        auto s = extension_to_surface(ex);
        CHECK(s.degree() == 2 * n);
        CHECK(validate(s).in_family);
        CHECK(splitting_type(s).a_q == n);
        CHECK(splitting_type(dual_surface(s)).a_q == n);
    }
}

TEST_CASE("explicit curve matches the singular locus") {
    QField f;
    auto ex = random_extension(f, 2, 19);
    auto s = extension_to_surface(ex);
    auto lhs = calcexp_curve(ex);
    auto rhs = psi_biform(s);
    CHECK(lhs.degree() == 2);
    CHECK(proportional(lhs, rhs));
}

TEST_CASE("prime-field data behave the same") {
    FpField f(10007);
    auto ex = random_extension(f, 2, 23);
    auto s = extension_to_surface(ex);
    CHECK(proportional(calcexp_curve(ex), psi_biform(s)));
}
