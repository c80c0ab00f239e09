#include <doctest.h>

#include "ruled/field.hpp"
#include "ruled/matrix.hpp"

using namespace ruled;

namespace {

Matrix<Rational> from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix<Rational> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rank and determinant") {
    auto m = from_rows({{1, 2}, {3, 4}});
    CHECK(m.rank() == 2);
    CHECK(m.det() == Rational(-2));

    auto s = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(s.rank() == 2);
    CHECK(s.det() == Rational(0));
}

TEST_CASE("kernel vectors annihilate the matrix") {
    auto m = from_rows({{1, 2, 3}, {4, 5, 6}});
    auto kern = m.kernel();
    REQUIRE(kern.size() == 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * kern[0][j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("solve") {
    auto m = from_rows({{2, 1}, {1, 3}});
    auto sol = m.solve({Rational(5), Rational(10)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(1));
    CHECK((*sol)[1] == Rational(3));

    auto bad = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(bad.solve({Rational(0), Rational(1)}).has_value());
    CHECK(bad.solve({Rational(1), Rational(1)}).has_value());
}

TEST_CASE("rref leaves pivot rows normalized") {
    auto m = from_rows({{0, 2, 4}, {1, 1, 1}});
    auto pivots = m.rref();
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    CHECK(m(0, 0) == Rational(1));
    CHECK(m(1, 1) == Rational(1));
    CHECK(m(0, 1) == Rational(0));
    CHECK(m(1, 0) == Rational(0));
}

TEST_CASE("prime field elimination") {
    Matrix<Fp> m(3, 3);
    long vals[3][3] = {{1, 5, 2}, {0, 3, 7}, {4, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Fp(vals[i][j], 11);
    CHECK(m.rank() == 3);
    CHECK_FALSE(m.det().is_zero());

    // force a dependent row
    for (int j = 0; j < 3; ++j) m(2, static_cast<std::size_t>(j)) = Fp(2, 11) * m(0, static_cast<std::size_t>(j));
    CHECK(m.rank() == 2);
    CHECK(m.det().is_zero());
    CHECK(m.kernel().size() == 1);
}
