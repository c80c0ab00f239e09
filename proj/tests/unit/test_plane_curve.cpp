#include <doctest.h>

#include <random>

#include "ruled/field.hpp"
#include "ruled/plane_curve.hpp"

using namespace ruled;
using Q = Rational;
using CurveQ = PlaneCurve<Q>;

namespace {

CurveQ random_curve(int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    QField f;
    CurveQ c(k);
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) c.coeff_at(i) = f.random(rng);
    return c;
}

}  // namespace

TEST_CASE("monomial enumeration is graded-lex") {
    CurveQ c(2);
    // e0^2, e0 e1, e0 e2, e1^2, e1 e2, e2^2
    CHECK(c.index(2, 0) == 0);
    CHECK(c.index(1, 1) == 1);
    CHECK(c.index(1, 0) == 2);
    CHECK(c.index(0, 2) == 3);
    CHECK(c.index(0, 1) == 4);
    CHECK(c.index(0, 0) == 5);
    CHECK(CurveQ::monomial_count(2) == 6);
    CHECK(CurveQ::monomial_count(3) == 10);
}

TEST_CASE("evaluation matches the pair embedding") {
    auto c = random_curve(3, 11);
    std::array<Q, 2> p{Q(2), Q(-1)}, q{Q(3), Q(5)};
    CHECK(c.eval_at_pair(p, q) == c.eval(p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]));
    CHECK(c.eval_at_pair(p, q) == c.eval_at_pair(q, p));
}

TEST_CASE("lift and descend are inverse") {
    auto c = random_curve(3, 5);
    auto f = c.lift();
    CHECK(f.symmetric());
    CHECK(descend_biform(f) == c);
}

TEST_CASE("descend refuses asymmetric input") {
    BiForm<Q> f(2, 2);
    f.coeff(0, 1) = Q(1);
    CHECK_THROWS_AS(descend_biform(f), math_error);
}

TEST_CASE("the diagonal conic") {
    auto c0 = veronese_conic<Q>();
    // vanishes identically on the parameter diagonal
    CHECK(c0.restrict_to_conic().is_zero());
    std::array<Q, 2> p{Q(4), Q(7)};
    CHECK(c0.eval_at_pair(p, p).is_zero());
    std::array<Q, 2> q{Q(1), Q(0)};
    CHECK_FALSE(c0.eval_at_pair(p, q).is_zero());
}

TEST_CASE("tangent lines touch the conic") {
    std::array<Q, 2> p{Q(2), Q(3)};
    auto l = tangent_line(p);
    for (long x = -2; x <= 2; ++x) {
        std::array<Q, 2> q{Q(x), Q(1)};
        CHECK(l.eval_at_pair(p, q).is_zero());
    }
    // and equals the descent of the split square through p
    BinaryForm<Q> lin(1);
    lin.coeff(0) = p[1];
    lin.coeff(1) = -p[0];
    auto sq = BiForm<Q>::split_product(lin, lin);
    CHECK(descend_biform(sq) == l);
}

TEST_CASE("division by the conic") {
    auto c0 = veronese_conic<Q>();
    auto x = random_curve(2, 99);
    auto g = c0 * x;
    auto q = divide_by_conic(g);
    REQUIRE(q.has_value());
    CHECK(*q == x);
    CHECK_FALSE(divide_by_conic(random_curve(4, 3)).has_value());

    auto [quot, rem] = conic_divmod(random_curve(5, 17));
    auto back = quot * c0 + rem;
    CHECK(back == random_curve(5, 17));
    for (int a = 0; a <= 5; ++a)
        for (int b = 2; a + b <= 5; ++b) CHECK(rem.coeff(a, b).is_zero());
}

TEST_CASE("linear substitution matches point transport") {
    auto c = random_curve(2, 21);
    std::array<std::array<Q, 2>, 2> h{{{Q(2), Q(1)}, {Q(1), Q(1)}}};
    auto m = pair_space_action(h);
    auto composed = compose_linear(c, m);
    std::array<Q, 2> p{Q(3), Q(-2)}, q{Q(1), Q(4)};
    auto hp = std::array<Q, 2>{h[0][0] * p[0] + h[0][1] * p[1], h[1][0] * p[0] + h[1][1] * p[1]};
    auto hq = std::array<Q, 2>{h[0][0] * q[0] + h[0][1] * q[1], h[1][0] * q[0] + h[1][1] * q[1]};
    CHECK(composed.eval_at_pair(p, q) == c.eval_at_pair(hp, hq));
}

TEST_CASE("identity substitution fixes curves") {
    auto c = random_curve(3, 8);
    std::array<std::array<Q, 3>, 3> id{};
    for (int i = 0; i < 3; ++i) id[i][i] = Q(1);
    CHECK(compose_linear(c, id) == c);
}

TEST_CASE("proportionality scalar") {
    auto c = random_curve(2, 31);
    auto d = Q(7, 3) * c;
    CHECK(proportional(c, d));
    auto sc = proportionality_scalar(d, c);
    REQUIRE(sc.has_value());
    CHECK(*sc == Q(7, 3));
    auto e = d;
    e.coeff(0, 0) += Q(1);
    CHECK_FALSE(proportional(c, e));
    CHECK_FALSE(proportionality_scalar(e, c).has_value());
}
