#include <doctest.h>

#include "ruled/biform.hpp"

using namespace ruled;
using Q = Rational;
using FormQ = BinaryForm<Q>;

namespace {

FormQ form(std::vector<long> c) {
    std::vector<Q> v(c.begin(), c.end());
    return FormQ(v);
}

}  // namespace

TEST_CASE("product against pointwise evaluation") {
    auto f = form({1, -2, 3});     // s^2 - 2st + 3t^2
    auto g = form({0, 1, 0, 5});   // s^2 t + 5 t^3
    auto h = f * g;
    CHECK(h.degree() == 5);
    Q s0(3), t0(-2);
    CHECK(h.eval(s0, t0) == f.eval(s0, t0) * g.eval(s0, t0));
}

TEST_CASE("derivatives") {
    auto f = form({2, 0, -1, 4});  // 2s^3 - st^2 + 4t^3
    auto fs = f.derivative_s();
    CHECK(fs == form({6, 0, -1}));
    auto ft = f.derivative_t();
    CHECK(ft == form({0, -2, 12}));
}

TEST_CASE("vanishing orders") {
    auto f = form({0, 0, 1, 2, 0});  // s^2t^2 + 2st^3
    CHECK(f.t_order() == 2);
    CHECK(f.s_order() == 1);
    CHECK(FormQ(3).is_zero());
    CHECK(FormQ(3).t_order() == 4);
}

TEST_CASE("exact division") {
    auto f = form({1, -1});  // s - t
    auto g = form({1, 2});
    auto p = f * g;
    auto q = divide_exact(p, f);
    REQUIRE(q.has_value());
    CHECK(*q == g);
    CHECK_FALSE(divide_exact(p + form({0, 0, 1}), f).has_value());

    // pure s / t factors
    auto st = form({0, 1, 0});  // st
    auto by_t = divide_exact(st, form({0, 1}));
    REQUIRE(by_t.has_value());
    CHECK(*by_t == form({1, 0}));
}

TEST_CASE("gcd of split forms") {
    auto a = form({1, -1}) * form({1, -2}) * form({1, -2});
    auto b = form({1, -2}) * form({1, -3});
    auto g = poly_gcd(a, b);
    CHECK(g == form({1, -2}));  // monic in the leading-s convention

    CHECK(poly_gcd(form({0, 1}) * a, form({0, 1}) * b) == form({0, 1}) * form({1, -2}));
    CHECK(poly_gcd(a, form({1, 7})).degree() == 0);
}

TEST_CASE("squarefree part") {
    auto l1 = form({1, -1}), l2 = form({2, 5});
    auto f = l1 * l1 * l1 * l2 * l2;
    CHECK_FALSE(squarefree(f));
    auto sf = squarefree_part(f);
    CHECK(sf.degree() == 2);
    CHECK(proportional(sf, l1 * l2));
    CHECK(squarefree(l1 * l2));
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    auto f = form({1, -1}) * form({1, -2});
    auto g = form({1, -2}) * form({1, -3});
    CHECK(resultant(f, g).is_zero());
    auto h = form({1, -4}) * form({1, -3});
    CHECK_FALSE(resultant(f, h).is_zero());
}

TEST_CASE("apolar contraction lowers degree") {
    auto a = form({0, 1, 0, 0});  // s^2 t
    auto s1 = form({1, 0});
    auto t1 = form({0, 1});
    CHECK(apolar_contract(a, s1) == -a.derivative_t());
    CHECK(apolar_contract(a, t1) == a.derivative_s());
    CHECK(apolar_contract(a, s1) == form({-1, 0, 0}));
    auto st = form({0, 1, 0});
    CHECK(apolar_contract(a, st).degree() == 1);
}

TEST_CASE("biform split products and symmetry") {
    auto f = form({1, 2}), g = form({3, -1});
    auto fg = BiForm<Q>::split_product(f, g);
    CHECK(fg.deg_st() == 1);
    CHECK(fg.deg_uv() == 1);
    CHECK(fg.coeff(0, 0) == Q(3));
    CHECK(fg.coeff(1, 1) == Q(-2));
    CHECK_FALSE(fg.symmetric());
    auto sym = fg + fg.swapped();
    CHECK(sym.symmetric());
}

TEST_CASE("division by the diagonal") {
    auto d = BiForm<Q>::diagonal_form();
    auto f = form({1, -2, 0, 3});
    auto g = form({2, 1});
    auto prod = d * BiForm<Q>::split_product(f, g);
    auto back = prod.divide_diagonal();
    REQUIRE(back.has_value());
    CHECK(*back == BiForm<Q>::split_product(f, g));

    auto sq = d * d * BiForm<Q>::split_product(f, f);
    CHECK(sq.divide_diagonal_sq() == BiForm<Q>::split_product(f, f));

    // inexact division is refused
    CHECK_FALSE(BiForm<Q>::split_product(f, g).divide_diagonal().has_value());
}

TEST_CASE("diagonal restriction") {
    auto f = form({1, 0, 2}), g = form({0, 1, -1});
    auto fg = BiForm<Q>::split_product(f, g);
    auto r = fg.restrict_diagonal();
    CHECK(r == f * g);
    CHECK(BiForm<Q>::diagonal_form().restrict_diagonal().is_zero());
}

TEST_CASE("biform coefficient slices") {
    auto f = form({1, 2, 3}), g = form({4, 5});
    auto fg = BiForm<Q>::split_product(f, g);
    CHECK(fg.uv_coefficient(0) == Q(4) * f);
    CHECK(fg.uv_coefficient(1) == Q(5) * f);
    CHECK(fg.st_coefficient(2) == Q(3) * g);
    CHECK(fg.eval_left({Q(1), Q(1)}) == Q(6) * g);
}
