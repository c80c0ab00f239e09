#include <doctest.h>

#include "ruled/generators.hpp"
#include "ruled/locus.hpp"

using namespace ruled;
using Q = Rational;
using FormQ = BinaryForm<Q>;

namespace {

SurfaceMap<Q> worked_map() {
    std::array<FormQ, 6> w{FormQ(3), FormQ(3), FormQ(3), FormQ(3), FormQ(3), FormQ(3)};
    w[0].coeff(0) = Q(1);
    w[1].coeff(1) = Q(1);
    w[2].coeff(2) = Q(1);
    w[3].coeff(2) = Q(1);
    w[4].coeff(3) = Q(1);
    return SurfaceMap<Q>(w);
}

}  // namespace

TEST_CASE("coefficient pairing matrix of the worked example") {
    auto m = phi_matrix(worked_map());
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Q expect(0);
            if ((i == 1 && j == 3) || (i == 3 && j == 1)) expect = Q(-1);
            if (i == 2 && j == 2) expect = Q(2);
            CHECK(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == expect);
        }
    CHECK(m.rank() == 3);
    CHECK(phi_rank(worked_map()) == 3);
}

TEST_CASE("both singular-locus routes give the third coordinate line") {
    auto s = worked_map();
    auto bi = psi_biform(s);
    auto det = psi_determinantal(s);
    REQUIRE(bi.degree() == 1);
    REQUIRE(det.degree() == 1);
    for (const auto* c : {&bi, &det}) {
        CHECK(c->coeff(1, 0).is_zero());
        CHECK(c->coeff(0, 1).is_zero());
        CHECK_FALSE(c->coeff(0, 0).is_zero());
    }
    auto tc = check_main_theorem(s);
    CHECK(tc.equal);
    CHECK_FALSE(tc.scale.is_zero());
    // reported scalar satisfies det == scale * biform
    auto scaled = tc.scale * tc.biform_route;
    CHECK(scaled == tc.determinantal_route);
}

TEST_CASE("incidence biform is symmetric and diagonal-divisible") {
    auto s = worked_map();
    auto f = incidence_biform(s);
    CHECK(f.symmetric());
    auto once = f.divide_diagonal();
    REQUIRE(once.has_value());
    CHECK(once->divide_diagonal().has_value());
}

TEST_CASE("locus degree is d - 2") {
    QField f;
    for (int d : {4, 5, 6}) {
        auto g = gen_type_a(f, d, 1 + d % 2, 17 + static_cast<std::uint64_t>(d));
        auto psi = psi_biform(g.map);
        CHECK(psi.degree() == d - 2);
        CHECK(pinch_points(g.map).degree() == 2 * (d - 2));
    }
}

TEST_CASE("routes agree away from the worked example") {
    QField f;
    auto g = gen_type_a(f, 5, 2, 23);
    auto tc = check_main_theorem(g.map);
    CHECK(tc.equal);
    CHECK(tc.determinantal_route == tc.scale * tc.biform_route);
}

TEST_CASE("equivariance under parameter substitution") {
    FpField f(10007);
    auto g = gen_type_a(f, 4, 1, 31);
    std::array<std::array<Fp, 2>, 2> h{{{f.make(2), f.make(3)}, {f.make(1), f.make(2)}}};
    auto lhs = psi_biform(act_pgl2(g.map, h));
    auto rhs = compose_linear(psi_biform(g.map), pair_space_action(h));
    CHECK(proportional(lhs, rhs));
}

TEST_CASE("invariance under duality and point actions") {
    QField f;
    auto g = gen_type_a(f, 4, 2, 37);
    auto psi = psi_biform(g.map);
    CHECK(proportional(psi_biform(dual_surface(g.map)), psi));
    Matrix<Q> m(4, 4);
    long vals[4][4] = {{1, 0, 2, 0}, {1, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Q(vals[i][j]);
    CHECK(proportional(psi_biform(act_pgl4(g.map, m)), psi));
    CHECK(phi_rank(act_pgl4(g.map, m)) == phi_rank(g.map));
}

TEST_CASE("cones have no singular-locus curve") {
    QField f;
    std::mt19937_64 rng(2);
    std::array<Q, 4> pt{Q(1), Q(0), Q(2), Q(1)};
    std::array<FormQ, 4> vt;
    for (auto& x : vt) x = random_form(3, f, rng);
    auto minor = [&](int i, int j) {
        FormQ r(3);
        for (int k = 0; k <= 3; ++k)
            r.coeff(k) = pt[static_cast<std::size_t>(i)] * vt[static_cast<std::size_t>(j)].coeff(k) -
                         pt[static_cast<std::size_t>(j)] * vt[static_cast<std::size_t>(i)].coeff(k);
        return r;
    };
    SurfaceMap<Q> cone({minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)});
    CHECK_THROWS_AS(psi_biform(cone), math_error);
}

TEST_CASE("root splitting over both fields") {
    QField f;
    FormQ g = FormQ(std::vector<Q>{Q(1), Q(-3), Q(2)});  // (s - t)(s - 2t)
    auto roots = split_into_roots(g);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(g.eval(r[0], r[1]).is_zero());

    FpField fp(101);
    BinaryForm<Fp> h(2);
    h.coeff(0) = fp.make(1);
    h.coeff(1) = fp.make(-3);
    h.coeff(2) = fp.make(2);
    auto fr = split_into_roots(h);
    REQUIRE(fr.size() == 2);
    for (const auto& r : fr) CHECK(h.eval(r[0], r[1]).is_zero());
}

TEST_CASE("boundary factors square-and-tangent out") {
    QField f;
    auto inner = gen_type_a(f, 4, 1, 3);
    FormQ xi(2);
    xi.coeff(0) = Q(1);
    xi.coeff(1) = Q(-5);
    xi.coeff(2) = Q(6);  // (s - 2t)(s - 3t)
    CHECK(boundary_factorization_check(inner.map, xi));
}
