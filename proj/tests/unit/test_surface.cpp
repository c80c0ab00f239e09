#include <doctest.h>

#include <random>

#include "ruled/field.hpp"
#include "ruled/surface.hpp"

using namespace ruled;
using Q = Rational;
using FormQ = BinaryForm<Q>;

namespace {

// the split worked example: lines joining the twisted cubic to its tangent
// direction; coordinates (s^3, s^2 t, s t^2, s t^2, t^3, 0)
SurfaceMap<Q> worked_map() {
    std::array<FormQ, 6> w{FormQ(3), FormQ(3), FormQ(3), FormQ(3), FormQ(3), FormQ(3)};
    w[0].coeff(0) = Q(1);
    w[1].coeff(1) = Q(1);
    w[2].coeff(2) = Q(1);
    w[3].coeff(2) = Q(1);
    w[4].coeff(3) = Q(1);
    return SurfaceMap<Q>(w);
}

SurfaceMap<Q> random_map(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    QField f;
    std::array<FormQ, 4> t1, t2;
    for (auto& x : t1) x = random_form(1, f, rng);
    for (auto& x : t2) x = random_form(d - 1, f, rng);
    return SurfaceMap<Q>(star6(wedge_of(t1, t2)));
}

}  // namespace

TEST_CASE("star is an involution compatible with the pairing") {
    std::array<Q, 6> x{Q(1), Q(2), Q(3), Q(4), Q(5), Q(6)};
    CHECK(star6(star6(x)) == x);
    std::array<Q, 6> y{Q(-1), Q(0), Q(2), Q(7), Q(1), Q(3)};
    CHECK(plucker_pairing(x, y) == plucker_pairing(y, x));
    CHECK(plucker_pairing(star6(x), star6(y)) == plucker_pairing(x, y));
}

TEST_CASE("wedge coordinates satisfy the quadric") {
    std::array<Q, 4> a{Q(1), Q(2), Q(3), Q(4)}, b{Q(0), Q(1), Q(-1), Q(2)};
    auto w = wedge_of(a, b);
    CHECK((w[0] * w[5] - w[1] * w[4] + w[2] * w[3]).is_zero());
    CHECK(plucker_pairing(w, w).is_zero());
}

TEST_CASE("isotropy form doubles into the pairing") {
    auto s = random_map(3, 77);
    auto w = s.forms();
    CHECK(plucker_pairing(w, w) == Q(2) * s.isotropy_form());
    CHECK(s.isotropy_form().is_zero());
}

TEST_CASE("worked example validates") {
    auto s = worked_map();
    CHECK(s.degree() == 3);
    auto v = validate(s);
    CHECK(v.decomposable);
    CHECK(v.base_point_free);
    CHECK(v.in_family);
    CHECK_FALSE(v.boundary_factor.has_value());
}

TEST_CASE("common factors are detected") {
    auto s = random_map(3, 5);
    FormQ xi(1);
    xi.coeff(0) = Q(1);
    xi.coeff(1) = Q(-2);
    auto b = boundary_compose(s, xi);
    auto v = validate(b);
    CHECK(v.decomposable);
    CHECK_FALSE(v.base_point_free);
    CHECK_FALSE(v.in_family);
    REQUIRE(v.boundary_factor.has_value());
    CHECK(proportional(*v.boundary_factor, xi));
}

TEST_CASE("generator lines and the meet predicate") {
    auto s = random_map(4, 13);
    std::array<Q, 2> t0{Q(1), Q(2)}, t1{Q(3), Q(-1)};
    auto l0 = generator_line(s, t0);
    auto l1 = generator_line(s, t1);
    CHECK(lines_meet(s, t0, t1) == lines_meet_det_oracle(l0, l1));
    CHECK(lines_meet(s, t0, t0));
}

TEST_CASE("group actions compose and invert") {
    auto s = random_map(3, 41);
    Matrix<Q> g(4, 4);
    long entries[4][4] = {{1, 2, 0, 1}, {0, 1, 1, 0}, {3, 0, 1, 0}, {0, 0, 2, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Q(entries[i][j]);
    REQUIRE_FALSE(g.det().is_zero());
    auto moved = act_pgl4(s, g);
    CHECK(moved.isotropy_form().is_zero());

    // undo with the inverse matrix
    Matrix<Q> aug(4, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) aug(i, j) = g(i, j);
        aug(i, 4 + i) = Q(1);
    }
    aug.rref();
    Matrix<Q> ginv(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) ginv(i, j) = aug(i, 4 + j);
    auto back = act_pgl4(moved, ginv);
    for (int i = 0; i < 6; ++i) CHECK(back.form(i) == s.form(i));
}

TEST_CASE("parameter substitutions act on the right") {
    auto s = random_map(3, 9);
    std::array<std::array<Q, 2>, 2> h{{{Q(1), Q(1)}, {Q(0), Q(1)}}};
    auto moved = act_pgl2(s, h);
    std::array<Q, 2> p{Q(2), Q(5)};
    std::array<Q, 2> hp{h[0][0] * p[0] + h[0][1] * p[1], h[1][0] * p[0] + h[1][1] * p[1]};
    auto lhs = moved.eval(p);
    auto rhs = s.eval(hp);
    for (int i = 0; i < 6; ++i) CHECK(lhs[static_cast<std::size_t>(i)] == rhs[static_cast<std::size_t>(i)]);
}

TEST_CASE("duality swaps the two kernels") {
    std::mt19937_64 rng(3);
    QField f;
    std::array<Q, 4> pt{Q(1), Q(2), Q(0), Q(-1)};
    std::array<FormQ, 4> vt;
    for (auto& x : vt) x = random_form(3, f, rng);
    // all generators through the point pt: wedge of a constant with a moving point
    auto minor = [&](int i, int j) {
        FormQ r(3);
        for (int k = 0; k <= 3; ++k)
            r.coeff(k) = pt[static_cast<std::size_t>(i)] * vt[static_cast<std::size_t>(j)].coeff(k) -
                         pt[static_cast<std::size_t>(j)] * vt[static_cast<std::size_t>(i)].coeff(k);
        return r;
    };
    std::array<FormQ, 6> w{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
    SurfaceMap<Q> through_point(w);
    auto pk = constant_wedge_kernel(through_point);
    REQUIRE(pk.size() == 1);
    // kernel vector is the common point, projectively
    std::size_t nz = 0;
    while (pt[nz].is_zero()) ++nz;
    for (std::size_t i = 0; i < 4; ++i) CHECK(pk[0][i] * pt[nz] == pt[i] * pk[0][nz]);
    // dual surface has the plane kernel instead
    auto ck = constant_contraction_kernel(dual_surface(through_point));
    CHECK(ck.size() == 1);
    CHECK(stability(through_point).cls == StabilityClass::Unstable);
}

TEST_CASE("degree-3 maps are never stable") {
    auto s = worked_map();
    auto rep = stability(s);
    CHECK(rep.cls != StabilityClass::Stable);
    CHECK(rep.kernel_dim >= 2);
}
