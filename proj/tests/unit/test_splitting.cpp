#include <doctest.h>

#include "ruled/generators.hpp"
#include "ruled/splitting.hpp"

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

template <class K>
bool annihilates(const std::array<std::array<BinaryForm<K>, 4>, 4>& rows, const FormVec4<K>& g) {
    for (int i = 0; i < 4; ++i) {
        BinaryForm<K> acc(rows[0][0].degree() + g[0].degree());
        for (int j = 0; j < 4; ++j)
            acc = acc + rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(j)];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("worked example splits as (1, 2)") {
    auto s = worked_map();
    auto st = splitting_type(s);
    CHECK(st.a_q == 1);
    auto sq = split_quotient(s);
    CHECK(sq.a == 1);
    // the degree-1 generator is (0, 0, t, -s) up to scale
    CHECK(sq.g1[0].is_zero());
    CHECK(sq.g1[1].is_zero());
    CHECK(sq.g1[2].coeff(0).is_zero());
    CHECK(sq.g1[3].coeff(1).is_zero());
    CHECK(sq.g1[2].coeff(1) == -sq.g1[3].coeff(0));
    // and the degree-2 one is (t^2, -st, s^2, 0) up to scale
    CHECK(sq.g2[3].is_zero());
    CHECK(sq.g2[0].coeff(2) == -sq.g2[1].coeff(1));
    CHECK(sq.g2[0].coeff(2) == sq.g2[2].coeff(0));
    CHECK(sq.g2[0].coeff(0).is_zero());
    CHECK(sq.g2[0].coeff(1).is_zero());
}

TEST_CASE("syzygies actually annihilate") {
    auto s = worked_map();
    auto zero = BinaryForm<Q>(s.degree());
    auto crows = contraction_rows(s.forms(), zero);
    for (const auto& g : contraction_syzygies(s, 2)) CHECK(annihilates(crows, g));
    auto wrows = wedge_rows(s.forms(), zero);
    for (const auto& g : wedge_syzygies(s, 2)) CHECK(annihilates(wrows, g));
}

TEST_CASE("syzygy dimensions follow the free resolution") {
    QField f;
    auto g = gen_type_a(f, 5, 2, 4);
    const int d = 5, a = 2;
    REQUIRE(splitting_type(g.map).a_q == a);
    for (int m = 0; m <= d; ++m) {
        const int expect = std::max(0, m - a + 1) + std::max(0, m - (d - a) + 1);
        CHECK(contraction_syzygies(g.map, m).size() == static_cast<std::size_t>(expect));
    }
}

TEST_CASE("duality exchanges the two syzygy modules") {
    QField f;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto g = gen_type_a(f, 4, 1, seed);
        auto st = splitting_type(g.map);
        auto dt = splitting_type(dual_surface(g.map));
        CHECK(st.a_q == dt.b_k);
        CHECK(st.b_k == dt.a_q);
    }
}

TEST_CASE("split generators reconstruct the coordinates") {
    QField f;
    auto g = gen_type_a(f, 5, 2, 11);
    auto sq = split_quotient(g.map);
    auto chi = star6(wedge_of(sq.g1, sq.g2));
    const auto& w = g.map.forms();
    // one scalar relates the whole tuples: cross-multiply every coefficient
    // against a fixed nonzero anchor
    std::size_t p = 0;
    while (chi[p].is_zero()) ++p;
    REQUIRE_FALSE(w[p].is_zero());
    const Q cw = w[p].coeff(w[p].t_order());
    const Q cc = chi[p].coeff(chi[p].t_order());
    for (std::size_t i = 0; i < 6; ++i)
        for (int k = 0; k <= g.map.degree(); ++k)
            CHECK(chi[i].coeff(k) * cw == w[i].coeff(k) * cc);
}

TEST_CASE("degenerate input is rejected") {
    // a map with no syzygy up to its degree: non-decomposable coordinates
    std::array<FormQ, 6> w{FormQ(2), FormQ(2), FormQ(2), FormQ(2), FormQ(2), FormQ(2)};
    w[0].coeff(0) = Q(1);  // s^2
    w[5].coeff(2) = Q(1);  // t^2, and w0 w5 term survives in the quadric
    SurfaceMap<Q> s(w);
    CHECK_FALSE(validate(s).decomposable);
    CHECK_THROWS_AS(splitting_type(s), math_error);
}
