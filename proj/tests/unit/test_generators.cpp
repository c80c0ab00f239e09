#include <doctest.h>

#include "ruled/generators.hpp"
#include "ruled/locus.hpp"

using namespace ruled;
using Q = Rational;

TEST_CASE("seeded construction is reproducible") {
    QField f;
    auto g1 = gen_type_a(f, 5, 2, 77);
    auto g2 = gen_type_a(f, 5, 2, 77);
    for (int i = 0; i < 6; ++i) CHECK(g1.map.form(i) == g2.map.form(i));
    CHECK(g1.rec.attempts == g2.rec.attempts);
    auto g3 = gen_type_a(f, 5, 2, 78);
    bool same = true;
    for (int i = 0; i < 6; ++i) same = same && g1.map.form(i) == g3.map.form(i);
    CHECK_FALSE(same);
}

TEST_CASE("generic maps meet their contract") {
    QField f;
    for (std::uint64_t seed : {0ull, 1ull}) {
        auto g = gen_type_a(f, 6, 2, seed);
        CHECK(validate(g.map).in_family);
        CHECK(splitting_type(g.map).a_q == 2);
        CHECK(phi_rank(g.map) == 6);
        CHECK(g.rec.d == 6);
        CHECK(g.rec.a == 2);
    }
    CHECK_THROWS_AS(gen_type_a(f, 4, 0, 0), math_error);
}

TEST_CASE("common-line maps sit on the semistable boundary") {
    QField f;
    auto g = gen_cone(f, 5, 2, 3);
    CHECK(g.map.form(0).is_zero());
    CHECK(phi_rank(g.map) == 4);
    auto rep = stability(g.map);
    CHECK(rep.cls == StabilityClass::StrictlySemistable);
    REQUIRE(rep.isotropic_witness.has_value());
    auto z = *rep.isotropic_witness;
    CHECK(plucker_pairing(z, z).is_zero());
}

TEST_CASE("corank-one maps are stable") {
    QField f;
    auto g = gen_rank5(f, 6, 5);
    CHECK(phi_rank(g.map) == 5);
    auto rep = stability(g.map);
    CHECK(rep.cls == StabilityClass::Stable);
    CHECK(rep.kernel_dim == 1);
}

TEST_CASE("rank-three maps carry a double pencil") {
    QField f;
    auto g = gen_rank3(f, 5, 2, 9);
    CHECK(phi_rank(g.map) == 3);
    CHECK(g.map.isotropy_form().is_zero());
    CHECK(validate(g.map).in_family);
    CHECK(g.rec.pencil_u.degree() == 2);
    CHECK(g.rec.factor_roots.size() == static_cast<std::size_t>(g.rec.factor.degree()));
}

TEST_CASE("tangent developables") {
    QField f;
    auto g = gen_developable(f, 3, 1);  // twisted cubic, surface degree 4
    CHECK(g.map.degree() == 4);
    CHECK(validate(g.map).in_family);
    auto psi = psi_biform(g.map);
    CHECK(proportional(psi, veronese_conic<Q>()));
}

TEST_CASE("prime field generation") {
    FpField f(10007);
    auto g = gen_type_a(f, 5, 1, 12);
    CHECK(validate(g.map).in_family);
    CHECK(splitting_type(g.map).a_q == 1);
    // a_Q = 1 pins the image to span(a^V + b^V) whose pairing has rank 4
    CHECK(phi_rank(g.map) == 4);
}
