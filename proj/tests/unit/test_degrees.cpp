#include <doctest.h>

#include "ruled/degrees.hpp"
#include "ruled/errors.hpp"

using namespace ruled;

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(40, 20) == mpz_class("137846528820"));
}

TEST_CASE("symmetric degeneracy degrees") {
    // corank one is the determinant hypersurface
    for (int n = 2; n <= 8; ++n) CHECK(harris_tu_symmetric(n, n - 1) == n);
    // classical small loci
    CHECK(harris_tu_symmetric(3, 1) == 4);   // rank-one quadrics in three variables
    CHECK(harris_tu_symmetric(4, 2) == 10);
    CHECK(harris_tu_symmetric(4, 1) == 8);   // second Veronese of projective three-space
}

TEST_CASE("stratum degree table") {
    auto t6 = stratum_degrees(6);
    CHECK(t6.i == 7);
    auto t5 = stratum_degrees(5);
    CHECK(t5.j == 6);
    auto t3 = stratum_degrees(3);
    CHECK(t3.p == 4);
    // consistency with the closed product
    for (int d = 3; d <= 12; ++d) {
        auto t = stratum_degrees(d);
        const int n = d + 1;
        if (n >= 6) CHECK(t.i == harris_tu_symmetric(n, 6));
        if (n >= 5) CHECK(t.j == harris_tu_symmetric(n, 5));
        if (n >= 4) CHECK(t.k == harris_tu_symmetric(n, 4));
        CHECK(t.p == harris_tu_symmetric(n, 3));
    }
}

TEST_CASE("inscribed-polygon degrees are Catalan numbers") {
    CHECK(poncelet_degree(1) == 1);
    CHECK(poncelet_degree(2) == 2);
    CHECK(poncelet_degree(3) == 5);
    CHECK(poncelet_degree(4) == 14);
    for (int n = 1; n <= 20; ++n)
        CHECK(poncelet_degree(n) == binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)) / (n + 1));
}

TEST_CASE("stratum image and boundary degrees") {
    CHECK(m_degree(2, 5) == 30);
    CHECK(boundary_degree(5, 4) == 12);
    CHECK(boundary_degree(4, 3) == 6);
}
