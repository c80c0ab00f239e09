#include "ruled/degrees.hpp"

#include "ruled/errors.hpp"

namespace ruled {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// product over j in [0, top] of binom(n+j, c-j) / binom(2j+1, j), as one
// exact division at the end
mpz_class ratio_product(int n, int c, int top) {
    mpz_class num(1), den(1);
    for (int j = 0; j <= top; ++j) {
        if (c - j < 0) return mpz_class(0);
        num *= binomial(static_cast<unsigned long>(n + j), static_cast<unsigned long>(c - j));
        den *= binomial(static_cast<unsigned long>(2 * j + 1), static_cast<unsigned long>(j));
    }
    require(num % den == 0, "degree product is not integral");
    return num / den;
}

}  // namespace

mpz_class harris_tu_symmetric(int n, int r) {
    require(r > 0 && r <= n, "need 0 < r <= n");
    return ratio_product(n, n - r, n - r - 1);
}

DegreeTable stratum_degrees(int d) {
    require(d >= 3, "table defined for d >= 3");
    DegreeTable t;
    t.d = d;
    t.i = ratio_product(d + 1, d - 5, d - 6);
    t.j = ratio_product(d + 1, d - 4, d - 5);
    t.k = ratio_product(d + 1, d - 3, d - 4);
    t.p = ratio_product(d + 1, d - 2, d - 3);
    return t;
}

mpz_class poncelet_degree(int n) {
    require(n >= 0, "need n >= 0");
    mpz_class num = binomial(static_cast<unsigned long>(2 * n + 1), static_cast<unsigned long>(n + 1));
    require(num % (2 * n + 1) == 0, "closed form is not integral");
    return num / (2 * n + 1);
}

mpz_class m_degree(int a, int d) {
    require(a >= 1 && a <= d - 1, "need 1 <= a <= d-1");
    mpz_class v = binomial(static_cast<unsigned long>(2 * d - 4), static_cast<unsigned long>(2 * a - 2)) *
                  poncelet_degree(a - 1) * poncelet_degree(d - a - 1);
    if (2 * a == d) {
        require(v % 2 == 0, "unordered pencil degree is not even");
        v /= 2;
    }
    return v;
}

mpz_class boundary_degree(int d, int dprime) {
    require(dprime >= 3 && dprime < d, "need 3 <= d' < d");
    if (d == 4) return mpz_class(6);  // the d=4 case sits outside the closed formula
    require(d >= 5, "boundary formula needs d >= 5");
    mpz_class r(1);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(d - dprime));
    r *= binomial(static_cast<unsigned long>(d + 3 * dprime - 11), static_cast<unsigned long>(d - dprime));
    return r * stratum_degrees(dprime).i;
}

}  // namespace ruled
