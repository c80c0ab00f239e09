#pragma once

#include <gmpxx.h>

namespace ruled {

mpz_class binomial(unsigned long n, unsigned long k);

// degree of the rank <= r locus inside the symmetric forms on an
// n-dimensional space
mpz_class harris_tu_symmetric(int n, int r);

struct DegreeTable {
    int d = 0;
    mpz_class i, j, k, p;
};

// the four stratum degrees as printed closed products
DegreeTable stratum_degrees(int d);

// degree of the curves attached to pencils of forms of degree n+1
mpz_class poncelet_degree(int n);

// degree of the image of the two-pencil stratum
mpz_class m_degree(int a, int d);

// degree of the boundary stratum reached by a degree d-d' common factor
mpz_class boundary_degree(int d, int dprime);

}  // namespace ruled
