#pragma once

#include <string>

#include "zetasum/arith.hpp"
#include "zetasum/estimate.hpp"

namespace zetasum {

// Partial sum of a Dirichlet series sum w(n) n^{-s} to N terms, completed by
// the analytic main term of the weight's summatory function (Abel summation)
// and carrying a fluctuation-based bound on the remaining error.
struct DirichletSum {
    Cplx value{0.0, 0.0};   // partial sum + tail completion
    double tail_bound = 0;  // bound on |true value - value|
};

// weight ids: 2omega, d, d3, d4, mu, absmu, lambda, dsq (d(n^2)), d2 (d(n)^2),
// phi, a
DirichletSum dirichlet_partial(const ArithTable& t, const std::string& weight, Cplx s,
                               uint64_t N);

// The zeta-ratio each weight's series equals (evaluated with the zeta module):
// used by the identity catalog as the comparison side.
Cplx dirichlet_zeta_ratio(const std::string& weight, Cplx s);

// Minimal admissible Re s for each weight's series.
double dirichlet_sigma_min(const std::string& weight);

// sum_{n>M} n^{-z} by Euler-Maclaurin (no zeta value involved).
Cplx zeta_tail(uint64_t M, Cplx z);

// int_m^inf t^{-z} ln^j t dt = m^{1-z} sum_{i<=j} (j!/i!) ln^i m / (z-1)^{j-i+1}
Cplx tail_integral_logpow(double m, Cplx z, int j);

}  // namespace zetasum
