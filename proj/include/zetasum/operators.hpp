#pragma once

#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/estimate.hpp"
#include "zetasum/mellin.hpp"
#include "zetasum/testfn.hpp"

namespace zetasum {

// Coefficients of the degree-(k-1) polynomial P_{k-1}(X), X = log y, whose
// integral against f(xy) is the residue of zeta^k(s) f*(s) x^{-s} at s = 1.
// Derived from the Taylor series of ((s-1) zeta(s))^k, not transcribed.
struct ResiduePolynomial {
    int k = 1;
    std::vector<double> coeffs;  // ascending powers of X

    double eval(double X) const {
        double v = 0.0;
        for (size_t i = coeffs.size(); i-- > 0;) v = v * X + coeffs[i];
        return v;
    }
};

ResiduePolynomial residue_polynomial(int k);

// Taylor coefficients of ((s-1) zeta(s))^k about s = 1, ascending, length len.
std::vector<double> zeta_power_taylor(int k, int len);

// Numeric residue of zeta^k(s) F(s) x^{-s} at s = 1 by a small-circle contour.
double residue_zeta_power_numeric(int k, const std::function<Cplx(Cplx)>& F, double x,
                                  double radius = 0.5, int nodes = 192);

// --- weighted summation operators, sum w(n) f(n x) with tail bound ---------
Estimate mobius_transform(const TestFunction& f, double x, double tol = 1e-13,
                          long cap = 1000000);  // plain sum, weight 1
Estimate reduced_mobius(const ArithTable& t, const TestFunction& f, double x,
                        double tol = 1e-13);  // squarefree-filtered sum
Estimate liouville_op(const ArithTable& t, const TestFunction& f, double x,
                      double tol = 1e-13);
Estimate totient_op(const ArithTable& t, const TestFunction& f, double x, double tol = 1e-12);
Estimate odd_divisor_op(const ArithTable& t, const TestFunction& f, double x,
                        double tol = 1e-12);
Estimate divisor_op_k(const ArithTable& t, const TestFunction& f, double x, int k,
                      double tol = 1e-12);

// V f = D f - int_0^inf f(xy)(log y + 2 gamma) dy
Estimate voronoi_operator(const ArithTable& t, const TestFunction& f, double x,
                          double tol = 1e-11);
// V_k f = D_k f - int_0^inf f(xy) P_{k-1}(log y) dy ; k = 1 is the Muntz
// operator, k = 2 the Voronoi operator.
Estimate generalized_voronoi(const ArithTable& t, const TestFunction& f, double x, int k,
                             double tol = 1e-11);
// int_0^inf f(xy) P_{k-1}(log y) dy through cached log-moments of f.
double residue_integral(const TestFunction& f, double x, const ResiduePolynomial& P);

// G(x) = int_0^inf [4 K0(4 pi sqrt(xy)) - 2 pi Y0(4 pi sqrt(xy))] f(y) dy.
Estimate voronoi_g_kernel(const TestFunction& f, double x, double tol = 1e-9);

// Right side of the Voronoi summation formula: f(0)/4 + (1/x) sum d(n) G(n/x),
// evaluated with kernel quadrature up to n_direct and the 1/xi^2 kernel
// asymptote beyond (second-moment of the kernel vanishes).
Estimate voronoi_summation_rhs(const ArithTable& t, const TestFunction& f, double x,
                               long n_direct = 360);

// --- Theorem-6 style kernel machinery --------------------------------------

// I(w) = int_0^inf f(1/u) kappa(w u) du for f = x e^{-x}, evaluated through a
// cached Mellin-Barnes contour (fast) or direct quadrature (oracle).
double theorem6_I_contour(double w);
Estimate theorem6_I_quadrature(double w, double tol = 1e-9);

// The (n,m)-term of the double series, f with small-x exponent beta > 1/2:
//   mu(n) x / (n^3 m^2) * int_0^inf f(1/u) kappa(pi x u / (2 n^2 m)) du
// path: 0 = real kappa route, 1 = complex erf/erfi ray route (cross-check).
Estimate error_function_kernel(const ArithTable& t, const TestFunction& f, double x, long n,
                               long m, int path = 0);

// Full double-series right side (f = xexp fixed by the series tails):
// returns the value as printed and, via `zero_corrected`, the value with the
// zeta-zero residue series subtracted (the correction the printed formula
// omits; computed from tabulated first zeros).
struct Theorem6Rhs {
    Estimate as_printed;
    Estimate zero_corrected;
    double zero_correction = 0.0;
};
Theorem6Rhs theorem6_rhs(const ArithTable& t, double x, double tol = 1e-8);

// sum over critical zeros rho of 2 Re{ x kt(2-s) Gamma(2-s) (pi x/2)^{s-2}
// zeta(s) / (2 zeta'(rho)) }, s = (1+rho)/2 (tabulated first zeros).
double theorem6_zero_residue_sum(double x);

}  // namespace zetasum
