#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "zetasum/estimate.hpp"

namespace zetasum {

// s = sigma + i t, the evaluation point of zeta/gamma style functions.
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;
    ComplexPoint() = default;
    ComplexPoint(double s_, double t_) : sigma(s_), t(t_) {}
    ComplexPoint(const Cplx& z) : sigma(z.real()), t(z.imag()) {}
    Cplx value() const { return {sigma, t}; }
};

struct ZetaPoleError : std::domain_error {
    ZetaPoleError() : std::domain_error("zeta: pole at s = 1") {}
};
struct GammaPoleError : std::domain_error {
    GammaPoleError() : std::domain_error("gamma: pole at a non-positive integer") {}
};

// Euler's constant.
double euler_gamma();

// Riemann zeta, complex argument. Dispatches Euler-Maclaurin for Re s >= 0.45
// and the functional equation below. Throws ZetaPoleError at s = 1.
Cplx zeta(Cplx s);
// The two evaluation paths, exposed so tests can compare them directly.
Cplx zeta_euler_maclaurin(Cplx s);   // valid for Re s > 0 (away from s=1)
Cplx zeta_alternating(Cplx s);       // eta-series acceleration, Re s > 0
// chi(s) of the functional equation zeta(s) = chi(s) zeta(1-s).
Cplx zeta_chi(Cplx s);
// |t| above which double precision degrades; evaluations still proceed.
double zeta_precision_height();

// Complex gamma (Lanczos) and its logarithm-free ratio-safe form.
Cplx gamma_complex(Cplx s);

// Laurent data of zeta about s = 1:
//   zeta(s) = 1/(s-1) + sum_{m>=0} (-1)^m/m! gamma_m (s-1)^m
// `stieltjes` holds the standard constants gamma_m (gamma_0 = Euler's constant).
struct LaurentCoefficients {
    double gamma0 = 0.0;
    std::vector<double> stieltjes;  // gamma_0 .. gamma_order
    int order = 0;
};

// gamma_m for m = 0..order via the log-power limit sum accelerated with
// Euler-Maclaurin tail corrections. order <= 10.
LaurentCoefficients stieltjes_constants(int order);
// Plain Richardson extrapolation of the same limit (depth ~8). Only useful for
// m = 0; kept as an independent cross-check path.
double stieltjes_limit_richardson(int m, int depth = 8, long l0 = 400);

// Jacobi theta sum psi(x) = sum_{n>=1} exp(-n^2 pi x), x > 0.
double theta_psi(double x);

// Modified/ordinary Bessel functions of order zero.
double bessel_k0(double x);
double bessel_y0(double x);
double bessel_j0(double x);
// Series-only and asymptotic-only paths for overlap tests.
double bessel_k0_series(double x);
double bessel_k0_asymptotic(double x);
double bessel_y0_series(double x);
double bessel_y0_asymptotic(double x);

// Fresnel integrals, C(z) = int_0^z cos(pi t^2/2) dt, S likewise.
void fresnel_cs(double z, double& c, double& s);
// Series-only / continued-fraction-only paths for overlap tests.
void fresnel_cs_series(double z, double& c, double& s);
void fresnel_cs_cf(double z, double& c, double& s);

// kappa(a) = int_0^1 cos(a (1 - t^2)) dt via the Fresnel representation.
double cos_parabolic_kernel(double a);

// Upper incomplete gamma Gamma(a, x), x > 0, complex a (Legendre continued
// fraction for x > Re a + 1, series complement otherwise).
Cplx upper_gamma(Cplx a, double x);

// erf(e^{i pi/4} rho) for real rho >= 0 (power series + continued fraction).
Cplx erf_ray(double rho);
// Independent evaluation by direct oscillatory quadrature of
// (2/sqrt(pi)) e^{i pi/4} int_0^rho e^{-i tau^2} d tau.
Cplx erf_ray_quadrature(double rho);

}  // namespace zetasum
