#pragma once

#include <functional>

#include "zetasum/estimate.hpp"
#include "zetasum/testfn.hpp"

namespace zetasum {

// Vertical-line specification for truncated inverse Mellin integration.
struct ContourSpec {
    double sigma = 0.5;       // abscissa of the line
    double height = 200.0;    // integrate over |t| <= height
    double panel_tolerance = 1e-12;
    double decay_order = 2.0;  // declared |F(sigma+it)| <= C |t|^-decay_order
};

struct MellinDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// f*(s) = int_0^inf f(x) x^{s-1} dx, 0 < Re s < alpha.
CplxEstimate mellin_numeric(const TestFunction& f, Cplx s, double tol = 1e-13);

// (1/2pi) int_{-T}^{T} F(sigma+it) x^{-sigma-it} dt (real part), with a tail
// bound from the declared decay and an empirically measured constant.
Estimate inverse_mellin_line(const std::function<Cplx(Cplx)>& F, const ContourSpec& spec,
                             double x);
// The measured constant sup |F| |t|^p over the sampled outer band; exposed for
// tail-bound behavior tests.
double measure_decay_constant_on_line(const std::function<Cplx(Cplx)>& F,
                                      const ContourSpec& spec);

// (Fc f)(x) = sqrt(2/pi) int_0^inf f(t) cos(xt) dt.
Estimate fourier_cosine(const TestFunction& f, double x, double tol = 1e-12);
// Same, for a plain callable with known decay scale L (|f| negligible past L).
Estimate fourier_cosine_fn(const std::function<double(double)>& f, double x, double L,
                           double tol = 1e-12);

// Kernel values K(sigma0 + i t) cached at Gauss-Legendre nodes on [0, T]
// (conjugate symmetry assumed: K(conj z) = conj K(z)). Supports fast repeated
// evaluation of (1/2pi) int K(t) x^{-sigma0-it} dt and of the x-integrated
// form int_0^delta x^{s-1} [that] dx for real s.
class CachedContour {
  public:
    CachedContour(const std::function<Cplx(Cplx)>& K, double sigma0, double T,
                  int nodes_per_unit = 24);
    // (1/2pi) int_{-T}^{T} K(sigma0+it) x^{-sigma0-it} dt
    double eval(double x) const;
    // int_0^delta x^{s-1} eval(x) dx = (1/2pi) int K(t) delta^{s-sigma0-it}/(s-sigma0-it) dt
    // valid for real s > sigma0
    double integrate_small_x(double s, double delta) const;
    double sigma0() const { return sigma0_; }

  private:
    double sigma0_, T_;
    std::vector<double> t_;
    std::vector<Cplx> kw_;  // K * GL-weight at each node
};

// Muntz operator (Pf)(x) = sum_{n>=1} f(nx) - (1/x) int_0^inf f.
Estimate muntz_operator(const TestFunction& f, double x, double tol = 1e-13,
                        long term_cap = 1000000);

// Same value through the contour representation (1/2pi i) int zeta(s) f*(s) x^-s ds
// on 0 < sigma < 1. When f has a vanishing first moment this contour also
// evaluates the full Mobius-transform series.
Estimate muntz_via_contour(const TestFunction& f, const ContourSpec& spec, double x);

// (Pf)(y) evaluated stably for all y: direct series for y >= 0.5, the
// cosine-transform (Poisson) form for small y.
Estimate muntz_pointwise(const TestFunction& f, double y, double tol = 1e-13);

// Iterated Muntz operator P^k with P^0 = id. Iterates that decay only like
// c/y are handled by compensated truncation with Euler-Maclaurin endpoint
// corrections. k <= 3.
Estimate muntz_iterate(const TestFunction& f, double x, int k, double tol = 1e-10);

}  // namespace zetasum
