#pragma once

#include <functional>
#include <vector>

#include "zetasum/estimate.hpp"

namespace zetasum {

using RealFn = std::function<double(double)>;
using CplxFn = std::function<Cplx(double)>;

// Tanh-sinh (double exponential) quadrature over (a, b).
// Handles integrable endpoint singularities; integrand must be analytic inside.
Estimate de_quad(const RealFn& f, double a, double b, double tol = 1e-13);
CplxEstimate de_quad_c(const CplxFn& f, double a, double b, double tol = 1e-13);

// DE over (0, inf), split at `split` with the tail mapped by x -> 1/x.
Estimate de_quad_0inf(const RealFn& f, double tol = 1e-13, double split = 1.0);
CplxEstimate de_quad_0inf_c(const CplxFn& f, double tol = 1e-13, double split = 1.0);

// Adaptive Gauss-Kronrod (G7,K15) over a finite interval.
Estimate gk_quad(const RealFn& f, double a, double b, double tol = 1e-12,
                 int max_intervals = 4000);
CplxEstimate gk_quad_c(const CplxFn& f, double a, double b, double tol = 1e-12,
                       int max_intervals = 4000);

// Sum of segment integrals f over [cuts[0], cuts[1]], [cuts[1], cuts[2]], ...
Estimate gk_quad_segments(const RealFn& f, const std::vector<double>& cuts, double tol = 1e-12);

// Wynn epsilon extrapolation of a sequence of partial sums; returns the best
// accelerated value and a crude error estimate from table stability.
Estimate wynn_epsilon(const std::vector<double>& partial_sums);

// Integral of an oscillatory f over [a, inf): integrates between consecutive
// cut points a + k*h (h should be about one half-period) and accelerates the
// alternating segment series with the epsilon algorithm.
Estimate oscillatory_quad(const RealFn& f, double a, double h, double tol = 1e-11,
                          int max_segments = 400);

}  // namespace zetasum
