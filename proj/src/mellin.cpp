#include "zetasum/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "zetasum/quadrature.hpp"
#include "zetasum/special.hpp"

namespace zetasum {

CplxEstimate mellin_numeric(const TestFunction& f, Cplx s, double tol) {
    if (!(s.real() > 0.0) || !(s.real() < f.alpha))
        throw MellinDomainError("mellin_numeric: Re s outside (0, alpha)");
    auto g = [&](double x) -> Cplx { return f.f(x) * std::pow(Cplx(x, 0.0), s - 1.0); };
    return de_quad_0inf_c(g, tol);
}

double measure_decay_constant_on_line(const std::function<Cplx(Cplx)>& F,
                                      const ContourSpec& spec) {
    double sup = 0.0;
    for (int i = 1; i <= 16; ++i) {
        double t = spec.height * i / 16.0;
        double v = std::abs(F(Cplx(spec.sigma, t))) * std::pow(std::abs(t), spec.decay_order);
        sup = std::max(sup, v);
    }
    return sup;
}

Estimate inverse_mellin_line(const std::function<Cplx(Cplx)>& F, const ContourSpec& spec,
                             double x) {
    if (!(x > 0.0)) throw MellinDomainError("inverse_mellin_line: x must be positive");
    const double T = spec.height;
    auto integrand = [&](double t) -> double {
        Cplx s(spec.sigma, t);
        Cplx v = F(s) * std::pow(x, -s);
        return v.real();
    };
    // panel quadrature; panel width ~2 with adaptive refinement inside
    Estimate total{0.0, 0.0};
    double step = 2.0;
    long npanels = std::lround(std::ceil(2.0 * T / step));
    double per_tol = spec.panel_tolerance / double(npanels);
    for (double a = -T; a < T - 1e-12; a += step) {
        double b = std::min(a + step, T);
        total = total + gk_quad(integrand, a, b, per_tol, 400);
    }
    total.value /= (2.0 * M_PI);
    total.error /= (2.0 * M_PI);
    // declared-decay tail bound: (x^-sigma / pi) * C * T^{1-p} / (p-1)
    double p = spec.decay_order;
    if (p <= 1.0)
        throw MellinDomainError("inverse_mellin_line: declared decay insufficient (need p > 1)");
    double C = measure_decay_constant_on_line(F, spec);
    double tail = std::pow(x, -spec.sigma) / M_PI * C * std::pow(T, 1.0 - p) / (p - 1.0);
    total.error += tail;
    return total;
}

// ---------------------------------------------------------------------------
// cached vertical-line kernels
// ---------------------------------------------------------------------------

namespace {
// 12-point Gauss-Legendre on [-1, 1] (positive half)
const double kGl12X[6] = {0.125233408511469, 0.367831498998180, 0.587317954286617,
                          0.769902674194305, 0.904117256370475, 0.981560634246719};
const double kGl12W[6] = {0.249147045813403, 0.233492536538355, 0.203167426723066,
                          0.160078328543346, 0.106939325995318, 0.047175336386512};
}  // namespace

CachedContour::CachedContour(const std::function<Cplx(Cplx)>& K, double sigma0, double T,
                             int nodes_per_unit)
    : sigma0_(sigma0), T_(T) {
    double panel = 12.0 / double(nodes_per_unit);
    for (double a = 0.0; a < T_ - 1e-9; a += panel) {
        double b = std::min(a + panel, T_);
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int j = 0; j < 6; ++j) {
            for (double sgn : {-1.0, 1.0}) {
                double t = mid + sgn * half * kGl12X[j];
                t_.push_back(t);
                kw_.push_back(K(Cplx(sigma0_, t)) * (half * kGl12W[j]));
            }
        }
    }
}

double CachedContour::eval(double x) const {
    double lx = std::log(x);
    KahanSum acc;
    for (size_t j = 0; j < t_.size(); ++j) {
        // x^{-sigma0 - i t} + conjugate node
        Cplx ph = std::polar(1.0, -t_[j] * lx);
        acc.add((kw_[j] * ph).real());
    }
    return 2.0 * acc.result() * std::pow(x, -sigma0_) / (2.0 * M_PI);
}

double CachedContour::integrate_small_x(double s, double delta) const {
    KahanSum acc;
    double ld = std::log(delta);
    for (size_t j = 0; j < t_.size(); ++j) {
        Cplx e = s - sigma0_ - Cplx(0.0, t_[j]);
        Cplx v = std::exp(e * ld) / e;
        acc.add((kw_[j] * v).real());
    }
    return 2.0 * acc.result() / (2.0 * M_PI);
}

// ---------------------------------------------------------------------------
// Fourier cosine transform
// ---------------------------------------------------------------------------

Estimate fourier_cosine_fn(const std::function<double(double)>& f, double x, double L,
                           double tol) {
    const double norm = std::sqrt(2.0 / M_PI);
    if (x * L < 24.0) {
        Estimate base = de_quad_0inf([&](double t) { return f(t) * std::cos(x * t); }, tol * 0.1);
        return {norm * base.value, norm * base.error + 1e-16};
    }
    // oscillation-aware: integrate half-period segments and accelerate
    auto g = [&](double t) { return f(t) * std::cos(x * t); };
    double h = M_PI / x;
    Estimate head = gk_quad(g, 0.0, h / 2.0, tol * 0.1, 200);
    Estimate tail = oscillatory_quad(g, h / 2.0, h, tol, 2000);
    return {norm * (head.value + tail.value), norm * (head.error + tail.error)};
}

Estimate fourier_cosine(const TestFunction& f, double x, double tol) {
    if (x < 0.0) throw MellinDomainError("fourier_cosine: x must be >= 0");
    // decay length: |f| ~ C x^-alpha below 1e-17
    double L = std::pow(std::max(f.decay_constant, 1e-30) / 1e-17, 1.0 / f.alpha);
    L = std::clamp(L, 8.0, 2000.0);
    return fourier_cosine_fn(f.f, x, L, tol);
}

// ---------------------------------------------------------------------------
// Muntz operator
// ---------------------------------------------------------------------------

namespace {

// choose N with C_w C_f x^-alpha N^{c+1-alpha} / (alpha-c-1) <= tol
long series_length(double alpha, double c, double Cf, double Cw, double x, double tol,
                   long cap) {
    double margin = alpha - c - 1.0;
    if (margin <= 0.0) throw MellinDomainError("weighted series: alpha too small for weight");
    double lhs = Cw * Cf * std::pow(x, -alpha) / (tol * margin);
    double N = std::pow(std::max(lhs, 1.0), 1.0 / margin);
    long n = std::lround(std::ceil(N)) + 8;
    if (n > cap)
        throw MellinDomainError("weighted series: tail bound unreachable within term cap");
    return n;
}

}  // namespace

Estimate muntz_operator(const TestFunction& f, double x, double tol, long term_cap) {
    if (!(x > 0.0)) throw MellinDomainError("muntz_operator: x must be positive");
    long N = series_length(f.alpha, 0.0, f.decay_constant, 1.0, x, tol, term_cap);
    KahanSum acc;
    for (long n = 1; n <= N; ++n) acc.add(f.f(double(n) * x));
    double tail = f.decay_constant * std::pow(x, -f.alpha) *
                  std::pow(double(N), 1.0 - f.alpha) / (f.alpha - 1.0);
    return {acc.result() - f.integral() / x, tail + 1e-16};
}

Estimate muntz_via_contour(const TestFunction& f, const ContourSpec& spec, double x) {
    if (!(spec.sigma > 0.0) || !(spec.sigma < 1.0))
        throw MellinDomainError("muntz_via_contour: sigma must lie in (0, 1)");
    auto F = [&](Cplx s) -> Cplx {
        Cplx fs = f.has_mellin_cf() ? f.mellin_closed_form(s) : mellin_numeric(f, s).value;
        return zeta(s) * fs;
    };
    return inverse_mellin_line(F, spec, x);
}

Estimate muntz_pointwise(const TestFunction& f, double y, double tol) {
    if (y >= 0.5) return muntz_operator(f, y, tol);
    // Poisson form: (Pf)(y) = -f(0)/2 + (sqrt(2 pi)/y) sum_{n>=1} (Fc f)(2 pi n / y)
    KahanSum acc;
    double coef = std::sqrt(2.0 * M_PI) / y;
    double err = 0.0;
    for (long n = 1; n <= 4000; ++n) {
        double arg = 2.0 * M_PI * double(n) / y;
        double fc;
        if (f.has_fc_cf())
            fc = f.fourier_cosine_closed_form(arg);
        else {
            Estimate e = fourier_cosine(f, arg, tol);
            fc = e.value;
            err += e.error * coef;
        }
        acc.add(fc);
        if (std::abs(fc) * coef < 0.05 * tol && n >= 4) {
            err += std::abs(fc) * coef * double(n);  // crude geometric-ish tail allowance
            break;
        }
    }
    return {-0.5 * f.value_at_zero + coef * acc.result(), err + tol};
}

namespace {

// regularized P applied to a sampled function g that may decay only like c/y:
// sum_{n<=N} g(nx) - (1/x) int_0^{Nx} g - g(Nx)/2 - (x/12) g'(Nx)
Estimate muntz_regularized(const std::function<double(double)>& g, double x, long N,
                           double quad_tol) {
    KahanSum acc;
    for (long n = 1; n <= N; ++n) acc.add(g(double(n) * x));
    double top = double(N) * x;
    // integral over [0, top], log-spaced panels after 1
    Estimate integral = de_quad([&](double u) { return g(u); }, 0.0, std::min(1.0, top), quad_tol);
    double lo = 1.0;
    while (lo < top) {
        double hi = std::min(lo * 8.0, top);
        integral = integral + gk_quad(g, lo, hi, quad_tol, 2000);
        lo = hi;
    }
    double h = std::max(1e-4, 1e-6 * top);
    double gp = (g(top + h) - g(top - h)) / (2.0 * h);
    double value = acc.result() - integral.value / x - 0.5 * g(top) - x / 12.0 * gp;
    // E-M remainder heuristic: next correction scale
    double g3 = (g(top + 2 * h) - 2 * g(top + h) + 2 * g(top - h) - g(top - 2 * h)) / (2 * h * h * h);
    double rem = std::abs(x * x * x * g3 / 720.0) + integral.error / x;
    return {value, rem + 1e-14};
}

}  // namespace

Estimate muntz_iterate(const TestFunction& f, double x, int k, double tol) {
    if (!(x > 0.0)) throw MellinDomainError("muntz_iterate: x must be positive");
    if (k < 0) throw MellinDomainError("muntz_iterate: k must be >= 0");
    if (k == 0) return {f.f(x), 0.0};
    if (k == 1) return muntz_operator(f, x, tol);
    if (k > 2)
        throw MellinDomainError(
            "muntz_iterate: iterates beyond P^2 leave the decay class for this family");

    // sampled decay check on the first iterate: |Pf(y) + (int f)/y| y^1.5 bounded
    double c2 = f.integral();
    double worst = 0.0;
    for (double y : {8.0, 16.0, 32.0}) {
        double g = muntz_pointwise(f, y, 1e-12).value;
        worst = std::max(worst, std::abs(g + c2 / y) * std::pow(y, 1.5));
    }
    if (worst > 1e3)
        throw MellinDomainError("muntz_iterate: decay check failed on the first iterate");

    auto g1 = [&](double y) { return muntz_pointwise(f, y, 1e-13).value; };
    long N = std::lround(std::ceil(1500.0 / std::min(x, 1.0)));
    return muntz_regularized(g1, x, N, 1e-12);
}

}  // namespace zetasum
