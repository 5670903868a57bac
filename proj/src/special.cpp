#include "zetasum/special.hpp"

#include <algorithm>
#include <cmath>

#include "zetasum/quadrature.hpp"

namespace zetasum {

namespace {

const double kEulerGamma = 0.57721566490153286060651209008240243104;

// B_2, B_4, ..., B_26
const double kBernoulli[] = {1.0 / 6,           -1.0 / 30,        1.0 / 42,
                             -1.0 / 30,         5.0 / 66,         -691.0 / 2730,
                             7.0 / 6,           -3617.0 / 510,    43867.0 / 798,
                             -174611.0 / 330,   854513.0 / 138,   -236364091.0 / 2730,
                             8553103.0 / 6};

// Lanczos, g = 607/128, 15 terms.
const double kLanczosG = 4.7421875;
const double kLanczosC[15] = {0.99999999999999709182,
                              57.156235665862923517,
                              -59.597960355475491248,
                              14.136097974741747174,
                              -0.49191381609762019978,
                              3.3994649984811888699e-5,
                              4.6523628927048575665e-5,
                              -9.8374475304879564677e-5,
                              1.5808870322491248884e-4,
                              -2.1026444172410488319e-4,
                              2.1743961811521264320e-4,
                              -1.6431810653676389022e-4,
                              8.4418223983852743293e-5,
                              -2.6190838401581408670e-5,
                              3.6899182659531622704e-6};

bool near_nonpositive_integer(Cplx s) {
    if (std::abs(s.imag()) > 1e-13) return false;
    double r = s.real();
    return r <= 0.5 && std::abs(r - std::round(r)) < 1e-13;
}

}  // namespace

double euler_gamma() { return kEulerGamma; }

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

Cplx gamma_complex(Cplx s) {
    if (near_nonpositive_integer(s)) throw GammaPoleError();
    if (s.real() < 0.5) {
        // reflection
        Cplx sp = M_PI * s;
        return M_PI / (std::sin(sp) * gamma_complex(1.0 - s));
    }
    Cplx z = s - 1.0;
    Cplx a = kLanczosC[0];
    for (int k = 1; k < 15; ++k) a += kLanczosC[k] / (z + double(k));
    Cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

Cplx zeta_euler_maclaurin(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-12) throw ZetaPoleError();
    const int K = 12;
    int N = std::max(24, int(std::ceil(std::abs(s.imag()) * 1.1)) + 12);
    KahanSumC head;
    for (int n = 1; n < N; ++n) head.add(std::pow(double(n), -s));
    Cplx Nd = double(N);
    Cplx result = head.result();
    result += std::pow(Nd, 1.0 - s) / (s - 1.0);
    result += 0.5 * std::pow(Nd, -s);
    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Cplx poch = s;                       // rising product up to s+2k-2
    double fact = 2.0;                   // (2k)!
    Cplx npow = std::pow(Nd, -s - 1.0);  // N^{-s-2k+1}
    for (int k = 1; k <= K; ++k) {
        result += kBernoulli[k - 1] / fact * poch * npow;
        // advance to k+1
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        fact *= double(2 * k + 1) * double(2 * k + 2);
        npow /= (Nd * Nd);
    }
    return result;
}

Cplx zeta_alternating(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-12) throw ZetaPoleError();
    // Chebyshev acceleration of the eta series (Cohen-Rodriguez Villegas-Zagier).
    const int n = 64;
    long double d = powl(3.0L + sqrtl(8.0L), (long double)n);
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L, c = -d;
    KahanSumC acc;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc.add(double(c) * std::pow(double(k + 1), -s));
        b = (long double)(k + n) * (long double)(k - n) * b /
            (((long double)k + 0.5L) * (long double)(k + 1));
    }
    Cplx eta = acc.result() / double(d);
    Cplx denom = 1.0 - std::pow(2.0, 1.0 - s);
    return eta / denom;
}

Cplx zeta_chi(Cplx s) {
    // chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2)
    return std::pow(M_PI, s - 0.5) * gamma_complex(0.5 * (1.0 - s)) / gamma_complex(0.5 * s);
}

double zeta_precision_height() { return 500.0; }

Cplx zeta(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-12) throw ZetaPoleError();
    if (s.real() >= 0.45) return zeta_euler_maclaurin(s);
    return zeta_chi(s) * zeta_euler_maclaurin(1.0 - s);
}

// ---------------------------------------------------------------------------
// Stieltjes constants
// ---------------------------------------------------------------------------

namespace {

// d^r/dx^r [ln^m x / x] = x^{-1-r} p_r(ln x); p_0 = X^m, p_{r+1} = p_r' - (1+r) p_r.
std::vector<std::vector<long double>> log_over_x_derivative_polys(int m, int rmax) {
    std::vector<std::vector<long double>> polys;
    std::vector<long double> p(m + 1, 0.0L);
    p[m] = 1.0L;
    polys.push_back(p);
    for (int r = 0; r < rmax; ++r) {
        std::vector<long double> q(p.size(), 0.0L);
        for (size_t i = 1; i < p.size(); ++i) q[i - 1] += (long double)i * p[i];
        for (size_t i = 0; i < p.size(); ++i) q[i] -= (long double)(1 + r) * p[i];
        p = q;
        polys.push_back(p);
    }
    return polys;
}

long double eval_poly(const std::vector<long double>& p, long double x) {
    long double v = 0.0L;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

const long double kBernoulliL[] = {1.0L / 6,         -1.0L / 30,     1.0L / 42,  -1.0L / 30,
                                   5.0L / 66,        -691.0L / 2730, 7.0L / 6,   -3617.0L / 510,
                                   43867.0L / 798,   -174611.0L / 330};

long double stieltjes_one(int m, long l, int K) {
    // S_m(l) = sum_{j<=l} ln^m j / j - ln^{m+1} l/(m+1), summed in telescoped
    // stable form, then Euler-Maclaurin tail corrections at j = l.
    long double s = (m == 0) ? 1.0L : 0.0L;
    long double comp = 0.0L;
    for (long j = 2; j <= l; ++j) {
        long double a = logl((long double)j);
        long double b = logl((long double)(j - 1));
        long double dd = -log1pl(-1.0L / (long double)j);
        long double acc = 0.0L;
        long double ai = 1.0L;
        for (int i = 0; i <= m; ++i) {
            acc += ai * powl(b, (long double)(m - i));
            ai *= a;
        }
        long double term = powl(a, (long double)m) / (long double)j - dd * acc / (long double)(m + 1);
        long double y = term - comp;
        long double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    auto polys = log_over_x_derivative_polys(m, 2 * K - 1);
    long double L = logl((long double)l);
    long double fl = eval_poly(polys[0], L) / (long double)l;
    long double corr = -0.5L * fl;
    long double fact = 2.0L;
    long double lpow = (long double)l * (long double)l;  // l^{2k}
    for (int k = 1; k <= K; ++k) {
        long double fd = eval_poly(polys[2 * k - 1], L) / lpow;
        corr -= kBernoulliL[k - 1] / fact * fd;
        fact *= (long double)(2 * k + 1) * (long double)(2 * k + 2);
        lpow *= (long double)l * (long double)l;
    }
    return s + corr;
}

}  // namespace

LaurentCoefficients stieltjes_constants(int order) {
    if (order < 0 || order > 10)
        throw std::domain_error("stieltjes_constants: order must be in [0, 10]");
    LaurentCoefficients out;
    out.order = order;
    out.stieltjes.resize(order + 1);
    for (int m = 0; m <= order; ++m) out.stieltjes[m] = double(stieltjes_one(m, 250, 10));
    out.gamma0 = out.stieltjes[0];
    return out;
}

double stieltjes_limit_richardson(int m, int depth, long l0) {
    std::vector<long double> vals, hs;
    for (int j = 0; j <= depth; ++j) {
        long l = l0 << j;
        // raw limit-formula value, no tail correction
        vals.push_back(stieltjes_one(m, l, 0) + 0.5L * eval_poly(log_over_x_derivative_polys(m, 0)[0], logl((long double)l)) / (long double)l);
        hs.push_back(1.0L / (long double)l);
    }
    // cancel the f(l)/2 we re-added? No: stieltjes_one with K=0 already holds
    // S_m(l) - f(l)/2; undo to get the plain partial S_m(l).
    std::vector<std::vector<long double>> T{vals};
    for (int k = 1; k <= depth; ++k) {
        std::vector<long double> row;
        for (int i = 0; i + k <= depth; ++i) {
            long double num = T[k - 1][i + 1] * hs[i] - T[k - 1][i] * hs[i + k];
            row.push_back(num / (hs[i] - hs[i + k]));
        }
        T.push_back(row);
    }
    return double(T[depth][0]);
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

double theta_psi(double x) {
    if (!(x > 0.0)) throw std::domain_error("theta_psi: requires x > 0");
    KahanSum acc;
    for (long n = 1;; ++n) {
        double term = std::exp(-double(n) * double(n) * M_PI * x);
        acc.add(term);
        if (term < 1e-18 * std::max(acc.result(), 1e-300)) break;
        if (n > 100000000L) break;
    }
    return acc.result();
}

// ---------------------------------------------------------------------------
// Bessel J0 / Y0 / K0
// ---------------------------------------------------------------------------

namespace {
const double kBesselK0Cross = 9.0;
const double kBesselY0Cross = 17.0;
}

double bessel_k0_series(double x) {
    long double q = (long double)x * x / 4.0L;
    long double i0 = 1.0L, k0 = 0.0L;
    long double term = 1.0L, h = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / ((long double)k * k);
        h += 1.0L / k;
        i0 += term;
        k0 += term * h;
        if (term * (h + 1.0L) < 1e-20L * (fabsl(k0) + 1.0L)) break;
    }
    long double lx = logl((long double)x / 2.0L) + (long double)kEulerGamma;
    return double(-lx * i0 + k0);
}

double bessel_k0_asymptotic(double x) {
    // sqrt(pi/(2x)) e^{-x} sum_k (-1)^k ((2k-1)!!)^2 / (k! (8x)^k), min-term stop
    long double sum = 1.0L, term = 1.0L;
    long double prev = 1e300L;
    for (int k = 1; k < 60; ++k) {
        term *= -(long double)(2 * k - 1) * (2 * k - 1) / ((long double)k * 8.0L * x);
        if (fabsl(term) > prev) break;
        sum += term;
        prev = fabsl(term);
        if (fabsl(term) < 1e-19L * fabsl(sum)) break;
    }
    return double(sqrtl((long double)M_PI / (2.0L * x)) * expl(-(long double)x) * sum);
}

namespace {
void bessel_j0y0_series(double x, double& j0, double& y0) {
    long double q = (long double)x * x / 4.0L;
    long double j = 1.0L, g = 0.0L;
    long double term = 1.0L, h = 0.0L;
    for (int k = 1; k < 400; ++k) {
        term *= -q / ((long double)k * k);
        h += 1.0L / k;
        j += term;
        g -= term * h;  // sum (-1)^{k+1} H_k q^k/(k!)^2
        if (fabsl(term) * (h + 1.0L) < 1e-21L * (fabsl(j) + fabsl(g) + 1.0L)) break;
    }
    long double lx = logl((long double)x / 2.0L) + (long double)kEulerGamma;
    j0 = double(j);
    y0 = double(2.0L / M_PI * (lx * j + g));
}

void bessel_j0y0_asymptotic(double x, double& j0, double& y0) {
    // H0^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_k (-i)^k a_k / x^k,
    // a_k = ((2k-1)!!)^2/(8^k k!)
    long double a = 1.0L;
    std::complex<long double> sum(1.0L, 0.0L);
    std::complex<long double> ipow(1.0L, 0.0L);
    long double prev = 1e300L;
    long double xp = 1.0L;
    for (int k = 1; k < 50; ++k) {
        a *= (long double)(2 * k - 1) * (2 * k - 1) / (8.0L * k);
        xp *= (long double)x;
        ipow *= std::complex<long double>(0.0L, -1.0L);
        long double mag = a / xp;
        if (mag > prev) break;
        sum += ipow * mag;
        prev = mag;
        if (mag < 1e-19L) break;
    }
    long double amp = sqrtl(2.0L / ((long double)M_PI * x));
    long double ph = (long double)x - (long double)M_PI / 4.0L;
    std::complex<long double> e(cosl(ph), sinl(ph));
    std::complex<long double> h = amp * e * sum;
    j0 = double(h.real());
    y0 = double(h.imag());
}
}  // namespace

double bessel_y0_series(double x) {
    double j, y;
    bessel_j0y0_series(x, j, y);
    return y;
}

double bessel_y0_asymptotic(double x) {
    double j, y;
    bessel_j0y0_asymptotic(x, j, y);
    return y;
}

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0: requires x > 0");
    return x < kBesselK0Cross ? bessel_k0_series(x) : bessel_k0_asymptotic(x);
}

double bessel_y0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_y0: requires x > 0");
    if (x < kBesselY0Cross) return bessel_y0_series(x);
    return bessel_y0_asymptotic(x);
}

double bessel_j0(double x) {
    x = std::abs(x);
    double j, y;
    if (x < kBesselY0Cross)
        bessel_j0y0_series(x, j, y);
    else
        bessel_j0y0_asymptotic(x, j, y);
    return j;
}

// ---------------------------------------------------------------------------
// Fresnel / erf on the diagonal ray
// ---------------------------------------------------------------------------

namespace {
const double kFresnelCross = 2.6;

// sqrt(pi) e^{z^2} erfc(z) as a continued fraction, Re z > 0.
std::complex<long double> erfc_scaled_cf(std::complex<long double> z) {
    // CF: 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + ...)))))
    const int kMax = 200;
    const long double tiny = 1e-30L;
    std::complex<long double> f = z, C = z, D = 0.0L;
    for (int k = 1; k <= kMax; ++k) {
        long double a = k / 2.0L;
        // b = z for every level
        D = z + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = z + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0L / D;
        std::complex<long double> delta = C * D;
        f *= delta;
        if (std::abs(delta - std::complex<long double>(1.0L, 0.0L)) < 1e-20L) break;
    }
    return 1.0L / f;
}
}  // namespace

void fresnel_cs_series(double z, double& c, double& s) {
    // C = sum (-1)^k (pi/2)^{2k} z^{4k+1} / ((2k)! (4k+1))
    // S = sum (-1)^k (pi/2)^{2k+1} z^{4k+3} / ((2k+1)! (4k+3))
    long double zz = (long double)z;
    long double u = (long double)M_PI_2 * zz * zz;  // pi z^2 / 2
    long double u2 = -u * u;
    long double cterm = zz, cs = cterm;
    long double sterm = zz * u, ss = sterm / 3.0L;
    // iterate: cterm_k = z u^{2k}/(2k)!, sterm_k = z u^{2k+1}/(2k+1)!
    for (int k = 1; k < 200; ++k) {
        cterm *= u2 / ((long double)(2 * k - 1) * (2 * k));
        cs += cterm / (long double)(4 * k + 1);
        sterm *= u2 / ((long double)(2 * k) * (2 * k + 1));
        ss += sterm / (long double)(4 * k + 3);
        if (fabsl(cterm) + fabsl(sterm) < 1e-21L * (fabsl(cs) + fabsl(ss) + 1e-3L)) break;
    }
    c = double(cs);
    s = double(ss);
}

void fresnel_cs_cf(double z, double& c, double& s) {
    // C + iS = (1+i)/2 - M(z),  M(z) = (e^{i pi/4}/sqrt2) erfc(e^{-i pi/4} sqrt(pi/2) z)
    long double u = sqrtl((long double)M_PI / 2.0L) * (long double)z;
    std::complex<long double> zz(u / sqrtl(2.0L), -u / sqrtl(2.0L));  // e^{-i pi/4} u
    std::complex<long double> scaled = erfc_scaled_cf(zz);            // sqrt(pi) e^{zz^2} erfc(zz)
    // e^{-zz^2}: zz^2 = -i u^2
    long double u2 = u * u;
    std::complex<long double> em(cosl(u2), sinl(u2));  // e^{i u^2}
    std::complex<long double> erfc_val = scaled * em / sqrtl((long double)M_PI);
    std::complex<long double> eipi4(cosl((long double)M_PI / 4.0L), sinl((long double)M_PI / 4.0L));
    std::complex<long double> M = eipi4 / sqrtl(2.0L) * erfc_val;
    std::complex<long double> CS = std::complex<long double>(0.5L, 0.5L) - M;
    c = double(CS.real());
    s = double(CS.imag());
}

void fresnel_cs(double z, double& c, double& s) {
    if (z < 0) {
        fresnel_cs(-z, c, s);
        c = -c;
        s = -s;
        return;
    }
    if (z < kFresnelCross)
        fresnel_cs_series(z, c, s);
    else
        fresnel_cs_cf(z, c, s);
}

double cos_parabolic_kernel(double a) {
    if (a < 0) throw std::domain_error("cos_parabolic_kernel: requires a >= 0");
    if (a == 0.0) return 1.0;
    double z = std::sqrt(2.0 * a / M_PI);
    double c, s;
    fresnel_cs(z, c, s);
    return std::sqrt(M_PI / (2.0 * a)) * (std::cos(a) * c + std::sin(a) * s);
}

Cplx upper_gamma(Cplx a, double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_gamma: requires x > 0");
    if (x > a.real() + 1.0) {
        // Legendre CF: Gamma(a,x) = e^{-x} x^a / (x + 1-a - 1(1-a)/(x+3-a - 2(2-a)/(...)))
        const int kMax = 300;
        Cplx b = x + 1.0 - a;
        Cplx C = 1.0 / 1e-30;
        Cplx D = 1.0 / b;
        Cplx h = D;
        for (int i = 1; i <= kMax; ++i) {
            Cplx an = -double(i) * (double(i) - a);
            b += 2.0;
            D = an * D + b;
            if (std::abs(D) < 1e-30) D = 1e-30;
            C = b + an / C;
            if (std::abs(C) < 1e-30) C = 1e-30;
            D = 1.0 / D;
            Cplx delta = D * C;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // series for the lower function: gamma(a,x) = x^a e^{-x} sum x^n / (a(a+1)...(a+n))
    Cplx sum = 1.0 / a;
    Cplx term = sum;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + double(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    Cplx lower = std::exp(-x + a * std::log(x)) * sum;
    return gamma_complex(a) - lower;
}

Cplx erf_ray(double rho) {
    if (rho < 0) return -erf_ray(-rho);
    if (rho == 0.0) return {0.0, 0.0};
    if (rho <= 3.2) {
        // erf(z) = (2/sqrt(pi)) sum (-1)^k z^{2k+1}/(k! (2k+1)), z^2 = i rho^2
        std::complex<long double> z2(0.0L, (long double)rho * rho);
        std::complex<long double> term((long double)rho, 0.0L);
        std::complex<long double> sum = term;
        for (int k = 1; k < 300; ++k) {
            term *= -z2 / (long double)k;
            sum += term / (long double)(2 * k + 1);
            if (std::abs(term) < 1e-22L * std::abs(sum)) break;
        }
        std::complex<long double> eipi4(cosl((long double)M_PI / 4.0L),
                                        sinl((long double)M_PI / 4.0L));
        std::complex<long double> v = 2.0L / sqrtl((long double)M_PI) * eipi4 * sum;
        return {double(v.real()), double(v.imag())};
    }
    // erf = 1 - erfc(e^{i pi/4} rho), Re of the argument positive
    long double r = rho;
    std::complex<long double> zz(r / sqrtl(2.0L), r / sqrtl(2.0L));
    std::complex<long double> scaled = erfc_scaled_cf(zz);
    long double r2 = r * r;
    std::complex<long double> em(cosl(r2), -sinl(r2));  // e^{-zz^2}, zz^2 = i r^2
    std::complex<long double> erfc_val = scaled * em / sqrtl((long double)M_PI);
    std::complex<long double> v = std::complex<long double>(1.0L, 0.0L) - erfc_val;
    return {double(v.real()), double(v.imag())};
}

Cplx erf_ray_quadrature(double rho) {
    // (2/sqrt(pi)) e^{i pi/4} int_0^rho e^{-i tau^2} dtau by oscillation-split GK
    auto re = [](double tau) { return std::cos(tau * tau); };
    auto im = [](double tau) { return -std::sin(tau * tau); };
    std::vector<double> cuts{0.0};
    double tau = 0.0;
    while (tau < rho) {
        double step = (tau < 1.0) ? 1.0 : M_PI / (2.0 * tau);
        tau = std::min(rho, tau + step);
        cuts.push_back(tau);
    }
    Estimate cr = gk_quad_segments(re, cuts, 1e-13);
    Estimate ci = gk_quad_segments(im, cuts, 1e-13);
    Cplx integral(cr.value, ci.value);
    Cplx eipi4 = std::polar(1.0, M_PI / 4.0);
    return 2.0 / std::sqrt(M_PI) * eipi4 * integral;
}

}  // namespace zetasum
