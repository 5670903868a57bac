#include "zetasum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace zetasum {

namespace {

// Nodes/weights of tanh-sinh on (-1,1): x = tanh((pi/2) sinh(t)), t = k*h.
struct DeNode {
    double x;  // abscissa in (0,1), symmetric
    double w;
};

std::vector<DeNode> de_nodes(double h, int kmax) {
    std::vector<DeNode> nodes;
    nodes.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        double t = k * h;
        double sh = std::sinh(t);
        double ch = std::cosh(t);
        double x = std::tanh(M_PI_2 * sh);
        double w = M_PI_2 * ch / std::pow(std::cosh(M_PI_2 * sh), 2);
        if (1.0 - x < 1e-17 && k > 0) break;
        nodes.push_back({x, w});
    }
    return nodes;
}

template <typename T, typename F>
void de_quad_impl(const F& f, double a, double b, double tol, T& out_value, double& out_error) {
    const double c = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T prev{};
    T result{};
    double err = 1e300;
    // level refinement: h = 1 / 2^level
    for (int level = 2; level <= 12; ++level) {
        double h = 1.0 / double(1 << level);
        int kmax = int(7.0 / h);
        auto nodes = de_nodes(h, kmax);
        T sum{};
        for (size_t k = 0; k < nodes.size(); ++k) {
            // at level > 2 only odd k are new, but recomputing keeps this simple
            double x = nodes[k].x, w = nodes[k].w;
            double xp = mid + c * x;
            double xm = mid - c * x;
            if (xp >= b) xp = std::nextafter(b, a);
            if (xm <= a) xm = std::nextafter(a, b);
            T val = f(xp);
            if (k > 0) val += f(xm);
            sum += val * w;
        }
        T cur = sum * (c * h);
        if (level > 2) {
            err = std::abs(cur - prev);
            result = cur;
            if (err < tol * std::max(1.0, std::abs(cur)) || err < 1e-16 * std::abs(cur)) break;
        }
        prev = cur;
        result = cur;
    }
    out_value = result;
    out_error = err;
}

// G7,K15 nodes (positive half; symmetric).
const double kKronrodX[8] = {0.000000000000000, 0.207784955007898, 0.405845151377397,
                             0.586087235467691, 0.741531185599394, 0.864864423359769,
                             0.949107912342759, 0.991455371120813};
const double kKronrodW[8] = {0.209482141084728, 0.204432940075298, 0.190350578064785,
                             0.169004726639267, 0.140653259715525, 0.104790010322250,
                             0.063092092629979, 0.022935322010529};
const double kGaussW[4] = {0.417959183673469, 0.381830050505119, 0.279705391489277,
                           0.129484966168870};

template <typename T, typename F>
void gk15(const F& f, double a, double b, T& kres, double& err) {
    const double c = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T fv[15];
    T fc = f(mid);
    T kr = fc * kKronrodW[0];
    T gr = fc * kGaussW[0];
    fv[0] = fc;
    for (int i = 1; i < 8; ++i) {
        T f1 = f(mid + c * kKronrodX[i]);
        T f2 = f(mid - c * kKronrodX[i]);
        kr += (f1 + f2) * kKronrodW[i];
        if (i % 2 == 0) gr += (f1 + f2) * kGaussW[i / 2];
    }
    kres = kr * c;
    T gres = gr * c;
    err = std::abs(kres - gres);
}

struct Interval {
    double a, b, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

template <typename T, typename F>
void gk_adaptive(const F& f, double a, double b, double tol, int max_intervals, T& value,
                 double& error) {
    struct Piece {
        double a, b, err;
        T val;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    std::priority_queue<Piece> heap;
    T v0;
    double e0;
    gk15(f, a, b, v0, e0);
    heap.push({a, b, e0, v0});
    double total_err = e0;
    int n = 1;
    while (total_err > tol && n < max_intervals) {
        Piece top = heap.top();
        heap.pop();
        total_err -= top.err;
        double m = 0.5 * (top.a + top.b);
        if (m <= top.a || m >= top.b) {  // cannot split further
            total_err += top.err;
            heap.push(top);
            break;
        }
        T v1, v2;
        double er1, er2;
        gk15(f, top.a, m, v1, er1);
        gk15(f, m, top.b, v2, er2);
        heap.push({top.a, m, er1, v1});
        heap.push({m, top.b, er2, v2});
        total_err += er1 + er2;
        ++n;
    }
    T sum{};
    double esum = 0;
    while (!heap.empty()) {
        sum += heap.top().val;
        esum += heap.top().err;
        heap.pop();
    }
    value = sum;
    error = esum;
}

}  // namespace

Estimate de_quad(const RealFn& f, double a, double b, double tol) {
    double v, e;
    de_quad_impl<double>(f, a, b, tol, v, e);
    return {v, e};
}

CplxEstimate de_quad_c(const CplxFn& f, double a, double b, double tol) {
    Cplx v;
    double e;
    de_quad_impl<Cplx>(f, a, b, tol, v, e);
    return {v, e};
}

Estimate de_quad_0inf(const RealFn& f, double tol, double split) {
    Estimate head = de_quad(f, 0.0, split, tol);
    // x = split/u maps (0,1] to [split, inf)
    Estimate tail = de_quad([&](double u) { return f(split / u) * split / (u * u); }, 0.0, 1.0, tol);
    return head + tail;
}

CplxEstimate de_quad_0inf_c(const CplxFn& f, double tol, double split) {
    CplxEstimate head = de_quad_c(f, 0.0, split, tol);
    CplxEstimate tail =
        de_quad_c([&](double u) { return f(split / u) * (split / (u * u)); }, 0.0, 1.0, tol);
    return {head.value + tail.value, head.error + tail.error};
}

Estimate gk_quad(const RealFn& f, double a, double b, double tol, int max_intervals) {
    double v, e;
    gk_adaptive<double>(f, a, b, tol, max_intervals, v, e);
    return {v, e};
}

CplxEstimate gk_quad_c(const CplxFn& f, double a, double b, double tol, int max_intervals) {
    Cplx v;
    double e;
    gk_adaptive<Cplx>(f, a, b, tol, max_intervals, v, e);
    return {v, e};
}

Estimate gk_quad_segments(const RealFn& f, const std::vector<double>& cuts, double tol) {
    Estimate total{0.0, 0.0};
    if (cuts.size() < 2) return total;
    double per = tol / double(cuts.size() - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) total = total + gk_quad(f, cuts[i], cuts[i + 1], per);
    return total;
}

Estimate wynn_epsilon(const std::vector<double>& s) {
    size_t n = s.size();
    if (n == 0) return {0.0, 1e300};
    if (n == 1) return {s[0], std::abs(s[0])};
    double best = s.back();
    double best_err = std::abs(s[n - 1] - s[n - 2]);
    std::vector<double> col = s;           // eps_0
    std::vector<double> older(n + 1, 0.0);  // eps_{-1} = 0
    for (size_t k = 1; k < n; ++k) {
        std::vector<double> next(n - k, 0.0);
        bool bad = false;
        for (size_t i = 0; i + k < n; ++i) {
            double diff = col[i + 1] - col[i];
            if (diff == 0.0) {
                bad = true;
                break;
            }
            next[i] = older[i + 1] + 1.0 / diff;
        }
        if (bad) break;
        if (k % 2 == 0 && !next.empty()) {
            double err = std::abs(next.back() - col.back());
            if (err < best_err) {
                best = next.back();
                best_err = err;
            }
        }
        older = std::move(col);
        col = std::move(next);
    }
    return {best, best_err};
}

Estimate oscillatory_quad(const RealFn& f, double a, double h, double tol, int max_segments) {
    std::vector<double> partials;
    KahanSum acc;
    double prev_seg = 1e300;
    for (int k = 0; k < max_segments; ++k) {
        double lo = a + k * h, hi = a + (k + 1) * h;
        Estimate seg = gk_quad(f, lo, hi, tol * 0.1, 200);
        acc.add(seg.value);
        partials.push_back(acc.result());
        // stop early if segments are absolutely negligible
        if (std::abs(seg.value) < tol * 1e-3 && prev_seg < tol * 1e-3 && k > 4) {
            return {acc.result(), std::abs(seg.value) + tol * 1e-3};
        }
        prev_seg = std::abs(seg.value);
        if (partials.size() >= 24) {
            Estimate acc_est = wynn_epsilon(partials);
            if (acc_est.error < tol) return acc_est;
        }
    }
    Estimate acc_est = wynn_epsilon(partials);
    return acc_est;
}

}  // namespace zetasum
