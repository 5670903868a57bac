#include "zetasum/testfn.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "zetasum/quadrature.hpp"
#include "zetasum/special.hpp"

namespace zetasum {

double TestFunction::integral() const { return log_moment(0); }

double TestFunction::log_moment(int j) const {
    if (j < 0 || j >= 16) throw std::invalid_argument("log_moment: j out of range");
    if (size_t(j) >= moments_.size()) moments_.resize(j + 1, 0.0);
    if (!moments_ready_[j]) {
        if (j == 0 && has_mellin_cf()) {
            moments_[0] = mellin_closed_form(Cplx(1.0, 0.0)).real();
        } else {
            auto g = [&](double x) { return f(x) * std::pow(std::log(x), j); };
            moments_[j] = de_quad_0inf(g, 1e-14).value;
        }
        moments_ready_[j] = true;
    }
    return moments_[j];
}

double measure_decay_constant(const TestFunction& tf) {
    double sup = 0.0;
    for (double x = 1.0; x <= 100.0; x *= 1.07) {
        double v = std::abs(tf.f(x)) * std::pow(x, tf.alpha);
        sup = std::max(sup, v);
    }
    return sup;
}

namespace {

TestFunction make_exp() {
    TestFunction t;
    t.name = "exp";
    t.f = [](double x) { return std::exp(-x); };
    t.alpha = 10.0;
    t.value_at_zero = 1.0;
    t.small_x_exponent = 0.0;
    t.mellin_closed_form = [](Cplx s) { return gamma_complex(s); };
    t.fourier_cosine_closed_form = [](double x) {
        return std::sqrt(2.0 / M_PI) / (1.0 + x * x);
    };
    return t;
}

TestFunction make_gauss() {
    TestFunction t;
    t.name = "gauss";
    t.f = [](double x) { return std::exp(-0.5 * x * x); };
    t.alpha = 12.0;
    t.value_at_zero = 1.0;
    t.small_x_exponent = 0.0;
    t.mellin_closed_form = [](Cplx s) {
        return std::pow(2.0, 0.5 * s - 1.0) * gamma_complex(0.5 * s);
    };
    t.fourier_cosine_closed_form = [](double x) { return std::exp(-0.5 * x * x); };
    return t;
}

TestFunction make_xexp() {
    TestFunction t;
    t.name = "xexp";
    t.f = [](double x) { return x * std::exp(-x); };
    t.alpha = 10.0;
    t.value_at_zero = 0.0;
    t.small_x_exponent = 1.0;
    t.mellin_closed_form = [](Cplx s) { return gamma_complex(s + 1.0); };
    t.fourier_cosine_closed_form = [](double x) {
        double d = 1.0 + x * x;
        return std::sqrt(2.0 / M_PI) * (1.0 - x * x) / (d * d);
    };
    return t;
}

TestFunction make_x2exp() {
    TestFunction t;
    t.name = "x2exp";
    t.f = [](double x) { return x * x * std::exp(-x); };
    t.alpha = 10.0;
    t.value_at_zero = 0.0;
    t.small_x_exponent = 2.0;
    t.mellin_closed_form = [](Cplx s) { return gamma_complex(s + 2.0); };
    t.fourier_cosine_closed_form = [](double x) {
        double d = 1.0 + x * x;
        return std::sqrt(2.0 / M_PI) * 2.0 * (1.0 - 3.0 * x * x) / (d * d * d);
    };
    return t;
}

TestFunction make_cauchy(double p) {
    TestFunction t;
    t.name = (p == 1.5) ? "cauchy-1.5" : "cauchy-2";
    t.f = [p](double x) { return std::pow(1.0 + x * x, -p); };
    t.alpha = 2.0 * p;
    t.value_at_zero = 1.0;
    t.small_x_exponent = 0.0;
    t.mellin_closed_form = [p](Cplx s) {
        // (1/2) B(s/2, p - s/2), 0 < Re s < 2p
        return 0.5 * gamma_complex(0.5 * s) * gamma_complex(p - 0.5 * s) /
               gamma_complex(Cplx(p, 0.0));
    };
    if (p == 2.0) {
        t.fourier_cosine_closed_form = [](double x) {
            return std::sqrt(2.0 / M_PI) * 0.25 * M_PI * (1.0 + x) * std::exp(-x);
        };
    }
    return t;
}

TestFunction make_expbal() {
    TestFunction t;
    t.name = "expbal";
    t.f = [](double x) { return (1.0 - x) * std::exp(-x); };
    t.alpha = 10.0;
    t.value_at_zero = 1.0;
    t.small_x_exponent = 0.0;
    t.vanishing_first_moment = true;  // f*(1) = Gamma(1) - Gamma(2) = 0
    t.mellin_closed_form = [](Cplx s) { return gamma_complex(s) * (1.0 - s); };
    t.fourier_cosine_closed_form = [](double x) {
        double d = 1.0 + x * x;
        return std::sqrt(2.0 / M_PI) * (1.0 / d - (1.0 - x * x) / (d * d));
    };
    return t;
}

std::map<std::string, TestFunction>& registry() {
    static std::map<std::string, TestFunction> reg = [] {
        std::map<std::string, TestFunction> r;
        for (TestFunction t : {make_exp(), make_gauss(), make_xexp(), make_x2exp(),
                               make_cauchy(1.5), make_cauchy(2.0), make_expbal()}) {
            t.decay_constant = measure_decay_constant(t);
            r.emplace(t.name, std::move(t));
        }
        return r;
    }();
    return reg;
}

}  // namespace

const TestFunction& builtin_test_function(const std::string& name) {
    auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw std::invalid_argument("unknown test function: " + name);
    return it->second;
}

std::vector<std::string> builtin_test_function_names() {
    std::vector<std::string> names;
    for (auto& [k, v] : registry()) names.push_back(k);
    return names;
}

}  // namespace zetasum
