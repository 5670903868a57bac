#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetasum/estimate.hpp"

namespace zetasum {

// A member of the admissible decay class M_alpha: twice continuously
// differentiable with f^{(j)}(x) = O(x^{-alpha-j}), alpha > 1.
struct TestFunction {
    std::string name;
    std::function<double(double)> f;
    double alpha = 0.0;          // decay exponent (class parameter)
    double value_at_zero = 0.0;  // f(0)
    std::optional<double> small_x_exponent;  // beta with f = O(x^beta) near 0
    bool vanishing_first_moment = false;     // f*(1) = 0

    // closed forms, when known
    std::function<Cplx(Cplx)> mellin_closed_form;          // f*(s)
    std::function<double(double)> fourier_cosine_closed_form;  // (Fc f)(x)

    // empirical bound sup_{x>=1} |f(x)| x^alpha, measured on a sample grid
    double decay_constant = 0.0;

    bool has_mellin_cf() const { return bool(mellin_closed_form); }
    bool has_fc_cf() const { return bool(fourier_cosine_closed_form); }

    // int_0^inf f (closed form when available, cached quadrature otherwise)
    double integral() const;
    // int_0^inf f(u) ln(u)^j du, cached
    double log_moment(int j) const;

  private:
    mutable std::vector<double> moments_;  // index j
    mutable bool moments_ready_[16] = {};
};

// Built-in family. Names: exp, gauss, xexp, x2exp, cauchy-1.5, cauchy-2, expbal.
const TestFunction& builtin_test_function(const std::string& name);
std::vector<std::string> builtin_test_function_names();

// Sampled check that |f(x)| x^alpha stays bounded on [1, 100]; returns the
// measured sup (also stored as decay_constant at registration).
double measure_decay_constant(const TestFunction& tf);

}  // namespace zetasum
