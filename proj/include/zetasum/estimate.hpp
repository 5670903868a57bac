#pragma once

#include <cmath>
#include <complex>

namespace zetasum {

using Cplx = std::complex<double>;

// A numeric value carrying an absolute error estimate (truncation + quadrature).
struct Estimate {
    double value = 0.0;
    double error = 0.0;

    Estimate() = default;
    Estimate(double v, double e) : value(v), error(e) {}

    Estimate operator+(const Estimate& o) const { return {value + o.value, error + o.error}; }
    Estimate operator-(const Estimate& o) const { return {value - o.value, error + o.error}; }
    Estimate operator*(double c) const { return {value * c, error * std::abs(c)}; }
    Estimate operator-() const { return {-value, error}; }
};

struct CplxEstimate {
    Cplx value{0.0, 0.0};
    double error = 0.0;
};

// Neumaier compensated accumulator.
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double result() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumC {
  public:
    void add(const Cplx& x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    Cplx result() const { return {re_.result(), im_.result()}; }

  private:
    KahanSum re_, im_;
};

}  // namespace zetasum
