#include "zetasum/arith.hpp"

#include <algorithm>
#include <cmath>

namespace zetasum {

ArithTable::ArithTable(uint64_t n_max, uint64_t cap) : n_max_(n_max) {
    if (n_max == 0) throw std::invalid_argument("ArithTable: n_max must be >= 1");
    if (n_max > cap) throw std::invalid_argument("ArithTable: n_max exceeds configured cap");
    size_t sz = size_t(n_max) + 1;
    spf_.assign(sz, 0);
    mu_.assign(sz, 0);
    lambda_.assign(sz, 0);
    phi_.assign(sz, 0);
    omega_.assign(sz, 0);
    odd_part_.assign(sz, 0);

    mu_[1] = 1;
    lambda_[1] = 1;
    phi_[1] = 1;
    omega_[1] = 0;
    odd_part_[1] = 1;
    spf_[1] = 1;

    std::vector<uint32_t> primes;
    primes.reserve(size_t(double(n_max) / std::max(1.0, std::log(double(n_max)) - 1.1)) + 16);
    for (uint64_t i = 2; i <= n_max; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = uint32_t(i);
            mu_[i] = -1;
            lambda_[i] = -1;
            phi_[i] = uint32_t(i - 1);
            omega_[i] = 1;
            primes.push_back(uint32_t(i));
        }
        for (uint32_t p : primes) {
            uint64_t ip = i * p;
            if (p > spf_[i] || ip > n_max) break;
            spf_[ip] = p;
            lambda_[ip] = int8_t(-lambda_[i]);
            if (i % p == 0) {
                mu_[ip] = 0;
                phi_[ip] = uint32_t(phi_[i] * p);
                omega_[ip] = omega_[i];
            } else {
                mu_[ip] = int8_t(-mu_[i]);
                phi_[ip] = uint32_t(phi_[i] * (p - 1));
                omega_[ip] = uint8_t(omega_[i] + 1);
            }
        }
        odd_part_[i] = (i % 2 == 0) ? odd_part_[i / 2] : uint32_t(i);
    }
}

std::vector<std::pair<uint32_t, uint32_t>> ArithTable::factor(uint64_t n) const {
    check(n);
    std::vector<std::pair<uint32_t, uint32_t>> out;
    while (n > 1) {
        uint32_t p = spf_[n];
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

uint64_t ArithTable::divisor_count_k(uint64_t n, int k) const {
    if (k < 2) throw std::invalid_argument("divisor_count_k: k must be >= 2");
    check(n);
    // multiplicative: product over p^e of C(e + k - 1, k - 1)
    uint64_t result = 1;
    for (auto [p, e] : factor(n)) {
        (void)p;
        uint64_t binom = 1;
        for (uint32_t i = 1; i <= e; ++i) {
            // C(e + k - 1, e) built incrementally: multiply (k - 1 + i), divide i
            binom = binom * (uint64_t(k) - 1 + i) / i;
        }
        result *= binom;
    }
    return result;
}

uint64_t ArithTable::divisor_count_of_square(uint64_t n) const {
    check(n);
    uint64_t result = 1;
    for (auto [p, e] : factor(n)) {
        (void)p;
        result *= (2 * uint64_t(e) + 1);
    }
    return result;
}

void ArithTable::export_csv(std::ostream& os, const std::string& function, uint64_t lo,
                            uint64_t hi, bool header) const {
    if (lo < 1 || hi > n_max_ || lo > hi) throw std::out_of_range("export_csv: bad range");
    int dk = 0;
    if (function.rfind("dk:", 0) == 0) dk = std::stoi(function.substr(3));
    if (header) os << "n,value\n";
    for (uint64_t n = lo; n <= hi; ++n) {
        os << n << ',';
        if (function == "mu")
            os << int(mobius(n));
        else if (function == "lambda")
            os << int(liouville(n));
        else if (function == "phi")
            os << totient(n);
        else if (function == "d")
            os << divisor_count(n);
        else if (function == "omega")
            os << omega_distinct(n);
        else if (function == "a")
            os << greatest_odd_divisor(n);
        else if (dk >= 2)
            os << divisor_count_k(n, dk);
        else
            throw std::invalid_argument("export_csv: unknown function " + function);
        os << '\n';
    }
}

}  // namespace zetasum
