#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetasum {

// Sieved values of the arithmetic functions driving the summation operators.
// Immutable after construction; concurrent reads are safe.
class ArithTable {
  public:
    static constexpr uint64_t kDefaultMaxCap = 10'000'000;

    explicit ArithTable(uint64_t n_max, uint64_t cap = kDefaultMaxCap);

    uint64_t n_max() const { return n_max_; }

    int mobius(uint64_t n) const { return mu_[check(n)]; }
    int liouville(uint64_t n) const { return lambda_[check(n)]; }
    uint64_t totient(uint64_t n) const { return phi_[check(n)]; }
    int omega_distinct(uint64_t n) const { return omega_[check(n)]; }
    uint64_t greatest_odd_divisor(uint64_t n) const { return odd_part_[check(n)]; }
    uint32_t smallest_prime_factor(uint64_t n) const { return spf_[check(n)]; }

    // Number of ordered k-tuples with product n (k >= 2); d(n) is k = 2.
    uint64_t divisor_count_k(uint64_t n, int k) const;
    uint64_t divisor_count(uint64_t n) const { return divisor_count_k(n, 2); }
    // d(n^2) computed from the factorization of n.
    uint64_t divisor_count_of_square(uint64_t n) const;
    uint64_t two_pow_omega(uint64_t n) const { return uint64_t(1) << omega_distinct(n); }

    // prime-power factorization of n <= n_max via the spf array
    std::vector<std::pair<uint32_t, uint32_t>> factor(uint64_t n) const;

    // CSV export: lines "n,value". Functions: mu, lambda, phi, d, dk:K, omega, a.
    void export_csv(std::ostream& os, const std::string& function, uint64_t lo, uint64_t hi,
                    bool header) const;

  private:
    uint64_t check(uint64_t n) const {
        if (n < 1 || n > n_max_) throw std::out_of_range("ArithTable: n out of range");
        return n;
    }

    uint64_t n_max_;
    std::vector<uint32_t> spf_;
    std::vector<int8_t> mu_;
    std::vector<int8_t> lambda_;
    std::vector<uint32_t> phi_;
    std::vector<uint8_t> omega_;
    std::vector<uint32_t> odd_part_;
};

}  // namespace zetasum
