#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sps::arith {

// Euler-Mascheroni constant, no closed form; fixed to > 12 digits.
inline constexpr double kEulerGamma = 0.57721566490153286;

// Kahan-compensated accumulator for long prefix sums.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Thrown when an operation exceeds a configured capability limit
// (as opposed to a domain/range violation).
class capability_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Smallest-prime-factor sieve up to `limit`, with the prime list and a
// compensated prefix array of Chebyshev theta(n) = sum_{p<=n} log p.
// Immutable after construction; safe to share across threads.
class PrimeTable {
public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // smallest prime factor of n, 2 <= n <= limit
  std::uint32_t spf(std::uint64_t n) const {
    if (n < 2 || n > limit_) throw std::out_of_range("spf: n outside [2, limit]");
    return spf_[n];
  }
  bool is_prime(std::uint64_t n) const {
    return n >= 2 && n <= limit_ && spf_[n] == n;
  }
  // theta(n) = sum_{p <= n} log p, 0 <= n <= limit
  double theta(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("theta: n > limit");
    return theta_[n];
  }
  // number of primes <= n
  std::size_t pi(std::uint64_t n) const;

private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
  std::vector<double> theta_;
};

// Euler totient by trial division.
std::uint64_t euler_phi(std::uint64_t q);

// Moebius function, in {-1, 0, 1}.
int moebius(std::uint64_t q);

// Exact finite product prod_{p <= y} (1 - 1/p). Empty product is 1.
double mertens_product(std::uint64_t y, const PrimeTable& table);

// Exact finite sum sum_{p <= y} 1/p.
double mertens_prime_sum(std::uint64_t y, const PrimeTable& table);

// Dusart lower bound n(log n + log log n - 1) for the n-th prime, n >= 2.
double nth_prime_lower(std::uint64_t n);

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) { std::uint64_t t = a % b; a = b; b = t; }
  return a;
}

}  // namespace sps::arith
