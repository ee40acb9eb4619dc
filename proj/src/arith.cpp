#include "sps/arith.hpp"

#include <algorithm>
#include <cmath>

namespace sps::arith {

namespace {
constexpr std::uint64_t kDefaultCeiling = 100'000'000;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");
  if (limit > kDefaultCeiling) throw std::domain_error("sieve: limit above configured ceiling 1e8");

  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }

  theta_.assign(limit + 1, 0.0);
  KahanSum acc;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (spf_[n] == n) acc.add(std::log(static_cast<double>(n)));
    theta_[n] = acc.value();
  }
}

std::size_t PrimeTable::pi(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("pi: n > limit");
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

std::uint64_t euler_phi(std::uint64_t q) {
  if (q == 0) throw std::domain_error("euler_phi: q must be positive");
  std::uint64_t result = q;
  std::uint64_t n = q;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::uint64_t q) {
  if (q == 0) throw std::domain_error("moebius: q must be positive");
  int factors = 0;
  std::uint64_t n = q;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

double mertens_product(std::uint64_t y, const PrimeTable& table) {
  if (y > table.limit()) throw std::out_of_range("mertens_product: y > table limit");
  double prod = 1.0;
  for (std::uint32_t p : table.primes()) {
    if (p > y) break;
    prod *= 1.0 - 1.0 / static_cast<double>(p);
  }
  return prod;
}

double mertens_prime_sum(std::uint64_t y, const PrimeTable& table) {
  if (y > table.limit()) throw std::out_of_range("mertens_prime_sum: y > table limit");
  KahanSum acc;
  for (std::uint32_t p : table.primes()) {
    if (p > y) break;
    acc.add(1.0 / static_cast<double>(p));
  }
  return acc.value();
}

double nth_prime_lower(std::uint64_t n) {
  if (n < 2) throw std::domain_error("nth_prime_lower: stated for n >= 2");
  double dn = static_cast<double>(n);
  double ln = std::log(dn);
  return dn * (ln + std::log(ln) - 1.0);
}

}  // namespace sps::arith
