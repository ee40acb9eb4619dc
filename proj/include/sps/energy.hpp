#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sps/arith.hpp"

namespace sps::energy {

// A subset of the primes <= x with relative density delta = |A| log x / x.
struct PrimeSubset {
  std::uint64_t x = 0;
  std::vector<std::uint32_t> members;  // sorted, all prime
  double delta = 0.0;
};

// Validates membership (all prime, <= x) and sorts/dedups.
PrimeSubset make_subset(std::uint64_t x, std::vector<std::uint32_t> members,
                        const arith::PrimeTable& table);

// r(n) = sum_{p1+p2=n, p1,p2 in A} w(p1) w(p2), w = log p (weighted) or 1.
// Dense over 0..2x; nonzero only in [4, 2x].
struct RepFunction {
  bool weighted = false;
  std::uint64_t x = 0;
  std::vector<double> values;  // index n, size 2x+1
};

// {p1 + p2 : p1, p2 in A}, p1 = p2 allowed; sorted, deduplicated.
std::vector<std::uint32_t> sumset(const PrimeSubset& a);
std::uint64_t sumset_size(const PrimeSubset& a);

// Exact self-convolution; chunk-parallel over output indices with a fixed
// per-n accumulation order, so the result is identical for any thread count.
RepFunction rep_function(const PrimeSubset& a, bool weighted,
                         const arith::PrimeTable& table);

// E_w = sum_n r_w(n)^2 = integral_0^1 |S_A|^4 (Parseval for trig polynomials).
double energy_weighted(const PrimeSubset& a, const arith::PrimeTable& table);

struct EnergyReport {
  double L = 0.0;             // sum_{p in A} log p
  double Ew = 0.0;            // weighted energy
  std::uint64_t sumset_card = 0;
  double lemma1_bound = 0.0;  // L^4 / E_w <= |A+A|
};

EnergyReport lemma1_report(const PrimeSubset& a, const arith::PrimeTable& table);

// J = sum over quadruples (p1, p2, p3, p4) with p1 prime <= x, p2,p3,p4 in A,
// p1 + p2 = p3 + p4, of log p1 log p2 log p3 log p4. Always >= E_w.
double mixed_energy_S(const PrimeSubset& a, const arith::PrimeTable& table);

// K = sum over (n1, p2, p3, p4), n1 <= x (or n1 in B(x, sieve_y)), p's in A,
// n1 + p2 = p3 + p4, of log p2 log p3 log p4. K <= L^3; K_B <= K.
double mixed_energy_T(const PrimeSubset& a, const arith::PrimeTable& table,
                      std::optional<std::uint64_t> sieve_y = std::nullopt);

struct ChainReport {
  double Ew = 0.0;
  double J = 0.0;
  double K = 0.0;
  double K_B = 0.0;
  double L3 = 0.0;
  double headline_ratio = 0.0;  // E_w / (delta^3 x^3 log log x)
  bool eq1_ok = false;          // E_w <= J
  bool eq2_ok = false;          // K_B <= K <= L^3
};

ChainReport chain_check(const PrimeSubset& a, std::uint64_t y,
                        const arith::PrimeTable& table);

}  // namespace sps::energy
