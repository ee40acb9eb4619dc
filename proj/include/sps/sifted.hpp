#pragma once

#include <cstdint>
#include <vector>

#include "sps/arith.hpp"

namespace sps::sifted {

// B(x,y) = {n <= x : every prime factor of n exceeds y}.
// 1 is a member by convention (it has no prime factor at all); this is
// what Legendre's identity and the residue-partition sums require.
struct SiftedSet {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::vector<std::uint32_t> members;
  double u = 0.0;  // log x / log y
};

SiftedSet build_sifted(std::uint64_t x, std::uint64_t y, const arith::PrimeTable& table);

// Phi(x,y) = |B(x,y)| by direct scan of the spf table.
std::uint64_t phi_count(std::uint64_t x, std::uint64_t y, const arith::PrimeTable& table);

// Legendre inclusion-exclusion: sum over squarefree d composed of primes <= y
// of mu(d) * floor(x/d). Exact; must equal phi_count. Term depth is capped at
// pi(y) <= max_depth sieving primes (capability error beyond that).
std::uint64_t phi_count_legendre(std::uint64_t x, std::uint64_t y,
                                 const arith::PrimeTable& table,
                                 unsigned max_depth = 25);

// Phi(x,y;a,q) = |{n in B(x,y) : n == a (mod q)}|, residue normalized to [0,q).
std::uint64_t phi_count_ap(std::uint64_t x, std::uint64_t y, std::uint64_t a,
                           std::uint64_t q, const arith::PrimeTable& table);

// de Bruijn main term x * prod_{p<=y}(1 - 1/p).
double debruijn_main_term(std::uint64_t x, std::uint64_t y, const arith::PrimeTable& table);

// phi(q) * Phi(x,y;a,q) / Phi(x,y); near 1 in the cited theorem's ranges.
// Requires gcd(a,q) = 1.
double xuan_ratio(std::uint64_t x, std::uint64_t y, std::uint64_t a,
                  std::uint64_t q, const arith::PrimeTable& table);

}  // namespace sps::sifted
