#pragma once

#include <cstdint>

namespace sps::arcs {

// Dirichlet approximation certificate: alpha = a/q + beta, gcd(a,q) = 1,
// 0 <= a <= q, |beta| <= 1/(qQ) for the Q it was produced against.
struct RationalApprox {
  std::uint64_t a = 0;
  std::uint64_t q = 1;
  double beta = 0.0;

  double alpha() const {
    return static_cast<double>(a) / static_cast<double>(q) + beta;
  }
};

}  // namespace sps::arcs
