#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sps/arith.hpp"
#include "sps/energy.hpp"
#include "sps/rational.hpp"
#include "sps/sifted.hpp"

namespace sps::expsum {

// A point on the unit circle, reduced mod 1 on construction.
struct Frequency {
  double alpha = 0.0;
  Frequency() = default;
  explicit Frequency(double a);
};

// e(t) = exp(2 pi i t), argument reduced mod 1 before the trig call.
std::complex<double> unit(double t);

enum class SumKind { S, SA, T, TB };

struct ExpSumValue {
  std::complex<double> value;
  std::uint64_t terms = 0;  // number of summands
  SumKind kind = SumKind::T;
};

// T(alpha) = sum_{n<=x} e(alpha n); closed geometric form, alpha = 0 gives x.
ExpSumValue eval_T(Frequency alpha, std::uint64_t x);
// Direct-summation mode, oracle for the closed form.
ExpSumValue eval_T_direct(Frequency alpha, std::uint64_t x);

// S(alpha) = sum_{p<=x} e(alpha p) log p.
ExpSumValue eval_S(Frequency alpha, std::uint64_t x, const arith::PrimeTable& table);

// S_A(alpha) = sum_{p in A} e(alpha p) log p.
ExpSumValue eval_S_A(Frequency alpha, const energy::PrimeSubset& a);

// T_B(alpha) = sum_{n in B} e(alpha n).
ExpSumValue eval_T_B(Frequency alpha, const sifted::SiftedSet& b);

// Inclusion-exclusion route: sum over squarefree y-smooth d of
// mu(d) T(d alpha mod 1, floor(x/d)). Equals eval_T_B; depth cap as in
// phi_count_legendre.
ExpSumValue eval_T_B_ie(Frequency alpha, std::uint64_t x, std::uint64_t y,
                        const arith::PrimeTable& table, unsigned max_depth = 25);

// Vinogradov minor-arc expression x log^3 x (x^{-1/2} q^{1/2} + q^{-1/2}
// + exp(-sqrt(log x)/2)); no implicit constant applied.
double vinogradov_bound(const arcs::RationalApprox& approx, std::uint64_t x);

// Minor-arc expression for T_B: q log q + x log x / q + sqrt(x) log q
// + x^{1 - 1/(4D)}.
double minor_TB_bound(const arcs::RationalApprox& approx, std::uint64_t x, double D);

// S_A at alpha_j = j/N for j = 0..N-1. Fractional parts are computed with
// exact integer arithmetic (j p mod N), so results are grid-exact; chunked
// across workers with output identical to sequential evaluation.
std::vector<std::complex<double>> grid_S_A(const energy::PrimeSubset& a, std::uint64_t n_points);

}  // namespace sps::expsum
