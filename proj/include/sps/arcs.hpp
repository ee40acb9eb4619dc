#pragma once

#include <complex>
#include <cstdint>

#include "sps/arith.hpp"
#include "sps/expsum.hpp"
#include "sps/rational.hpp"

namespace sps::arcs {

// P = (log x)^Delta, Q = x (log x)^{-Delta}. Arc disjointness needs 2P <= Q,
// checked at construction.
struct ArcParams {
  std::uint64_t x = 0;
  double delta_exp = 0.0;
  double P = 0.0;
  double Q = 0.0;
  ArcParams(std::uint64_t x, double delta_exp);
};

// Delta choice mirrored from the parameter selection Delta = 2 c0 + 8.
inline double default_delta(double c0) { return 2.0 * c0 + 8.0; }

enum class ArcClass { Major, Minor };

// Continued-fraction convergent search; among valid (a,q) the smallest q.
RationalApprox dirichlet_approx(expsum::Frequency alpha, double Q);

// Major iff q < P.
ArcClass classify(const RationalApprox& approx, const ArcParams& params);

// Total length of the major arcs, sum over q < P, (a,q)=1 of 2/(qQ).
double major_arc_measure(const ArcParams& params);

// I(beta, x) = integral_2^x e(beta z) dz; exact limit x - 2 near beta = 0.
std::complex<double> oscillatory_integral(double beta, std::uint64_t x);

// mu(q)/phi(q) * I(beta, x). If params given, throws on minor-arc input.
std::complex<double> major_S_prediction(const RationalApprox& approx, std::uint64_t x,
                                        const ArcParams* params = nullptr);

struct TBPrediction {
  std::complex<double> value;
  bool y_in_range = true;  // (log x)^2 <= y <= (log x)^{D1}
};

// major_S_prediction scaled by prod_{p<=y}(1 - 1/p). Requires q < y;
// y outside the cited range only flags the report.
TBPrediction major_TB_prediction(const RationalApprox& approx, std::uint64_t x,
                                 std::uint64_t y, const arith::PrimeTable& table,
                                 double D1 = 4.0, const ArcParams* params = nullptr);

struct TransferReport {
  double gap = 0.0;          // |T_B(alpha) - S(alpha) prod(1-1/p)|
  double error_scale = 0.0;  // x (log x)^{-3 Delta}
  bool y_in_range = true;
};

// Measures how closely sifted numbers mimic primes at a major-arc frequency.
TransferReport transfer_identity_check(const RationalApprox& approx, std::uint64_t x,
                                       std::uint64_t y, const arith::PrimeTable& table,
                                       double delta_exp);

}  // namespace sps::arcs
