#include "sps/arcs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sps/sifted.hpp"

namespace sps::arcs {

using arith::PrimeTable;

ArcParams::ArcParams(std::uint64_t x_, double delta_exp_)
    : x(x_), delta_exp(delta_exp_) {
  if (x < 3) throw std::domain_error("ArcParams: x too small");
  if (delta_exp <= 0.0) throw std::domain_error("ArcParams: Delta must be positive");
  double lx = std::log(static_cast<double>(x));
  P = std::pow(lx, delta_exp);
  Q = static_cast<double>(x) * std::pow(lx, -delta_exp);
  if (2.0 * P > Q)
    throw std::domain_error("ArcParams: 2P <= Q fails, arcs would overlap");
}

RationalApprox dirichlet_approx(expsum::Frequency alpha, double Q) {
  if (Q < 1.0) throw std::domain_error("dirichlet_approx: Q must be >= 1");
  double a0 = alpha.alpha;
  if (a0 == 0.0) return {0, 1, 0.0};

  // Convergents p_k/q_k of alpha; ||q alpha|| over q <= q_k is minimized at
  // convergent denominators, so the first q_k with |q_k alpha - p_k| <= 1/Q
  // is the smallest valid denominator overall.
  std::uint64_t p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  std::uint64_t p_cur = 0, q_cur = 1;    // p_0 = floor(alpha) = 0, q_0 = 1
  double rem = a0;
  for (int iter = 0; iter < 64; ++iter) {
    double err = static_cast<double>(q_cur) * a0 - static_cast<double>(p_cur);
    if (std::abs(err) * Q <= 1.0 && static_cast<double>(q_cur) <= Q) {
      double beta = a0 - static_cast<double>(p_cur) / static_cast<double>(q_cur);
      return {p_cur, q_cur, beta};
    }
    if (rem == 0.0) break;  // exact rational, already should have matched
    rem = 1.0 / rem;
    double ipart = std::floor(rem);
    // guard against double blowup on near-exact rationals
    if (!(ipart < 1e18)) break;
    std::uint64_t ai = static_cast<std::uint64_t>(ipart);
    rem -= ipart;
    std::uint64_t p_next = ai * p_cur + p_prev;
    std::uint64_t q_next = ai * q_cur + q_prev;
    p_prev = p_cur; q_prev = q_cur;
    p_cur = p_next; q_cur = q_next;
    if (static_cast<double>(q_cur) > 1e18) break;
  }
  double beta = a0 - static_cast<double>(p_cur) / static_cast<double>(q_cur);
  return {p_cur, q_cur, beta};
}

ArcClass classify(const RationalApprox& approx, const ArcParams& params) {
  return static_cast<double>(approx.q) < params.P ? ArcClass::Major : ArcClass::Minor;
}

double major_arc_measure(const ArcParams& params) {
  double total = 0.0;
  for (std::uint64_t q = 1; static_cast<double>(q) < params.P; ++q)
    total += static_cast<double>(arith::euler_phi(q)) * 2.0 /
             (static_cast<double>(q) * params.Q);
  return total;
}

std::complex<double> oscillatory_integral(double beta, std::uint64_t x) {
  double xd = static_cast<double>(x);
  if (std::abs(beta) < 1e-12) return {xd - 2.0, 0.0};
  std::complex<double> denom(0.0, 2.0 * std::numbers::pi * beta);
  return (expsum::unit(beta * xd) - expsum::unit(2.0 * beta)) / denom;
}

std::complex<double> major_S_prediction(const RationalApprox& approx, std::uint64_t x,
                                        const ArcParams* params) {
  if (params && classify(approx, *params) == ArcClass::Minor)
    throw std::domain_error("major_S_prediction: minor-arc input");
  double coeff = static_cast<double>(arith::moebius(approx.q)) /
                 static_cast<double>(arith::euler_phi(approx.q));
  return coeff * oscillatory_integral(approx.beta, x);
}

TBPrediction major_TB_prediction(const RationalApprox& approx, std::uint64_t x,
                                 std::uint64_t y, const PrimeTable& table,
                                 double D1, const ArcParams* params) {
  if (approx.q >= y)
    throw std::domain_error("major_TB_prediction: requires q < y");
  double lx = std::log(static_cast<double>(x));
  TBPrediction out;
  out.y_in_range = static_cast<double>(y) >= lx * lx &&
                   static_cast<double>(y) <= std::pow(lx, D1);
  out.value = arith::mertens_product(y, table) * major_S_prediction(approx, x, params);
  return out;
}

TransferReport transfer_identity_check(const RationalApprox& approx, std::uint64_t x,
                                       std::uint64_t y, const PrimeTable& table,
                                       double delta_exp) {
  expsum::Frequency alpha(approx.alpha());
  sifted::SiftedSet b = sifted::build_sifted(x, y, table);
  std::complex<double> tb = expsum::eval_T_B(alpha, b).value;
  std::complex<double> s = expsum::eval_S(alpha, x, table).value;
  double lx = std::log(static_cast<double>(x));
  TransferReport r;
  r.gap = std::abs(tb - s * arith::mertens_product(y, table));
  r.error_scale = static_cast<double>(x) * std::pow(lx, -3.0 * delta_exp);
  r.y_in_range = static_cast<double>(y) >= lx * lx;
  return r;
}

}  // namespace sps::arcs
