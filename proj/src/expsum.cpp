#include "sps/expsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sps/parallel.hpp"

namespace sps::expsum {

using arith::KahanSum;
using arith::PrimeTable;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double t) {
  double f = t - std::floor(t);
  if (f >= 1.0) f = 0.0;  // floor rounding at the seam
  return f;
}

// complex Kahan pair
struct CSum {
  KahanSum re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};
}  // namespace

Frequency::Frequency(double a) {
  if (!std::isfinite(a)) throw std::domain_error("Frequency: non-finite alpha");
  alpha = frac(a);
}

std::complex<double> unit(double t) {
  double f = frac(t);
  return {std::cos(kTwoPi * f), std::sin(kTwoPi * f)};
}

ExpSumValue eval_T(Frequency alpha, std::uint64_t x) {
  if (alpha.alpha == 0.0)
    return {std::complex<double>(static_cast<double>(x), 0.0), x, SumKind::T};
  // e(a) (e(a x) - 1) / (e(a) - 1), with e(a x) reduced via frac(a*x)
  std::complex<double> ea = unit(alpha.alpha);
  std::complex<double> eax = unit(alpha.alpha * static_cast<double>(x));
  return {ea * (eax - 1.0) / (ea - 1.0), x, SumKind::T};
}

ExpSumValue eval_T_direct(Frequency alpha, std::uint64_t x) {
  CSum acc;
  for (std::uint64_t n = 1; n <= x; ++n)
    acc.add(unit(alpha.alpha * static_cast<double>(n)));
  return {acc.value(), x, SumKind::T};
}

ExpSumValue eval_S(Frequency alpha, std::uint64_t x, const PrimeTable& table) {
  if (x > table.limit()) throw std::out_of_range("eval_S: x > table limit");
  CSum acc;
  std::uint64_t terms = 0;
  for (std::uint32_t p : table.primes()) {
    if (p > x) break;
    acc.add(unit(alpha.alpha * static_cast<double>(p)) * std::log(static_cast<double>(p)));
    ++terms;
  }
  return {acc.value(), terms, SumKind::S};
}

ExpSumValue eval_S_A(Frequency alpha, const energy::PrimeSubset& a) {
  CSum acc;
  for (std::uint32_t p : a.members)
    acc.add(unit(alpha.alpha * static_cast<double>(p)) * std::log(static_cast<double>(p)));
  return {acc.value(), a.members.size(), SumKind::SA};
}

ExpSumValue eval_T_B(Frequency alpha, const sifted::SiftedSet& b) {
  CSum acc;
  for (std::uint32_t n : b.members)
    acc.add(unit(alpha.alpha * static_cast<double>(n)));
  return {acc.value(), b.members.size(), SumKind::TB};
}

namespace {

void ie_rec(double alpha, std::uint64_t x, const std::vector<std::uint32_t>& ps,
            std::size_t from, std::uint64_t d, int sign, CSum& acc,
            std::int64_t& count) {
  std::uint64_t m = x / d;
  count += sign * static_cast<std::int64_t>(m);
  std::complex<double> t =
      eval_T(Frequency(alpha * static_cast<double>(d)), m).value;
  acc.add(static_cast<double>(sign) * t);
  for (std::size_t i = from; i < ps.size(); ++i) {
    std::uint64_t nd = d * ps[i];
    if (nd > x) break;
    ie_rec(alpha, x, ps, i + 1, nd, -sign, acc, count);
  }
}

}  // namespace

ExpSumValue eval_T_B_ie(Frequency alpha, std::uint64_t x, std::uint64_t y,
                        const PrimeTable& table, unsigned max_depth) {
  if (x > table.limit()) throw std::out_of_range("eval_T_B_ie: x > table limit");
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p : table.primes()) {
    if (p > y) break;
    ps.push_back(p);
  }
  if (ps.size() > max_depth)
    throw arith::capability_error("eval_T_B_ie: pi(y) exceeds configured depth");
  CSum acc;
  std::int64_t count = 0;  // Legendre count, doubles as the term count
  ie_rec(alpha.alpha, x, ps, 0, 1, 1, acc, count);
  return {acc.value(), static_cast<std::uint64_t>(count), SumKind::TB};
}

double vinogradov_bound(const arcs::RationalApprox& approx, std::uint64_t x) {
  double xd = static_cast<double>(x);
  double q = static_cast<double>(approx.q);
  double lx = std::log(xd);
  return xd * lx * lx * lx *
         (std::sqrt(q / xd) + 1.0 / std::sqrt(q) + std::exp(-0.5 * std::sqrt(lx)));
}

double minor_TB_bound(const arcs::RationalApprox& approx, std::uint64_t x, double D) {
  if (D <= 0.0) throw std::domain_error("minor_TB_bound: D must be positive");
  double xd = static_cast<double>(x);
  double q = static_cast<double>(approx.q);
  double lq = std::log(q);
  return q * lq + xd * std::log(xd) / q + std::sqrt(xd) * lq +
         std::pow(xd, 1.0 - 1.0 / (4.0 * D));
}

std::vector<std::complex<double>> grid_S_A(const energy::PrimeSubset& a,
                                           std::uint64_t n_points) {
  if (n_points == 0) throw std::domain_error("grid_S_A: need at least one point");
  std::vector<std::complex<double>> out(n_points);
  std::vector<double> logs(a.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i)
    logs[i] = std::log(static_cast<double>(a.members[i]));

  const std::uint64_t chunk = 1024;
  std::size_t n_chunks = static_cast<std::size_t>((n_points + chunk - 1) / chunk);
  par::run_chunks(n_chunks, [&](std::size_t c) {
    std::uint64_t lo = c * chunk;
    std::uint64_t hi = std::min(n_points, lo + chunk);
    for (std::uint64_t j = lo; j < hi; ++j) {
      CSum acc;
      for (std::size_t i = 0; i < a.members.size(); ++i) {
        std::uint64_t r = (j * a.members[i]) % n_points;  // exact fractional part
        acc.add(unit(static_cast<double>(r) / static_cast<double>(n_points)) * logs[i]);
      }
      out[j] = acc.value();
    }
  });
  return out;
}

}  // namespace sps::expsum
