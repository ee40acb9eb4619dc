#include "sps/sifted.hpp"

#include <cmath>
#include <stdexcept>

namespace sps::sifted {

using arith::PrimeTable;

namespace {

void check_range(std::uint64_t x, std::uint64_t y, const PrimeTable& table) {
  if (x > table.limit()) throw std::out_of_range("sifted: x > table limit");
  if (y < 1) throw std::domain_error("sifted: y must be >= 1");
  if (x < 1) throw std::domain_error("sifted: x must be >= 1");
}

inline bool rough(std::uint64_t n, std::uint64_t y, const PrimeTable& table) {
  return n == 1 || table.spf(n) > y;
}

}  // namespace

SiftedSet build_sifted(std::uint64_t x, std::uint64_t y, const PrimeTable& table) {
  check_range(x, y, table);
  SiftedSet b;
  b.x = x;
  b.y = y;
  b.u = std::log(static_cast<double>(x)) / std::log(static_cast<double>(y));
  for (std::uint64_t n = 1; n <= x; ++n)
    if (rough(n, y, table)) b.members.push_back(static_cast<std::uint32_t>(n));
  return b;
}

std::uint64_t phi_count(std::uint64_t x, std::uint64_t y, const PrimeTable& table) {
  check_range(x, y, table);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n)
    if (rough(n, y, table)) ++count;
  return count;
}

namespace {

// DFS over squarefree products of sieving primes; d > x prunes (floor = 0).
std::int64_t legendre_rec(std::uint64_t x, const std::vector<std::uint32_t>& ps,
                          std::size_t from, std::uint64_t d, int sign) {
  std::int64_t total = sign * static_cast<std::int64_t>(x / d);
  for (std::size_t i = from; i < ps.size(); ++i) {
    std::uint64_t nd = d * ps[i];
    if (nd > x) break;  // primes ascending, later products only larger
    total += legendre_rec(x, ps, i + 1, nd, -sign);
  }
  return total;
}

}  // namespace

std::uint64_t phi_count_legendre(std::uint64_t x, std::uint64_t y,
                                 const PrimeTable& table, unsigned max_depth) {
  check_range(x, y, table);
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p : table.primes()) {
    if (p > y) break;
    ps.push_back(p);
  }
  if (ps.size() > max_depth)
    throw arith::capability_error("phi_count_legendre: pi(y) exceeds configured depth");
  return static_cast<std::uint64_t>(legendre_rec(x, ps, 0, 1, 1));
}

std::uint64_t phi_count_ap(std::uint64_t x, std::uint64_t y, std::uint64_t a,
                           std::uint64_t q, const PrimeTable& table) {
  check_range(x, y, table);
  if (q < 1) throw std::domain_error("phi_count_ap: q must be >= 1");
  a %= q;
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n)
    if (n % q == a && rough(n, y, table)) ++count;
  return count;
}

double debruijn_main_term(std::uint64_t x, std::uint64_t y, const PrimeTable& table) {
  check_range(x, y, table);
  return static_cast<double>(x) * arith::mertens_product(y, table);
}

double xuan_ratio(std::uint64_t x, std::uint64_t y, std::uint64_t a,
                  std::uint64_t q, const PrimeTable& table) {
  if (arith::gcd_u64(a, q) != 1)
    throw std::domain_error("xuan_ratio: requires gcd(a,q) = 1");
  std::uint64_t total = phi_count(x, y, table);
  std::uint64_t part = phi_count_ap(x, y, a, q, table);
  return static_cast<double>(arith::euler_phi(q)) * static_cast<double>(part) /
         static_cast<double>(total);
}

}  // namespace sps::sifted
