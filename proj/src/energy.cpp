#include "sps/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sps/parallel.hpp"
#include "sps/sifted.hpp"

namespace sps::energy {

using arith::KahanSum;
using arith::PrimeTable;

PrimeSubset make_subset(std::uint64_t x, std::vector<std::uint32_t> members,
                        const PrimeTable& table) {
  if (x < 2 || x > table.limit())
    throw std::domain_error("make_subset: x outside [2, table limit]");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::uint32_t p : members) {
    if (p > x) throw std::domain_error("make_subset: member exceeds x");
    if (!table.is_prime(p)) throw std::domain_error("make_subset: member is not prime");
  }
  PrimeSubset a;
  a.x = x;
  a.members = std::move(members);
  a.delta = static_cast<double>(a.members.size()) *
            std::log(static_cast<double>(x)) / static_cast<double>(x);
  return a;
}

namespace {

// Self-convolution of the (optionally log-weighted) indicator of `m` into a
// dense array over [0, 2x]. Parallel over fixed output chunks; every output
// index n is accumulated by exactly one chunk in ascending-p1 order, so the
// result does not depend on the worker count.
std::vector<double> self_convolve(const std::vector<std::uint32_t>& m,
                                  std::uint64_t x, bool weighted) {
  std::vector<double> r(2 * x + 1, 0.0);
  if (m.empty()) return r;
  std::vector<double> w(m.size(), 1.0);
  if (weighted)
    for (std::size_t i = 0; i < m.size(); ++i)
      w[i] = std::log(static_cast<double>(m[i]));

  const std::uint64_t chunk = 1 << 15;
  std::size_t n_chunks = static_cast<std::size_t>(2 * x / chunk + 1);
  par::run_chunks(n_chunks, [&](std::size_t c) {
    std::uint64_t lo = c * chunk;              // output range [lo, hi)
    std::uint64_t hi = std::min<std::uint64_t>(2 * x + 1, lo + chunk);
    if (lo >= hi) return;
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t p1 = m[i];
      if (p1 + m.front() >= hi) break;
      // p2 in [lo - p1, hi - 1 - p1]
      std::uint64_t p2lo = lo > p1 ? lo - p1 : 0;
      auto it = std::lower_bound(m.begin(), m.end(), p2lo);
      for (; it != m.end(); ++it) {
        std::uint64_t n = p1 + *it;
        if (n >= hi) break;
        r[n] += w[i] * w[static_cast<std::size_t>(it - m.begin())];
      }
    }
  });
  return r;
}

}  // namespace

std::vector<std::uint32_t> sumset(const PrimeSubset& a) {
  std::vector<bool> hit(2 * a.x + 1, false);
  for (std::size_t i = 0; i < a.members.size(); ++i)
    for (std::size_t j = i; j < a.members.size(); ++j)
      hit[static_cast<std::uint64_t>(a.members[i]) + a.members[j]] = true;
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = 0; n < hit.size(); ++n)
    if (hit[n]) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::uint64_t sumset_size(const PrimeSubset& a) {
  std::vector<bool> hit(2 * a.x + 1, false);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    for (std::size_t j = i; j < a.members.size(); ++j) {
      std::uint64_t n = static_cast<std::uint64_t>(a.members[i]) + a.members[j];
      if (!hit[n]) { hit[n] = true; ++count; }
    }
  return count;
}

RepFunction rep_function(const PrimeSubset& a, bool weighted, const PrimeTable&) {
  RepFunction r;
  r.weighted = weighted;
  r.x = a.x;
  r.values = self_convolve(a.members, a.x, weighted);
  return r;
}

double energy_weighted(const PrimeSubset& a, const PrimeTable& table) {
  RepFunction r = rep_function(a, true, table);
  KahanSum acc;
  for (double v : r.values) acc.add(v * v);
  return acc.value();
}

namespace {
double log_mass(const PrimeSubset& a) {
  KahanSum acc;
  for (std::uint32_t p : a.members) acc.add(std::log(static_cast<double>(p)));
  return acc.value();
}
}  // namespace

EnergyReport lemma1_report(const PrimeSubset& a, const PrimeTable& table) {
  if (a.members.empty()) throw std::domain_error("lemma1_report: empty subset");
  EnergyReport rep;
  rep.L = log_mass(a);
  rep.Ew = energy_weighted(a, table);
  rep.sumset_card = sumset_size(a);
  rep.lemma1_bound = rep.L * rep.L * rep.L * rep.L / rep.Ew;
  return rep;
}

double mixed_energy_S(const PrimeSubset& a, const PrimeTable& table) {
  if (a.members.empty()) return 0.0;
  RepFunction r = rep_function(a, true, table);
  // u = cross-convolution of all primes <= x with A, both log-weighted
  std::vector<double> u(2 * a.x + 1, 0.0);
  std::vector<double> wa(a.members.size());
  for (std::size_t i = 0; i < a.members.size(); ++i)
    wa[i] = std::log(static_cast<double>(a.members[i]));
  for (std::uint32_t p : table.primes()) {
    if (p > a.x) break;
    double wp = std::log(static_cast<double>(p));
    for (std::size_t i = 0; i < a.members.size(); ++i)
      u[static_cast<std::uint64_t>(p) + a.members[i]] += wp * wa[i];
  }
  KahanSum acc;
  for (std::uint64_t n = 0; n < u.size(); ++n) acc.add(u[n] * r.values[n]);
  return acc.value();
}

double mixed_energy_T(const PrimeSubset& a, const PrimeTable& table,
                      std::optional<std::uint64_t> sieve_y) {
  if (a.members.empty()) return 0.0;
  RepFunction r = rep_function(a, true, table);
  KahanSum acc;
  if (!sieve_y) {
    // n1 ranges over [1, x]: window sums of r via a prefix array
    std::vector<double> prefix(r.values.size() + 1, 0.0);
    KahanSum run;
    for (std::size_t n = 0; n < r.values.size(); ++n) {
      run.add(r.values[n]);
      prefix[n + 1] = run.value();
    }
    for (std::uint32_t p : a.members) {
      double window = prefix[p + a.x + 1] - prefix[p + 1];  // n in [p+1, p+x]
      acc.add(std::log(static_cast<double>(p)) * window);
    }
  } else {
    sifted::SiftedSet b = sifted::build_sifted(a.x, *sieve_y, table);
    for (std::uint32_t p : a.members) {
      double lp = std::log(static_cast<double>(p));
      KahanSum inner;
      for (std::uint32_t n1 : b.members)
        inner.add(r.values[static_cast<std::uint64_t>(n1) + p]);
      acc.add(lp * inner.value());
    }
  }
  return acc.value();
}

ChainReport chain_check(const PrimeSubset& a, std::uint64_t y, const PrimeTable& table) {
  ChainReport rep;
  if (a.members.empty()) {
    rep.eq1_ok = rep.eq2_ok = true;
    return rep;
  }
  double L = log_mass(a);
  rep.Ew = energy_weighted(a, table);
  rep.J = mixed_energy_S(a, table);
  rep.K = mixed_energy_T(a, table);
  rep.K_B = mixed_energy_T(a, table, y);
  rep.L3 = L * L * L;
  const double slack = 1e-9;
  rep.eq1_ok = rep.Ew <= rep.J * (1.0 + slack) + slack;
  rep.eq2_ok = rep.K_B <= rep.K * (1.0 + slack) + slack &&
               rep.K <= rep.L3 * (1.0 + slack) + slack;
  double xd = static_cast<double>(a.x);
  double lll = std::log(std::log(xd));
  rep.headline_ratio = rep.Ew / (a.delta * a.delta * a.delta * xd * xd * xd * lll);
  return rep;
}

}  // namespace sps::energy
