// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier than the unit tests; budgeted to run in a few minutes.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sps/arcs.hpp"
#include "sps/arith.hpp"
#include "sps/energy.hpp"
#include "sps/expsum.hpp"
#include "sps/harness.hpp"
#include "sps/parallel.hpp"
#include "sps/sifted.hpp"

using namespace sps;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const char* name, bool ok, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", number, name, seconds);
  if (!ok) ++g_failures;
}

double urand(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

int main() {
  auto t_start = Clock::now();
  auto elapsed = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  arith::PrimeTable t1e6(1'000'000);
  arith::PrimeTable t1e5(100'000);

  // 1. Lemma 1 exact inequality, 500 seeded random subsets + all AP subsets q <= 20
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(20260826);
    auto check_one = [&](const energy::PrimeSubset& a) {
      if (a.members.empty()) return;
      auto rep = energy::lemma1_report(a, t1e5);
      if (double(rep.sumset_card) < rep.lemma1_bound * (1.0 - 1e-9)) ok = false;
    };
    struct Slice { std::uint64_t x; int count; };
    for (auto [x, count] : {Slice{1000, 250}, Slice{10000, 150}, Slice{100000, 100}}) {
      for (int i = 0; i < count; ++i) {
        double delta = 0.05 + 0.55 * urand(rng);
        check_one(harness::gen_random_subset(x, delta, rng(), t1e5));
      }
    }
    for (std::uint64_t q = 1; q <= 20; ++q)
      for (std::uint64_t a = 0; a < q || (q == 1 && a == 0); ++a) {
        if (arith::gcd_u64(a, q) != 1) continue;
        check_one(harness::gen_ap_subset(100000, a, q, t1e5));
        if (q == 1) break;
      }
    criterion(1, "Lemma 1: L^4 <= |A+A| E_w over random and AP subsets", ok, elapsed(t0));
  }

  // 2. Parseval equivalence at N = 4x + 2 grid points
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
      std::uint64_t x = 100 + rng() % 1901;  // x <= 2000
      auto a = oracle::thinned_subset(x, t1e5, 0.2 + 0.6 * urand(rng), rng);
      if (a.members.empty()) continue;
      double ew = energy::energy_weighted(a, t1e5);
      std::uint64_t n = 4 * x + 2;
      auto grid = expsum::grid_S_A(a, n);
      arith::KahanSum quad;
      for (const auto& z : grid) {
        double m2 = std::norm(z);
        quad.add(m2 * m2);
      }
      double integral = quad.value() / double(n);
      if (std::abs(integral - ew) > 1e-6 * std::max(1.0, std::abs(ew))) ok = false;
    }
    criterion(2, "Parseval: E_w equals |S_A|^4 grid quadrature (1e-6 rel)", ok, elapsed(t0));
  }

  // 3. Brute-force quadruple-loop oracle for E_w, J, K
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(3);
    arith::PrimeTable t200(200);
    for (int i = 0; i < 50; ++i) {
      std::uint64_t x = 50 + rng() % 151;  // x <= 200
      auto a = oracle::thinned_subset(x, t200, 0.3 + 0.5 * urand(rng), rng);
      if (a.members.empty()) continue;
      double ew = energy::energy_weighted(a, t200);
      double j = energy::mixed_energy_S(a, t200);
      double k = energy::mixed_energy_T(a, t200);
      auto close = [](double got, double want) {
        return std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want));
      };
      if (!close(ew, oracle::brute_Ew(a))) ok = false;
      if (!close(j, oracle::brute_J(a, t200))) ok = false;
      if (!close(k, oracle::brute_K(a, t200, std::nullopt))) ok = false;
    }
    criterion(3, "brute-force oracle: E_w, J, K at x <= 200 (1e-9 rel)", ok, elapsed(t0));
  }

  // 4. Inequality chain eq1/eq2 for 200 subsets, y in {(log x)^2, 30}
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(4);
    struct Slice { std::uint64_t x; int count; };
    for (auto [x, count] : {Slice{1000, 100}, Slice{10000, 60}, Slice{100000, 40}}) {
      std::uint64_t ylog = std::uint64_t(std::pow(std::log(double(x)), 2));
      for (int i = 0; i < count; ++i) {
        double delta = 0.02 + 0.28 * urand(rng);
        auto a = harness::gen_random_subset(x, delta, rng(), t1e5);
        for (std::uint64_t y : {ylog, std::uint64_t(30)}) {
          auto rep = energy::chain_check(a, y, t1e5);
          if (!rep.eq1_ok || !rep.eq2_ok) ok = false;
        }
      }
    }
    criterion(4, "chain: E_w <= J and K_B <= K <= L^3, y in {(log x)^2, 30}", ok, elapsed(t0));
  }

  // 5. Legendre and inclusion-exclusion sieve oracles
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      std::uint64_t x = 2 + rng() % 99999;
      std::uint64_t y = 2 + rng() % 28;  // pi(y) <= 10
      if (sifted::phi_count_legendre(x, y, t1e5) != sifted::phi_count(x, y, t1e5)) ok = false;
    }
    for (int i = 0; i < 100; ++i) {
      std::uint64_t x = 100 + rng() % 9901;  // x <= 1e4
      std::uint64_t y = 2 + rng() % 28;
      expsum::Frequency alpha(urand(rng));
      auto b = sifted::build_sifted(x, y, t1e5);
      auto direct = expsum::eval_T_B(alpha, b).value;
      auto ie = expsum::eval_T_B_ie(alpha, x, y, t1e5).value;
      if (std::abs(direct - ie) > 1e-8 * double(x)) ok = false;
    }
    criterion(5, "sieve oracles: Legendre count exact, T_B inclusion-exclusion", ok, elapsed(t0));
  }

  // 6. Mertens third theorem at y = 1e6
  {
    auto t0 = Clock::now();
    double third = arith::mertens_product(1'000'000, t1e6) * std::log(1e6) *
                   std::exp(arith::kEulerGamma);
    criterion(6, "Mertens: |prod(1-1/p) log y e^gamma - 1| <= 0.01 at y = 1e6",
              std::abs(third - 1.0) <= 0.01, elapsed(t0));
  }

  // 7. Xuan / de Bruijn main terms at x = 1e6, y = 191
  {
    auto t0 = Clock::now();
    bool ok = true;
    double ratio = sifted::debruijn_main_term(1'000'000, 191, t1e6) /
                   double(sifted::phi_count(1'000'000, 191, t1e6));
    if (std::abs(ratio - 1.0) > 0.05) ok = false;
    for (std::uint64_t q : {3, 5})
      for (std::uint64_t a = 1; a < q; ++a)
        if (std::abs(sifted::xuan_ratio(1'000'000, 191, a, q, t1e6) - 1.0) > 0.05) ok = false;
    criterion(7, "main terms: de Bruijn and Xuan ratios within 0.05", ok, elapsed(t0));
  }

  // 8. Major-arc predictors: error decreases 1e4 -> 1e6 and <= 0.1 at 1e6
  {
    auto t0 = Clock::now();
    bool ok = true;
    auto median_errors = [&](std::uint64_t x) {
      std::vector<double> s_errs, tb_errs;
      double lx = std::log(double(x));
      std::uint64_t y = std::uint64_t(std::ceil(lx * lx));
      auto b = sifted::build_sifted(x, y, t1e6);
      double theta = t1e6.theta(x);
      for (std::uint64_t q = 1; q <= 5; ++q) {
        double worst_s = 0.0, worst_tb = 0.0;
        for (std::uint64_t a = 0; a < q || (q == 1 && a == 0); ++a) {
          if (q > 1 && (a == 0 || arith::gcd_u64(a, q) != 1)) continue;
          arcs::RationalApprox ap{a, q, 0.0};
          expsum::Frequency alpha(double(a) / double(q));
          auto s_pred = arcs::major_S_prediction(ap, x);
          auto s_val = expsum::eval_S(alpha, x, t1e6).value;
          worst_s = std::max(worst_s, std::abs(s_val - s_pred) / theta);
          auto tb_pred = arcs::major_TB_prediction(ap, x, y, t1e6);
          auto tb_val = expsum::eval_T_B(alpha, b).value;
          worst_tb = std::max(worst_tb,
                              std::abs(tb_val - tb_pred.value) / double(b.members.size()));
          if (q == 1) break;
        }
        s_errs.push_back(worst_s);
        tb_errs.push_back(worst_tb);
      }
      return std::pair<double, double>{median(s_errs), median(tb_errs)};
    };
    auto [s4, tb4] = median_errors(10'000);
    auto [s6, tb6] = median_errors(1'000'000);
    if (!(s6 < s4 && s6 <= 0.1)) ok = false;
    if (!(tb6 < tb4 && tb6 <= 0.1)) ok = false;
    criterion(8, "major-arc predictors: error decreasing, <= 0.1 at x = 1e6", ok, elapsed(t0));
  }

  // 9. A0 tightness at x = 1e6
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (std::uint64_t q : {3, 5, 7, 11}) {
      auto rep = harness::ap_tightness(1'000'000, 1, q, t1e6);
      if (!rep.contained) ok = false;
      if (!(rep.ratio > 0.0 && rep.ratio <= 2.0)) ok = false;
    }
    criterion(9, "A0 tightness: |A0+A0| <= floor(2x/q)+1, ratio in (0,2]", ok, elapsed(t0));
  }

  // 10. Theorem scan: determinism, hypothesis guard, min ratio at x = 1e6
  {
    auto t0 = Clock::now();
    bool ok = true;
    harness::ScanConfig cfg;
    cfg.xs = {1'000'000};
    cfg.specs = {
        harness::SubsetSpec::parse("full"),        harness::SubsetSpec::parse("ap:1,3"),
        harness::SubsetSpec::parse("ap:1,4"),      harness::SubsetSpec::parse("ap:3,8"),
        harness::SubsetSpec::parse("random:0.1"),  harness::SubsetSpec::parse("random:0.02"),
    };
    cfg.c0 = 2.0;
    cfg.seed = 20260826;
    par::set_thread_count(0);
    auto res1 = harness::theorem_scan(cfg);
    par::set_thread_count(1);
    auto res2 = harness::theorem_scan(cfg);
    par::set_thread_count(0);
    if (harness::scan_csv(res1.rows) != harness::scan_csv(res2.rows)) ok = false;
    double floor_delta = std::pow(std::log(1e6), -cfg.c0);
    for (const auto& row : res1.rows)
      if (row.delta < floor_delta) ok = false;
    if (res1.rows.size() != cfg.specs.size()) ok = false;
    if (!(res1.min_ratio >= 0.5)) ok = false;
    criterion(10, "scan: byte-identical CSV, density guard, min ratio >= 0.5", ok, elapsed(t0));
  }

  std::printf("acceptance: %s (total %.1fs)\n", g_failures == 0 ? "all criteria passed" : "FAILURES",
              elapsed(t_start));
  return g_failures == 0 ? 0 : 1;
}
