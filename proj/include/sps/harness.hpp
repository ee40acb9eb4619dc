#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sps/arith.hpp"
#include "sps/energy.hpp"

namespace sps::harness {

enum class SubsetKind { Full, RandomDensity, ArithmeticProgression, IntervalSlice };

// Textual forms: "full", "random:<delta>[:<seed>]", "ap:<a>,<q>",
// "interval:<lo>,<hi>".
struct SubsetSpec {
  SubsetKind kind = SubsetKind::Full;
  double delta = 0.0;                 // random_density
  std::optional<std::uint64_t> seed;  // random_density; falls back to scan seed
  std::uint64_t a = 0, q = 1;         // arithmetic_progression
  std::uint64_t lo = 0, hi = 0;       // interval_slice, primes in [lo, hi]

  static SubsetSpec parse(const std::string& text);
  std::string kind_name() const;
  std::string params_string() const;  // ';'-separated, CSV-safe
};

// Uniform random k-subset of the primes <= x, k = ceil(delta x / log x).
// PRNG is std::mt19937_64 seeded with `seed`; selection is a partial
// Fisher-Yates over the prime list with rejection-sampled bounded draws,
// so output is identical across platforms.
energy::PrimeSubset gen_random_subset(std::uint64_t x, double delta, std::uint64_t seed,
                                      const arith::PrimeTable& table);

// A0 = {p <= x : p == a (mod q)}, gcd(a,q) = 1.
energy::PrimeSubset gen_ap_subset(std::uint64_t x, std::uint64_t a, std::uint64_t q,
                                  const arith::PrimeTable& table);

energy::PrimeSubset gen_subset(const SubsetSpec& spec, std::uint64_t x,
                               std::uint64_t fallback_seed, const arith::PrimeTable& table);

struct ApTightnessReport {
  std::uint64_t sumset_card = 0;
  std::uint64_t bound = 0;   // floor(2x/q) + 1
  double ratio = 0.0;        // |A0+A0| q / x
  bool contained = false;    // exact containment check
};

// Exact containment |A0+A0| <= floor(2x/q) + 1 (all sums are == 2a mod q).
ApTightnessReport ap_tightness(std::uint64_t x, std::uint64_t a, std::uint64_t q,
                               const arith::PrimeTable& table);

struct ScanConfig {
  std::vector<std::uint64_t> xs;
  std::vector<SubsetSpec> specs;
  double c0 = 2.0;
  std::uint64_t seed = 1;
};

struct ScanRow {
  std::uint64_t x = 0;
  std::string kind;
  std::string params;
  std::uint64_t card = 0;
  double delta = 0.0;
  std::uint64_t sumset = 0;
  double L = 0.0;
  double Ew = 0.0;
  double lemma1_bound = 0.0;
  double ratio = 0.0;   // |A+A| log log x / (delta x)
  double ratio3 = 0.0;  // triple-log variant, reported only
};

struct ScanResult {
  std::vector<ScanRow> rows;  // sorted by (x, kind, params)
  std::vector<std::string> rejected;
  double min_ratio = 0.0;
  double min_ratio3 = 0.0;
};

ScanResult theorem_scan(const ScanConfig& config);

// Fixed header: x,kind,params,card,delta,sumset,L,Ew,lemma1_bound,ratio
// UTF-8, LF, '.' decimal separator, 12 significant digits.
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const ScanResult& result);

// Full invariant battery at scale x; logs one line per suite.
bool verify(std::uint64_t x, std::ostream& log);

int run_cli(int argc, char** argv);

}  // namespace sps::harness
