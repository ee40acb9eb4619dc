#include "sps/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "sps/arcs.hpp"
#include "sps/config.hpp"
#include "sps/expsum.hpp"
#include "sps/parallel.hpp"
#include "sps/sifted.hpp"

namespace sps::harness {

using arith::PrimeTable;
using energy::PrimeSubset;

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Unbiased draw in [0, bound) by rejection; identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SubsetSpec SubsetSpec::parse(const std::string& text) {
  SubsetSpec s;
  auto bad = [&] { throw std::runtime_error("subset spec: cannot parse '" + text + "'"); };
  std::size_t colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto split = [](const std::string& t, char sep) {
    std::vector<std::string> out;
    std::istringstream in(t);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
  };
  try {
    if (head == "full") {
      if (!rest.empty()) bad();
      s.kind = SubsetKind::Full;
    } else if (head == "random") {
      auto parts = split(rest, ':');
      if (parts.empty() || parts.size() > 2) bad();
      s.kind = SubsetKind::RandomDensity;
      s.delta = std::stod(parts[0]);
      if (parts.size() == 2) s.seed = std::stoull(parts[1]);
      if (!(s.delta > 0.0 && s.delta <= 1.5)) bad();
    } else if (head == "ap") {
      auto parts = split(rest, ',');
      if (parts.size() != 2) bad();
      s.kind = SubsetKind::ArithmeticProgression;
      s.a = std::stoull(parts[0]);
      s.q = std::stoull(parts[1]);
    } else if (head == "interval") {
      auto parts = split(rest, ',');
      if (parts.size() != 2) bad();
      s.kind = SubsetKind::IntervalSlice;
      s.lo = std::stoull(parts[0]);
      s.hi = std::stoull(parts[1]);
    } else {
      bad();
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return s;
}

std::string SubsetSpec::kind_name() const {
  switch (kind) {
    case SubsetKind::Full: return "full";
    case SubsetKind::RandomDensity: return "random";
    case SubsetKind::ArithmeticProgression: return "ap";
    case SubsetKind::IntervalSlice: return "interval";
  }
  return "?";
}

std::string SubsetSpec::params_string() const {
  std::ostringstream out;
  switch (kind) {
    case SubsetKind::Full: break;
    case SubsetKind::RandomDensity:
      out << fmt12(delta);
      if (seed) out << ";" << *seed;
      break;
    case SubsetKind::ArithmeticProgression: out << a << ";" << q; break;
    case SubsetKind::IntervalSlice: out << lo << ";" << hi; break;
  }
  return out.str();
}

PrimeSubset gen_random_subset(std::uint64_t x, double delta, std::uint64_t seed,
                              const PrimeTable& table) {
  if (x > table.limit()) throw std::out_of_range("gen_random_subset: x > table limit");
  if (!(delta > 0.0)) throw std::domain_error("gen_random_subset: delta must be positive");
  std::vector<std::uint32_t> pool;
  for (std::uint32_t p : table.primes()) {
    if (p > x) break;
    pool.push_back(p);
  }
  std::uint64_t k = static_cast<std::uint64_t>(
      std::ceil(delta * static_cast<double>(x) / std::log(static_cast<double>(x))));
  if (k > pool.size())
    throw std::domain_error("gen_random_subset: target size exceeds pi(x)");

  // partial Fisher-Yates: after i swaps, pool[0..i) is a uniform i-subset
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t j = i + bounded(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return energy::make_subset(x, std::move(pool), table);
}

PrimeSubset gen_ap_subset(std::uint64_t x, std::uint64_t a, std::uint64_t q,
                          const PrimeTable& table) {
  if (q < 1) throw std::domain_error("gen_ap_subset: q must be >= 1");
  if (arith::gcd_u64(a, q) != 1) throw std::domain_error("gen_ap_subset: requires gcd(a,q) = 1");
  std::vector<std::uint32_t> members;
  for (std::uint32_t p : table.primes()) {
    if (p > x) break;
    if (p % q == a % q) members.push_back(p);
  }
  return energy::make_subset(x, std::move(members), table);
}

PrimeSubset gen_subset(const SubsetSpec& spec, std::uint64_t x,
                       std::uint64_t fallback_seed, const PrimeTable& table) {
  switch (spec.kind) {
    case SubsetKind::Full:
      return gen_ap_subset(x, 0, 1, table);
    case SubsetKind::RandomDensity:
      return gen_random_subset(x, spec.delta, spec.seed.value_or(fallback_seed), table);
    case SubsetKind::ArithmeticProgression:
      return gen_ap_subset(x, spec.a, spec.q, table);
    case SubsetKind::IntervalSlice: {
      std::vector<std::uint32_t> members;
      for (std::uint32_t p : table.primes()) {
        if (p > x || p > spec.hi) break;
        if (p >= spec.lo) members.push_back(p);
      }
      return energy::make_subset(x, std::move(members), table);
    }
  }
  throw std::logic_error("gen_subset: unreachable");
}

ApTightnessReport ap_tightness(std::uint64_t x, std::uint64_t a, std::uint64_t q,
                               const PrimeTable& table) {
  PrimeSubset a0 = gen_ap_subset(x, a, q, table);
  ApTightnessReport rep;
  rep.bound = 2 * x / q + 1;
  rep.sumset_card = 0;
  // containment: every sum lies in {n <= 2x : n == 2a (mod q)}
  rep.contained = true;
  std::vector<std::uint32_t> sums = energy::sumset(a0);
  rep.sumset_card = sums.size();
  for (std::uint32_t n : sums)
    if (n % q != (2 * a) % q) { rep.contained = false; break; }
  rep.contained = rep.contained && rep.sumset_card <= rep.bound;
  rep.ratio = static_cast<double>(rep.sumset_card) * static_cast<double>(q) /
              static_cast<double>(x);
  return rep;
}

namespace {

ScanRow make_scan_row(std::uint64_t x, const SubsetSpec& spec, const PrimeSubset& a,
                      const PrimeTable& table) {
  ScanRow row;
  row.x = x;
  row.kind = spec.kind_name();
  row.params = spec.params_string();
  row.card = a.members.size();
  row.delta = a.delta;

  // One convolution pass yields E_w, |A+A| (support of r) and the bound.
  energy::RepFunction r = energy::rep_function(a, true, table);
  arith::KahanSum ew, lmass;
  std::uint64_t support = 0;
  for (double v : r.values) {
    if (v > 0.0) ++support;
    ew.add(v * v);
  }
  for (std::uint32_t p : a.members) lmass.add(std::log(static_cast<double>(p)));
  row.sumset = support;
  row.L = lmass.value();
  row.Ew = ew.value();
  row.lemma1_bound = row.L * row.L * row.L * row.L / row.Ew;

  double xd = static_cast<double>(x);
  double denom = a.delta * xd;
  row.ratio = static_cast<double>(support) * std::log(std::log(xd)) / denom;
  row.ratio3 = static_cast<double>(support) * std::log(std::log(std::log(xd))) / denom;
  return row;
}

}  // namespace

ScanResult theorem_scan(const ScanConfig& config) {
  ScanResult result;
  for (std::uint64_t x : config.xs)
    if (x < 16) throw std::domain_error("theorem_scan: x must be >= 16");

  for (std::uint64_t x : config.xs) {
    PrimeTable table(x);
    double floor_delta = std::pow(std::log(static_cast<double>(x)), -config.c0);
    for (std::size_t si = 0; si < config.specs.size(); ++si) {
      const SubsetSpec& spec = config.specs[si];
      std::uint64_t row_seed = splitmix64(splitmix64(config.seed ^ splitmix64(x)) + si);
      if (spec.kind == SubsetKind::RandomDensity && spec.delta < floor_delta) {
        result.rejected.push_back("x=" + std::to_string(x) + " " + spec.kind_name() + ":" +
                                  spec.params_string() +
                                  ": delta below (log x)^-c0, outside theorem hypothesis");
        continue;
      }
      PrimeSubset a = gen_subset(spec, x, row_seed, table);
      if (a.members.empty() || a.delta < floor_delta) {
        result.rejected.push_back("x=" + std::to_string(x) + " " + spec.kind_name() + ":" +
                                  spec.params_string() +
                                  ": delta below (log x)^-c0, outside theorem hypothesis");
        continue;
      }
      result.rows.push_back(make_scan_row(x, spec, a, table));
    }
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const ScanRow& l, const ScanRow& r) {
    return std::tie(l.x, l.kind, l.params) < std::tie(r.x, r.kind, r.params);
  });
  result.min_ratio = result.rows.empty() ? 0.0 : result.rows.front().ratio;
  result.min_ratio3 = result.rows.empty() ? 0.0 : result.rows.front().ratio3;
  for (const ScanRow& row : result.rows) {
    result.min_ratio = std::min(result.min_ratio, row.ratio);
    result.min_ratio3 = std::min(result.min_ratio3, row.ratio3);
  }
  return result;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "x,kind,params,card,delta,sumset,L,Ew,lemma1_bound,ratio\n";
  for (const ScanRow& r : rows) {
    out << r.x << ',' << r.kind << ',' << r.params << ',' << r.card << ','
        << fmt12(r.delta) << ',' << r.sumset << ',' << fmt12(r.L) << ','
        << fmt12(r.Ew) << ',' << fmt12(r.lemma1_bound) << ',' << fmt12(r.ratio) << '\n';
  }
  return out.str();
}

std::string scan_json(const ScanResult& result) {
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const ScanRow& r : result.rows) {
    doc["rows"].push_back({{"x", r.x},
                           {"kind", r.kind},
                           {"params", r.params},
                           {"card", r.card},
                           {"delta", r.delta},
                           {"sumset", r.sumset},
                           {"L", r.L},
                           {"Ew", r.Ew},
                           {"lemma1_bound", r.lemma1_bound},
                           {"ratio", r.ratio},
                           {"ratio_tripledlog", r.ratio3}});
  }
  doc["rejected"] = result.rejected;
  doc["min_ratio"] = result.min_ratio;
  doc["min_ratio_tripledlog"] = result.min_ratio3;
  return doc.dump(2) + "\n";
}

namespace {

bool suite(std::ostream& log, const char* name, bool ok) {
  log << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
  return ok;
}

}  // namespace

bool verify(std::uint64_t x, std::ostream& log) {
  bool all = true;
  PrimeTable table(std::max<std::uint64_t>(x, 100));
  std::mt19937_64 rng(0x5eedULL);
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };

  {  // sieve self-consistency + theta increments
    bool ok = true;
    for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(x, 20000); ++n) {
      std::uint32_t s = table.spf(n);
      if (n % s != 0) ok = false;
      std::uint64_t m = n / s;
      if (m >= 2 && table.spf(m) < s) ok = false;
      double diff = table.theta(n) - table.theta(n - 1);
      double want = table.is_prime(n) ? std::log(static_cast<double>(n)) : 0.0;
      if (std::abs(diff - want) > 1e-12 * std::max(1.0, table.theta(n))) ok = false;
    }
    all &= suite(log, "sieve: spf and theta prefix", ok);
  }
  {  // Moebius and totient identities
    bool ok = true;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      std::int64_t s = 0;
      for (std::uint64_t q = 1; q <= n; ++q) s += arith::moebius(q) * static_cast<std::int64_t>(n / q);
      if (s != 1) ok = false;
    }
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      std::uint64_t s = 0;
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += arith::euler_phi(d);
      if (s != n) ok = false;
    }
    all &= suite(log, "arith: Moebius and totient divisor identities", ok);
  }
  {  // Legendre oracle + residue partition
    bool ok = true;
    for (int t = 0; t < 20; ++t) {
      std::uint64_t xs = 100 + bounded(rng, std::min<std::uint64_t>(x, 50000));
      std::uint64_t y = 2 + bounded(rng, 28);
      if (sifted::phi_count_legendre(xs, y, table) != sifted::phi_count(xs, y, table)) ok = false;
      std::uint64_t q = 1 + bounded(rng, 19);
      std::uint64_t total = 0;
      for (std::uint64_t a = 0; a < q; ++a) total += sifted::phi_count_ap(xs, y, a, q, table);
      if (total != sifted::phi_count(xs, y, table)) ok = false;
    }
    all &= suite(log, "sifted: Legendre equality and residue partition", ok);
  }
  {  // exponential sums: closed form, conjugate symmetry, triangle bound
    bool ok = true;
    std::uint64_t xs = std::min<std::uint64_t>(x, 2000);
    sifted::SiftedSet b = sifted::build_sifted(xs, 7, table);
    for (int t = 0; t < 20; ++t) {
      expsum::Frequency alpha(unif(0.0, 1.0));
      auto closed = expsum::eval_T(alpha, xs).value;
      auto direct = expsum::eval_T_direct(alpha, xs).value;
      if (std::abs(closed - direct) > 1e-9 * static_cast<double>(xs)) ok = false;
      expsum::Frequency mirror(1.0 - alpha.alpha);
      auto s = expsum::eval_S(alpha, xs, table).value;
      auto sm = expsum::eval_S(mirror, xs, table).value;
      if (std::abs(s - std::conj(sm)) > 1e-9 * static_cast<double>(xs)) ok = false;
      if (std::abs(s) > table.theta(xs) * (1.0 + 1e-12)) ok = false;
      auto tb = expsum::eval_T_B(alpha, b).value;
      auto tbi = expsum::eval_T_B_ie(alpha, xs, 7, table).value;
      if (std::abs(tb - tbi) > 1e-8 * static_cast<double>(xs)) ok = false;
    }
    all &= suite(log, "expsum: closed form, symmetry, inclusion-exclusion", ok);
  }
  {  // Dirichlet approximation certificates
    bool ok = true;
    double Q = std::sqrt(static_cast<double>(x));
    for (int t = 0; t < 2000; ++t) {
      expsum::Frequency alpha(unif(0.0, 1.0));
      arcs::RationalApprox ap = arcs::dirichlet_approx(alpha, Q);
      if (arith::gcd_u64(ap.a, ap.q) != 1) ok = false;
      if (static_cast<double>(ap.q) > Q) ok = false;
      if (std::abs(ap.beta) * static_cast<double>(ap.q) * Q > 1.0 + 1e-9) ok = false;
      if (std::abs(ap.alpha() - alpha.alpha) > 1e-12) ok = false;
    }
    all &= suite(log, "arcs: Dirichlet approximation certificates", ok);
  }
  {  // Lemma 1 and the eq1/eq2 chain on random subsets
    bool ok = true;
    std::uint64_t xs = std::min<std::uint64_t>(x, 20000);
    for (int t = 0; t < 10; ++t) {
      PrimeSubset a = gen_random_subset(xs, unif(0.05, 0.8), rng(), table);
      energy::EnergyReport rep = energy::lemma1_report(a, table);
      if (static_cast<double>(rep.sumset_card) < rep.lemma1_bound * (1.0 - 1e-9)) ok = false;
      energy::ChainReport chain = energy::chain_check(a, 30, table);
      if (!chain.eq1_ok || !chain.eq2_ok) ok = false;
    }
    all &= suite(log, "energy: Lemma 1 bound and inequality chain", ok);
  }
  {  // Parseval at small scale
    bool ok = true;
    std::uint64_t xs = std::min<std::uint64_t>(x, 500);
    PrimeSubset a = gen_random_subset(xs, 0.5, 424242, table);
    double ew = energy::energy_weighted(a, table);
    std::uint64_t n_points = 4 * xs + 2;
    auto grid = expsum::grid_S_A(a, n_points);
    arith::KahanSum quad;
    for (const auto& z : grid) {
      double m2 = std::norm(z);
      quad.add(m2 * m2);
    }
    double integral = quad.value() / static_cast<double>(n_points);
    if (std::abs(integral - ew) > 1e-6 * std::max(1.0, ew)) ok = false;
    all &= suite(log, "energy: Parseval grid quadrature", ok);
  }
  return all;
}

namespace {

void print_expsum_value(const char* name, const expsum::ExpSumValue& v) {
  std::cout << name << " = " << fmt12(v.value.real()) << (v.value.imag() < 0 ? " - " : " + ")
            << fmt12(std::abs(v.value.imag())) << "i  |.| = " << fmt12(std::abs(v.value))
            << "  terms = " << v.terms << "\n";
}

int cli_scan(const std::string& config_path, const std::string& out_path,
             const std::string& format, std::optional<std::uint64_t> seed_override) {
  Config cfg = load_config(config_path);
  if (seed_override) cfg.scan.seed = *seed_override;
  ScanResult result = theorem_scan(cfg.scan);
  for (const std::string& msg : result.rejected) std::cerr << "rejected: " << msg << "\n";
  std::string payload = format == "json" ? scan_json(result) : scan_csv(result.rows);
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return 1;
    }
    out << payload;
  }
  std::cerr << "min_ratio = " << fmt12(result.min_ratio)
            << "  min_ratio_tripledlog = " << fmt12(result.min_ratio3) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"desk-scale toolkit for sumsets of sparse prime subsets"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")
      ->envname("SPS_THREADS");

  // sieve
  auto* c_sieve = app.add_subcommand("sieve", "prime table summary");
  std::uint64_t sieve_x = 1000;
  c_sieve->add_option("--x", sieve_x, "sieve limit")->required();

  // sifted
  auto* c_sifted = app.add_subcommand("sifted", "rough-number counts and main terms");
  std::uint64_t sf_x = 1000, sf_y = 10, sf_a = 0, sf_q = 0;
  c_sifted->add_option("--x", sf_x)->required();
  c_sifted->add_option("--y", sf_y)->required();
  c_sifted->add_option("--a", sf_a);
  c_sifted->add_option("--q", sf_q);

  // expsum
  auto* c_exp = app.add_subcommand("expsum", "exponential sums and minor-arc bounds");
  std::uint64_t ex_x = 1000, ex_y = 0;
  double ex_alpha = 0.0, ex_D = 2.0;
  c_exp->add_option("--x", ex_x)->required();
  c_exp->add_option("--alpha", ex_alpha)->required();
  c_exp->add_option("--y", ex_y, "also evaluate T_B(x,y)");
  c_exp->add_option("--D", ex_D, "exponent D in the T_B minor-arc bound");

  // arcs
  auto* c_arcs = app.add_subcommand("arcs", "Dirichlet approximation and major-arc predictors");
  std::uint64_t ar_x = 1000000, ar_y = 0;
  double ar_alpha = 0.0, ar_delta = 2.0, ar_c0 = -1.0;
  c_arcs->add_option("--x", ar_x)->required();
  c_arcs->add_option("--alpha", ar_alpha)->required();
  c_arcs->add_option("--delta", ar_delta, "arc exponent Delta");
  c_arcs->add_option("--c0", ar_c0, "derive Delta = 2 c0 + 8 (needs very large x)");
  c_arcs->add_option("--y", ar_y, "sifting bound for T_B predictor (default (log x)^2)");

  // energy
  auto* c_energy = app.add_subcommand("energy", "energy report for one subset");
  std::uint64_t en_x = 1000, en_y = 0, en_seed = 1;
  std::string en_set = "full";
  c_energy->add_option("--x", en_x)->required();
  c_energy->add_option("--set", en_set, "subset spec (full | random:d[:seed] | ap:a,q | interval:lo,hi)");
  c_energy->add_option("--y", en_y, "also run the eq1/eq2 chain with this sieve bound");
  c_energy->add_option("--seed", en_seed);

  // scan
  auto* c_scan = app.add_subcommand("scan", "theorem scan over a config file");
  std::string scan_config, scan_out, scan_format = "csv";
  std::uint64_t scan_seed = 0;
  bool scan_seed_set = false;
  c_scan->add_option("--config", scan_config, "config file")->required();
  c_scan->add_option("--out", scan_out, "output path ('-' = stdout)");
  c_scan->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));
  c_scan->add_option("--seed", scan_seed)->each([&](const std::string&) { scan_seed_set = true; });

  // verify
  auto* c_verify = app.add_subcommand("verify", "run the invariant battery");
  std::uint64_t vf_x = 10000;
  c_verify->add_option("--x", vf_x);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  par::set_thread_count(threads);

  try {
    if (c_sieve->parsed()) {
      PrimeTable table(sieve_x);
      std::cout << "x = " << sieve_x << "\npi(x) = " << table.pi(sieve_x)
                << "\ntheta(x) = " << fmt12(table.theta(sieve_x))
                << "\nmertens_product(x) = " << fmt12(arith::mertens_product(sieve_x, table))
                << "\nmertens_prime_sum(x) = " << fmt12(arith::mertens_prime_sum(sieve_x, table))
                << "\n";
    } else if (c_sifted->parsed()) {
      PrimeTable table(sf_x);
      std::uint64_t count = sifted::phi_count(sf_x, sf_y, table);
      std::cout << "phi_count(" << sf_x << "," << sf_y << ") = " << count << "\n";
      if (table.pi(std::min(sf_y, sf_x)) <= 25)
        std::cout << "phi_count_legendre = " << sifted::phi_count_legendre(sf_x, sf_y, table)
                  << "\n";
      std::cout << "debruijn_main_term = " << fmt12(sifted::debruijn_main_term(sf_x, sf_y, table))
                << "\n";
      if (sf_q >= 1) {
        std::cout << "phi_count_ap(a=" << sf_a << ",q=" << sf_q
                  << ") = " << sifted::phi_count_ap(sf_x, sf_y, sf_a, sf_q, table) << "\n"
                  << "xuan_ratio = " << fmt12(sifted::xuan_ratio(sf_x, sf_y, sf_a, sf_q, table))
                  << "\n";
      }
    } else if (c_exp->parsed()) {
      PrimeTable table(ex_x);
      expsum::Frequency alpha(ex_alpha);
      print_expsum_value("T", expsum::eval_T(alpha, ex_x));
      print_expsum_value("S", expsum::eval_S(alpha, ex_x, table));
      arcs::RationalApprox ap =
          arcs::dirichlet_approx(alpha, std::sqrt(static_cast<double>(ex_x)));
      std::cout << "dirichlet (Q = sqrt x): a/q = " << ap.a << "/" << ap.q
                << "  beta = " << fmt12(ap.beta) << "\n";
      std::cout << "vinogradov_bound = " << fmt12(expsum::vinogradov_bound(ap, ex_x)) << "\n";
      if (ex_y >= 1) {
        sifted::SiftedSet b = sifted::build_sifted(ex_x, ex_y, table);
        print_expsum_value("T_B", expsum::eval_T_B(alpha, b));
        std::cout << "minor_TB_bound(D=" << fmt12(ex_D)
                  << ") = " << fmt12(expsum::minor_TB_bound(ap, ex_x, ex_D)) << "\n";
      }
    } else if (c_arcs->parsed()) {
      if (ar_c0 >= 0.0) ar_delta = arcs::default_delta(ar_c0);
      PrimeTable table(ar_x);
      arcs::ArcParams params(ar_x, ar_delta);
      expsum::Frequency alpha(ar_alpha);
      arcs::RationalApprox ap = arcs::dirichlet_approx(alpha, params.Q);
      bool major = arcs::classify(ap, params) == arcs::ArcClass::Major;
      std::cout << "Delta = " << fmt12(ar_delta) << "  P = " << fmt12(params.P)
                << "  Q = " << fmt12(params.Q) << "\n"
                << "alpha = " << fmt12(alpha.alpha) << " -> a/q = " << ap.a << "/" << ap.q
                << "  beta = " << fmt12(ap.beta) << "  [" << (major ? "major" : "minor")
                << "]\n";
      if (major) {
        std::uint64_t y = ar_y;
        if (y == 0) {
          double lx = std::log(static_cast<double>(ar_x));
          y = static_cast<std::uint64_t>(std::ceil(lx * lx));
        }
        auto s_pred = arcs::major_S_prediction(ap, ar_x, &params);
        auto s_val = expsum::eval_S(alpha, ar_x, table).value;
        std::cout << "major_S_prediction = " << fmt12(std::abs(s_pred))
                  << "  |S| = " << fmt12(std::abs(s_val))
                  << "  rel err vs theta(x) = "
                  << fmt12(std::abs(s_val - s_pred) / table.theta(ar_x)) << "\n";
        if (ap.q < y) {
          auto tb_pred = arcs::major_TB_prediction(ap, ar_x, y, table, 4.0, &params);
          sifted::SiftedSet b = sifted::build_sifted(ar_x, y, table);
          auto tb_val = expsum::eval_T_B(alpha, b).value;
          std::cout << "major_TB_prediction(y=" << y << ") = " << fmt12(std::abs(tb_pred.value))
                    << "  |T_B| = " << fmt12(std::abs(tb_val)) << "  rel err vs |B| = "
                    << fmt12(std::abs(tb_val - tb_pred.value) / static_cast<double>(b.members.size()))
                    << (tb_pred.y_in_range ? "" : "  [warning: y outside lemma range]") << "\n";
        }
        auto tr = arcs::transfer_identity_check(ap, ar_x, y, table, ar_delta);
        std::cout << "transfer gap |T_B - S prod(1-1/p)| = " << fmt12(tr.gap)
                  << "  scale x(log x)^-3Delta = " << fmt12(tr.error_scale)
                  << (tr.y_in_range ? "" : "  [warning: y outside lemma range]") << "\n";
      } else {
        std::cout << "minor arc: vinogradov_bound = " << fmt12(expsum::vinogradov_bound(ap, ar_x))
                  << "  |S| = " << fmt12(std::abs(expsum::eval_S(alpha, ar_x, table).value))
                  << "\n";
      }
      std::cout << "major_arc_measure = " << fmt12(arcs::major_arc_measure(params)) << "\n";
    } else if (c_energy->parsed()) {
      PrimeTable table(en_x);
      SubsetSpec spec = SubsetSpec::parse(en_set);
      PrimeSubset a = gen_subset(spec, en_x, en_seed, table);
      ScanRow row = make_scan_row(en_x, spec, a, table);
      std::cout << scan_csv({row});
      if (en_y >= 1) {
        energy::ChainReport chain = energy::chain_check(a, en_y, table);
        std::cout << "Ew = " << fmt12(chain.Ew) << "  J = " << fmt12(chain.J)
                  << "  K = " << fmt12(chain.K) << "  K_B = " << fmt12(chain.K_B)
                  << "  L^3 = " << fmt12(chain.L3) << "\n"
                  << "eq1 (Ew <= J): " << (chain.eq1_ok ? "ok" : "VIOLATED")
                  << "  eq2 (K_B <= K <= L^3): " << (chain.eq2_ok ? "ok" : "VIOLATED") << "\n"
                  << "headline Ew/(delta^3 x^3 loglog x) = " << fmt12(chain.headline_ratio)
                  << "\n";
      }
    } else if (c_scan->parsed()) {
      return cli_scan(scan_config, scan_out, scan_format,
                      scan_seed_set ? std::optional<std::uint64_t>(scan_seed) : std::nullopt);
    } else if (c_verify->parsed()) {
      bool ok = verify(vf_x, std::cout);
      std::cout << (ok ? "verify: all suites passed\n" : "verify: FAILURES\n");
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sps::harness

