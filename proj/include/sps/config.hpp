#pragma once

#include <string>

#include "sps/harness.hpp"

namespace sps::harness {

// INI-style config with sections [scan], [arcs], [energy]. Whitespace
// separates list items; '#' and ';' start comments. Unknown sections or
// keys are rejected with the offending path in the message.

struct ArcsConfig {
  std::uint64_t x = 0;
  double c0 = 2.0;
  std::vector<double> alphas;
};

struct EnergyConfig {
  std::uint64_t x = 0;
  SubsetSpec spec;
  std::optional<std::uint64_t> y;
};

struct Config {
  ScanConfig scan;
  std::optional<ArcsConfig> arcs;
  std::optional<EnergyConfig> energy;
};

Config load_config(const std::string& path);
Config parse_config(const std::string& text);

}  // namespace sps::harness
