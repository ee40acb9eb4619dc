#include "sps/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sps::harness {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t to_u64(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: " + path + ": expected integer, got '" + s + "'");
  }
}

double to_f64(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: " + path + ": expected number, got '" + s + "'");
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t cut = line.find_first_of("#;");
    if (cut != std::string::npos) line = line.substr(0, cut);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config: line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scan" && section != "arcs" && section != "energy")
        throw std::runtime_error("config: unknown section [" + section + "]");
      if (section == "arcs" && !cfg.arcs) cfg.arcs.emplace();
      if (section == "energy" && !cfg.energy) cfg.energy.emplace();
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::string path = section + "." + key;
    if (section.empty())
      throw std::runtime_error("config: " + key + ": key outside any section");

    if (section == "scan") {
      if (key == "x") {
        for (const auto& t : split_ws(value)) cfg.scan.xs.push_back(to_u64(t, path));
      } else if (key == "subsets") {
        for (const auto& t : split_ws(value)) cfg.scan.specs.push_back(SubsetSpec::parse(t));
      } else if (key == "c0") {
        cfg.scan.c0 = to_f64(value, path);
      } else if (key == "seed") {
        cfg.scan.seed = to_u64(value, path);
      } else {
        throw std::runtime_error("config: unknown key " + path);
      }
    } else if (section == "arcs") {
      if (key == "x") cfg.arcs->x = to_u64(value, path);
      else if (key == "c0") cfg.arcs->c0 = to_f64(value, path);
      else if (key == "alpha") {
        for (const auto& t : split_ws(value)) cfg.arcs->alphas.push_back(to_f64(t, path));
      } else throw std::runtime_error("config: unknown key " + path);
    } else {  // energy
      if (key == "x") cfg.energy->x = to_u64(value, path);
      else if (key == "set") cfg.energy->spec = SubsetSpec::parse(value);
      else if (key == "y") cfg.energy->y = to_u64(value, path);
      else throw std::runtime_error("config: unknown key " + path);
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace sps::harness
