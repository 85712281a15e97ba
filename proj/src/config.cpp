#include "tamcalc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tamcalc/scalar.hpp"

namespace tamcalc {

namespace {

void apply_pair(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "scale") cfg.scale_pow10 = std::stoi(value);
  else if (key == "prime") cfg.prime = std::stoll(value);
  else if (key == "chord_tol") cfg.chord_tol = std::stod(value);
  else if (key == "stability_eps") cfg.stability_eps = std::stod(value);
  else if (key == "oracle_cases") cfg.oracle_cases = std::stoi(value);
  else if (key == "seed") cfg.seed = std::stoull(value);
  else throw std::invalid_argument("unknown configuration key: " + key);
}

void apply_env(Config& cfg) {
  const std::pair<const char*, const char*> vars[] = {
      {"TAMCALC_SCALE", "scale"},           {"TAMCALC_PRIME", "prime"},
      {"TAMCALC_CHORD_TOL", "chord_tol"},   {"TAMCALC_STABILITY_EPS", "stability_eps"},
      {"TAMCALC_ORACLE_CASES", "oracle_cases"}, {"TAMCALC_SEED", "seed"},
  };
  for (auto [env, key] : vars)
    if (const char* v = std::getenv(env)) apply_pair(cfg, key, v);
}

}  // namespace

Config Config::load(const std::string& path) {
  Config cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open configuration file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string trimmed;
      for (char c : line)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
      if (trimmed.empty() || trimmed[0] == '#') continue;
      auto eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("bad configuration line " + std::to_string(lineno));
      apply_pair(cfg, trimmed.substr(0, eq), trimmed.substr(eq + 1));
    }
  }
  apply_env(cfg);
  cfg.validate();
  return cfg;
}

void Config::validate() const {
  if (scale_pow10 < 1 || scale_pow10 > 17) throw std::invalid_argument("scale out of range");
  if (prime < 2) throw std::invalid_argument("prime must be >= 2");
  if (chord_tol <= 0 || stability_eps <= 0) throw std::invalid_argument("tolerances must be positive");
  if (oracle_cases < 1) throw std::invalid_argument("case count must be positive");
}

void Config::apply_scale() const { Scalar::set_scale_pow10(scale_pow10); }

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string tool_version() { return "tamcalc 1.0.0"; }

}  // namespace tamcalc
