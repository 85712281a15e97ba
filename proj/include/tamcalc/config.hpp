#pragma once

#include <cstdint>
#include <string>

namespace tamcalc {

/// Runtime configuration: fixed-point scale, coefficient prime, tolerances
/// and the seed every randomized check derives from.
struct Config {
  int scale_pow10 = 9;
  std::int64_t prime = 2;
  double chord_tol = 1e-6;
  double stability_eps = 1e-3;
  int oracle_cases = 200;
  std::uint64_t seed = 24007;

  // Defaults, overridden by the file (key=value lines, # comments), then by
  // TAMCALC_* environment variables.
  static Config load(const std::string& path);
  void validate() const;
  void apply_scale() const;  // installs the fixed-point scale
};

std::uint64_t fnv1a(const std::string& data);

std::string tool_version();

}  // namespace tamcalc
