#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamcalc/barcode.hpp"

namespace tamcalc {
namespace verify {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double seconds = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return failures == 0 && cases > 0; }
};

// Closed-form twisted hom against the grid oracle on random bar pairs with
// integer endpoints in [0, 20], all shape combinations and random degrees.
SuiteResult homstar_suite(int cases, std::uint64_t seed, std::int64_t prime);

// Length rule for the translation morphism against the explicit convolution
// morphism, covering half-open, lower-ray, ray and full-line bars.
SuiteResult tau_suite(int cases, std::uint64_t seed, std::int64_t prime);

// Random triangles X -> Y -> cone: the translation morphism at the summed
// thresholds vanishes on the cone, and the hom-depth subadditivity and
// direct-sum monotonicity inequalities hold.
SuiteResult cone_suite(int cases, std::uint64_t seed, std::int64_t prime);

// Finite-group model: componentwise oracle homs of random families sum to
// the plain hom of the summed families, for Z/2 and Z/3.
SuiteResult equivariant_suite(int cases, std::uint64_t seed, std::int64_t prime);

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed, std::int64_t prime);

}  // namespace verify
}  // namespace tamcalc
