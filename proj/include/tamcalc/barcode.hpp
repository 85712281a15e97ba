#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamcalc/interval.hpp"

namespace tamcalc {

/// One summand k_I[d] with multiplicity.  The degree field is the shift d;
/// as a complex the summand sits in cohomological degree -d.  A class of
/// homological degree p therefore carries bar degree -p.
struct Bar {
  Interval interval;
  int degree = 0;
  std::int64_t mult = 1;

  bool operator==(const Bar& o) const = default;
};

/// Finite multiset of bars, kept canonically sorted by (degree, interval)
/// with equal summands merged.  The empty barcode is the zero object.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar> bars);

  static Barcode single(Interval iv, int degree = 0, std::int64_t mult = 1);

  const std::vector<Bar>& bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }
  std::size_t size() const { return bars_.size(); }

  void add(const Bar& bar);
  void add(const Barcode& other);

  // Total multiplicity per degree (rank bookkeeping).
  std::int64_t total_mult() const;

  bool operator==(const Barcode& o) const = default;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Bar> bars_;
};

struct SpectralData {
  Scalar c_minus;
  Scalar c_plus;
  Scalar gamma;  // c_plus - c_minus, always >= 0

  bool operator==(const SpectralData& o) const = default;
};

// Degree shift: every bar's degree increased by k.  Involutive with -k.
Barcode shift_degrees(const Barcode& b, int k);

// Push every endpoint by a finite c, openness preserved.
Barcode translate(const Barcode& b, Scalar c);

// Tensor with the ray [0, inf): intersect every support with the ray and
// drop what dies.  Idempotent.
Barcode tensor_ray(const Barcode& b);

// Torsion test: true iff the canonical translation-by-c morphism vanishes on
// every bar.  A bar dies under tau_c exactly when c >= its length, so bars
// with infinite length (hi = +inf or lo = -inf) never die.  Requires c >= 0.
bool tau_vanishes(const Barcode& b, Scalar c);
bool tau_vanishes(const Interval& iv, Scalar c);

// Least c with tau_vanishes: the longest bar length, +inf when any bar has
// infinite length, 0 for the empty barcode.
Scalar boundary_depth(const Barcode& b);

// Births of the classes surviving to +inf: c_minus/c_plus are the min/max lo
// over bars with hi = +inf.  Throws when no such bar exists.
SpectralData spectral_invariants(const Barcode& b);

}  // namespace tamcalc
