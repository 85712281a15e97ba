#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tamcalc/scalar.hpp"

namespace tamcalc {

/// Support of a single bar.  Nonempty by construction: lo < hi always, an
/// infinite lo is forced open and an infinite hi is forced open.
class Interval {
 public:
  // Returns nothing when the requested interval is empty (lo >= hi), which
  // stands for the zero summand and is never stored.
  static std::optional<Interval> make(Scalar lo, Scalar hi, bool lo_open, bool hi_open);

  static Interval half_open(Scalar lo, Scalar hi);       // [lo, hi)
  static Interval closed_ray(Scalar lo);                 // [lo, +inf)
  static Interval lower_ray(Scalar hi);                  // (-inf, hi)
  static Interval open(Scalar lo, Scalar hi);            // (lo, hi)
  static Interval line();                                // (-inf, +inf)

  Scalar lo() const { return lo_; }
  Scalar hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  Scalar length() const { return hi_ - lo_; }
  bool bounded() const { return lo_.finite() && hi_.finite(); }

  // Shape accepted by the closed-form hom computations: [a,b) or [a,inf)
  // with finite closed left end.
  bool is_left_closed_half_open() const { return lo_.finite() && !lo_open_ && hi_open_; }

  Interval translate(Scalar c) const;
  // Intersection with the ray [0, inf); nothing when disjoint.
  std::optional<Interval> clamp_to_ray() const;

  bool operator==(const Interval& o) const = default;
  std::strong_ordering operator<=>(const Interval& o) const;

  std::string to_string() const;

 private:
  Interval(Scalar lo, Scalar hi, bool lo_open, bool hi_open)
      : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open) {}

  Scalar lo_, hi_;
  bool lo_open_, hi_open_;
};

}  // namespace tamcalc
