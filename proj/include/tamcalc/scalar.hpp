#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tamcalc {

/// Fixed-point rational: an integer count of units on a global power-of-ten
/// scale (default 10^-9), plus the two distinguished values -inf and +inf.
/// Arithmetic between finite values is exact; overflow throws instead of
/// wrapping.  Doubles appear only at the I/O boundary.
class Scalar {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr Scalar() : kind_(Kind::Finite), units_(0) {}

  static Scalar from_units(std::int64_t u);
  static Scalar from_int(std::int64_t n);
  static Scalar from_double(double x);  // rounds to the nearest unit
  static Scalar parse(const std::string& text);
  static Scalar neg_inf();
  static Scalar pos_inf();
  static Scalar zero() { return Scalar(); }
  static Scalar pi();      // pi rounded to the current scale
  static Scalar pi_times_sqrt(std::int64_t k);  // pi*sqrt(k), rounded

  // Units per 1.0.  Set once at startup, before any value is built from
  // user input; changing it does not rescale existing values.
  static std::int64_t scale();
  static void set_scale_pow10(int exponent);

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool infinite() const { return !finite(); }

  std::int64_t units() const;  // throws on infinities

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  // Multiplication by an exact integer.
  Scalar times(std::int64_t n) const;
  // Exact division by a positive integer; throws if not representable.
  Scalar div_exact(std::int64_t n) const;
  // Division by a positive integer, rounding toward +inf.
  Scalar div_round_up(std::int64_t n) const;

  Scalar abs() const;

  bool operator==(const Scalar& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || units_ == o.units_);
  }
  std::strong_ordering operator<=>(const Scalar& o) const;

  bool is_zero() const { return finite() && units_ == 0; }
  bool nonneg() const { return *this >= Scalar(); }

  double to_double() const;
  // Exact decimal rendering ("2", "-0.5", "inf", "-inf").
  std::string to_string() const;

 private:
  Scalar(Kind k, std::int64_t u) : kind_(k), units_(u) {}

  Kind kind_;
  std::int64_t units_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tamcalc
