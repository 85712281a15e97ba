#include "tamcalc/interval.hpp"

#include <stdexcept>

namespace tamcalc {

std::optional<Interval> Interval::make(Scalar lo, Scalar hi, bool lo_open, bool hi_open) {
  if (lo.is_pos_inf() || hi.is_neg_inf()) return std::nullopt;
  if (lo.is_neg_inf()) lo_open = true;
  if (hi.is_pos_inf()) hi_open = true;
  if (lo >= hi) return std::nullopt;
  return Interval(lo, hi, lo_open, hi_open);
}

Interval Interval::half_open(Scalar lo, Scalar hi) {
  auto iv = make(lo, hi, false, true);
  if (!iv) throw std::invalid_argument("empty interval");
  return *iv;
}

Interval Interval::closed_ray(Scalar lo) { return half_open(lo, Scalar::pos_inf()); }

Interval Interval::lower_ray(Scalar hi) {
  auto iv = make(Scalar::neg_inf(), hi, true, true);
  if (!iv) throw std::invalid_argument("empty interval");
  return *iv;
}

Interval Interval::open(Scalar lo, Scalar hi) {
  auto iv = make(lo, hi, true, true);
  if (!iv) throw std::invalid_argument("empty interval");
  return *iv;
}

Interval Interval::line() { return *make(Scalar::neg_inf(), Scalar::pos_inf(), true, true); }

Interval Interval::translate(Scalar c) const {
  if (!c.finite()) throw std::invalid_argument("translation offset must be finite");
  return Interval(lo_ + c, hi_ + c, lo_open_, hi_open_);
}

std::optional<Interval> Interval::clamp_to_ray() const {
  Scalar zero;
  if (lo_ < zero) return make(zero, hi_, false, hi_open_);
  return *this;
}

std::strong_ordering Interval::operator<=>(const Interval& o) const {
  if (auto c = lo_ <=> o.lo_; c != 0) return c;
  if (lo_open_ != o.lo_open_) return lo_open_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = hi_ <=> o.hi_; c != 0) return c;
  if (hi_open_ != o.hi_open_) return hi_open_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Interval::to_string() const {
  std::string out = lo_open_ ? "(" : "[";
  out += lo_.to_string() + "," + hi_.to_string();
  out += hi_open_ ? ")" : "]";
  return out;
}

}  // namespace tamcalc
