#include "tamcalc/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace tamcalc {

namespace {

std::int64_t g_scale = 1'000'000'000;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("scalar addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("scalar multiplication overflow");
  return r;
}

}  // namespace

std::int64_t Scalar::scale() { return g_scale; }

void Scalar::set_scale_pow10(int exponent) {
  if (exponent < 0 || exponent > 17) throw std::invalid_argument("scale exponent out of range");
  std::int64_t s = 1;
  for (int i = 0; i < exponent; ++i) s *= 10;
  g_scale = s;
}

Scalar Scalar::from_units(std::int64_t u) { return Scalar(Kind::Finite, u); }

Scalar Scalar::from_int(std::int64_t n) { return Scalar(Kind::Finite, checked_mul(n, g_scale)); }

Scalar Scalar::from_double(double x) {
  if (std::isnan(x)) throw std::invalid_argument("NaN is not a valid scalar");
  if (std::isinf(x)) return x > 0 ? pos_inf() : neg_inf();
  double scaled = x * static_cast<double>(g_scale);
  if (std::abs(scaled) > 9.0e18) throw std::overflow_error("scalar out of range");
  return Scalar(Kind::Finite, std::llround(scaled));
}

Scalar Scalar::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  std::size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad scalar literal: " + text);
  return from_double(v);
}

Scalar Scalar::neg_inf() { return Scalar(Kind::NegInf, 0); }
Scalar Scalar::pos_inf() { return Scalar(Kind::PosInf, 0); }

Scalar Scalar::pi() { return from_double(3.14159265358979323846); }

Scalar Scalar::pi_times_sqrt(std::int64_t k) {
  return from_double(3.14159265358979323846 * std::sqrt(static_cast<double>(k)));
}

std::int64_t Scalar::units() const {
  if (!finite()) throw std::domain_error("units() on an infinite scalar");
  return units_;
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return Scalar(Kind::Finite, -units_);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (finite() && o.finite()) return Scalar(Kind::Finite, checked_add(units_, o.units_));
  if (is_pos_inf() && o.is_neg_inf()) throw std::domain_error("inf + -inf is undefined");
  if (is_neg_inf() && o.is_pos_inf()) throw std::domain_error("-inf + inf is undefined");
  return finite() ? o : *this;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::times(std::int64_t n) const {
  if (!finite()) {
    if (n == 0) throw std::domain_error("0 * inf is undefined");
    return (n > 0) == is_pos_inf() ? pos_inf() : neg_inf();
  }
  return Scalar(Kind::Finite, checked_mul(units_, n));
}

Scalar Scalar::div_exact(std::int64_t n) const {
  if (n <= 0) throw std::invalid_argument("divisor must be positive");
  if (!finite()) return *this;
  if (units_ % n != 0) throw std::domain_error("division is not exact at the current scale");
  return Scalar(Kind::Finite, units_ / n);
}

Scalar Scalar::div_round_up(std::int64_t n) const {
  if (n <= 0) throw std::invalid_argument("divisor must be positive");
  if (!finite()) return *this;
  std::int64_t q = units_ / n;
  if (units_ % n != 0 && units_ > 0) ++q;
  return Scalar(Kind::Finite, q);
}

Scalar Scalar::abs() const { return *this < Scalar() ? -*this : *this; }

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (kind_ != o.kind_)
    return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
  if (kind_ != Kind::Finite) return std::strong_ordering::equal;
  return units_ <=> o.units_;
}

double Scalar::to_double() const {
  switch (kind_) {
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    default: return static_cast<double>(units_) / static_cast<double>(g_scale);
  }
}

std::string Scalar::to_string() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "inf";
  std::int64_t u = units_;
  std::string sign = u < 0 ? "-" : "";
  unsigned long long mag = u < 0 ? -static_cast<unsigned long long>(u) : static_cast<unsigned long long>(u);
  unsigned long long whole = mag / static_cast<unsigned long long>(g_scale);
  unsigned long long frac = mag % static_cast<unsigned long long>(g_scale);
  std::string out = sign + std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    std::string pad(std::to_string(g_scale - 1).size() - digits.size(), '0');
    digits = pad + digits;
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tamcalc
