#include "tamcalc/barcode.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamcalc {

namespace {

bool bar_key_less(const Bar& a, const Bar& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.interval < b.interval;
}

}  // namespace

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  for (const Bar& b : bars_)
    if (b.mult < 1) throw std::invalid_argument("bar multiplicity must be >= 1");
  canonicalize();
}

Barcode Barcode::single(Interval iv, int degree, std::int64_t mult) {
  return Barcode({Bar{iv, degree, mult}});
}

void Barcode::add(const Bar& bar) {
  if (bar.mult < 1) throw std::invalid_argument("bar multiplicity must be >= 1");
  bars_.push_back(bar);
  canonicalize();
}

void Barcode::add(const Barcode& other) {
  bars_.insert(bars_.end(), other.bars_.begin(), other.bars_.end());
  canonicalize();
}

std::int64_t Barcode::total_mult() const {
  std::int64_t n = 0;
  for (const Bar& b : bars_) n += b.mult;
  return n;
}

void Barcode::canonicalize() {
  std::sort(bars_.begin(), bars_.end(), bar_key_less);
  std::vector<Bar> merged;
  for (const Bar& b : bars_) {
    if (!merged.empty() && merged.back().degree == b.degree && merged.back().interval == b.interval)
      merged.back().mult += b.mult;
    else
      merged.push_back(b);
  }
  bars_ = std::move(merged);
}

std::string Barcode::to_string() const {
  if (bars_.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    if (i) out += ", ";
    out += bars_[i].interval.to_string();
    if (bars_[i].degree != 0) out += "[" + std::to_string(bars_[i].degree) + "]";
    if (bars_[i].mult != 1) out += "^" + std::to_string(bars_[i].mult);
  }
  return out + "}";
}

Barcode shift_degrees(const Barcode& b, int k) {
  std::vector<Bar> out = b.bars();
  for (Bar& bar : out) bar.degree += k;
  return Barcode(std::move(out));
}

Barcode translate(const Barcode& b, Scalar c) {
  if (!c.finite()) throw std::invalid_argument("translation offset must be finite");
  std::vector<Bar> out = b.bars();
  for (Bar& bar : out) bar.interval = bar.interval.translate(c);
  return Barcode(std::move(out));
}

Barcode tensor_ray(const Barcode& b) {
  std::vector<Bar> out;
  for (const Bar& bar : b.bars())
    if (auto iv = bar.interval.clamp_to_ray())
      out.push_back(Bar{*iv, bar.degree, bar.mult});
  return Barcode(std::move(out));
}

bool tau_vanishes(const Interval& iv, Scalar c) {
  if (c < Scalar()) throw std::invalid_argument("tau requires c >= 0");
  return c >= iv.length();
}

bool tau_vanishes(const Barcode& b, Scalar c) {
  if (c < Scalar()) throw std::invalid_argument("tau requires c >= 0");
  for (const Bar& bar : b.bars())
    if (!tau_vanishes(bar.interval, c)) return false;
  return true;
}

Scalar boundary_depth(const Barcode& b) {
  Scalar depth;  // zero
  for (const Bar& bar : b.bars()) depth = max(depth, bar.interval.length());
  return depth;
}

SpectralData spectral_invariants(const Barcode& b) {
  bool found = false;
  Scalar lo_min, lo_max;
  for (const Bar& bar : b.bars()) {
    if (!bar.interval.hi().is_pos_inf()) continue;
    if (!found) {
      lo_min = lo_max = bar.interval.lo();
      found = true;
    } else {
      lo_min = min(lo_min, bar.interval.lo());
      lo_max = max(lo_max, bar.interval.lo());
    }
  }
  if (!found)
    throw std::runtime_error(
        "no fundamental classes: barcode has no bar surviving to +inf");
  return SpectralData{lo_min, lo_max, lo_max - lo_min};
}

}  // namespace tamcalc
