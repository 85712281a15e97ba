#include "tamcalc/homstar.hpp"

#include <stdexcept>

namespace tamcalc {

namespace {

void require_covered(const Bar& bar) {
  if (!bar.interval.is_left_closed_half_open())
    throw std::invalid_argument(
        "bar shape outside closed-form coverage ([a,b) or [a,inf) required); use the grid oracle");
}

// Appends the four-case formula output for unit bars, before degree shift.
void raw_pair(const Interval& I, const Interval& J, std::vector<Bar>& out) {
  const Scalar a = I.lo(), b = I.hi(), c = J.lo(), d = J.hi();
  const bool b_inf = b.is_pos_inf();
  const bool d_inf = d.is_pos_inf();
  if (b_inf && d_inf) {
    if (auto iv = Interval::make(Scalar::neg_inf(), c - a, true, true))
      out.push_back(Bar{*iv, 1, 1});
  } else if (b_inf && !d_inf) {
    // Closed left end: the open variant fails the section/costalk identity
    // and leaves the microsupport halfspace (see the grid oracle tests).
    if (auto iv = Interval::make(c - a, d - a, false, true))
      out.push_back(Bar{*iv, 0, 1});
  } else if (!b_inf && d_inf) {
    if (auto iv = Interval::make(c - b, c - a, false, true))
      out.push_back(Bar{*iv, 1, 1});
  } else {
    if (auto iv = Interval::make(c - b, min(c - a, d - b), false, true))
      out.push_back(Bar{*iv, 1, 1});
    if (auto iv = Interval::make(max(c - a, d - b), d - a, false, true))
      out.push_back(Bar{*iv, 0, 1});
  }
}

}  // namespace

Barcode hom_star_pair(const Bar& lhs, const Bar& rhs) {
  require_covered(lhs);
  require_covered(rhs);
  std::vector<Bar> raw;
  raw_pair(lhs.interval, rhs.interval, raw);
  const int shift = rhs.degree - lhs.degree;
  for (Bar& bar : raw) {
    bar.degree += shift;
    bar.mult = lhs.mult * rhs.mult;
  }
  return Barcode(std::move(raw));
}

HomResult hom_star(const Barcode& lhs, const Barcode& rhs) {
  HomResult result;
  std::vector<Bar> all;
  for (const Bar& f : lhs.bars()) {
    for (const Bar& g : rhs.bars()) {
      Barcode out = hom_star_pair(f, g);
      all.insert(all.end(), out.bars().begin(), out.bars().end());
      result.provenance.push_back(HomResult::PairOut{f, g, std::move(out)});
    }
  }
  result.barcode = Barcode(std::move(all));
  return result;
}

Barcode hom_ray(const Barcode& lhs, const Barcode& rhs) {
  return tensor_ray(hom_star(lhs, rhs).barcode);
}

Scalar hom_ray_depth(const Barcode& lhs, const Barcode& rhs) {
  Scalar depth;
  std::vector<Bar> raw;
  Scalar zero;
  for (const Bar& f : lhs.bars()) {
    require_covered(f);
    for (const Bar& g : rhs.bars()) {
      require_covered(g);
      raw.clear();
      raw_pair(f.interval, g.interval, raw);
      for (const Bar& bar : raw) {
        Scalar lo = max(bar.interval.lo(), zero);
        if (bar.interval.hi() > lo) depth = max(depth, bar.interval.hi() - lo);
      }
    }
  }
  return depth;
}

int hom_dim0(const Interval& src, const Interval& dst) {
  auto supported = [](const Interval& iv) {
    return iv.hi_open() && (iv.lo().is_neg_inf() || !iv.lo_open());
  };
  if (!supported(src) || !supported(dst))
    throw std::invalid_argument("hom_dim0 expects half-open or ray shapes");
  const Scalar a = src.lo(), b = src.hi(), c = dst.lo(), d = dst.hi();
  return (a <= c && c < b && b <= d) ? 1 : 0;
}

}  // namespace tamcalc
