#include "tamcalc/persistence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tamcalc/field.hpp"

namespace tamcalc {

FilteredComplex lower_star(const SimplicialComplex& k, const std::vector<Scalar>& values) {
  if (static_cast<int>(values.size()) != k.n_vertices)
    throw std::invalid_argument("one value per vertex required");
  k.validate();
  FilteredComplex fc;
  fc.complex = k;
  fc.vertex_values = values;
  for (const auto& s : k.simplices) {
    Scalar v = values[s[0]];
    for (int vert : s) v = max(v, values[vert]);
    fc.simplex_values.push_back(v);
  }
  fc.order.resize(k.simplices.size());
  for (std::size_t i = 0; i < fc.order.size(); ++i) fc.order[i] = static_cast<int>(i);
  std::sort(fc.order.begin(), fc.order.end(), [&](int a, int b) {
    if (fc.simplex_values[a] != fc.simplex_values[b])
      return fc.simplex_values[a] < fc.simplex_values[b];
    const auto& sa = k.simplices[a];
    const auto& sb = k.simplices[b];
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  return fc;
}

namespace {

// Sparse column over F_p: entries (row position, coefficient) sorted by row.
using Column = std::vector<std::pair<int, FElem>>;

void add_scaled(const Field& f, Column& dst, const Column& src, FElem scale) {
  Column out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, f.mul(scale, src[j].second));
      ++j;
    } else {
      FElem v = f.add(dst[i].second, f.mul(scale, src[j].second));
      if (!f.is_zero(v)) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

Barcode persistent_homology(const FilteredComplex& fc, std::int64_t prime) {
  const Field f = Field::fp(prime);
  const auto& simplices = fc.complex.simplices;
  const int n = static_cast<int>(simplices.size());

  // position of each simplex in the filtration order
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[fc.order[i]] = i;
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of[simplices[i]] = i;

  // boundary columns in filtration positions
  std::vector<Column> cols(n);
  for (int id = 0; id < n; ++id) {
    const auto& s = simplices[id];
    if (s.size() == 1) continue;
    Column col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      int fid = index_of.at(face);
      col.emplace_back(pos[fid], f.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols[pos[id]] = std::move(col);
  }

  std::vector<int> pivot_owner(n, -1);
  std::vector<int> partner(n, -1);
  for (int j = 0; j < n; ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      int piv = col.back().first;
      int owner = pivot_owner[piv];
      if (owner < 0) {
        pivot_owner[piv] = j;
        partner[j] = piv;
        partner[piv] = j;
        break;
      }
      FElem scale = f.neg(f.mul(col.back().second, f.inv(cols[owner].back().second)));
      add_scaled(f, col, cols[owner], scale);
    }
  }

  std::vector<Bar> bars;
  for (int j = 0; j < n; ++j) {
    int id = fc.order[j];
    int d = static_cast<int>(simplices[id].size()) - 1;
    if (partner[j] < 0) {
      // check it is a cycle (not a death column that became empty: those have
      // partner set) - unpaired positive simplex
      bars.push_back(Bar{Interval::closed_ray(fc.simplex_values[id]), -d, 1});
    } else if (partner[j] > j) {
      int death_id = fc.order[partner[j]];
      Scalar birth = fc.simplex_values[id];
      Scalar death = fc.simplex_values[death_id];
      if (birth < death) bars.push_back(Bar{Interval::half_open(birth, death), -d, 1});
    }
  }
  return Barcode(std::move(bars));
}

std::vector<std::int64_t> betti_numbers(const Barcode& b) {
  std::vector<std::int64_t> betti;
  for (const Bar& bar : b.bars()) {
    if (!bar.interval.hi().is_pos_inf()) continue;
    int d = -bar.degree;
    if (d < 0) throw std::logic_error("infinite bar in negative homological degree");
    if (static_cast<int>(betti.size()) <= d) betti.resize(d + 1, 0);
    betti[d] += bar.mult;
  }
  return betti;
}

SpectralResult spectral_from_function(const SimplicialComplex& k, const std::vector<Scalar>& values,
                                      std::int64_t prime) {
  FilteredComplex fc = lower_star(k, values);
  Barcode b = persistent_homology(fc, prime);
  return SpectralResult{b, spectral_invariants(b)};
}

}  // namespace tamcalc
