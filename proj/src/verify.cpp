#include "tamcalc/verify.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "tamcalc/homstar.hpp"
#include "tamcalc/json_io.hpp"
#include "tamcalc/oracle.hpp"

namespace tamcalc {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Scalar sci(int v) { return Scalar::from_int(v); }

Bar random_covered_bar(std::mt19937_64& rng, int max_coord, int max_deg) {
  std::uniform_int_distribution<int> endpoint(0, max_coord), deg(-max_deg, max_deg);
  std::bernoulli_distribution infinite(0.3);
  int a = endpoint(rng);
  if (infinite(rng)) return Bar{Interval::closed_ray(sci(a)), deg(rng), 1};
  int b = endpoint(rng);
  if (a == b) b = a + 1;
  if (a > b) std::swap(a, b);
  return Bar{Interval::half_open(sci(a), sci(b)), deg(rng), 1};
}

Barcode random_covered_barcode(std::mt19937_64& rng, int max_bars, int max_coord, int max_deg) {
  std::uniform_int_distribution<int> nbars(1, max_bars);
  std::vector<Bar> bars;
  int n = nbars(rng);
  for (int i = 0; i < n; ++i) bars.push_back(random_covered_bar(rng, max_coord, max_deg));
  return Barcode(std::move(bars));
}

Barcode random_torsion_barcode(std::mt19937_64& rng, int max_bars, int max_coord, int max_deg) {
  std::uniform_int_distribution<int> nbars(1, max_bars), endpoint(0, max_coord),
      deg(-max_deg, max_deg);
  std::vector<Bar> bars;
  int n = nbars(rng);
  for (int i = 0; i < n; ++i) {
    int a = endpoint(rng), b = endpoint(rng);
    if (a == b) b = a + 1;
    if (a > b) std::swap(a, b);
    bars.push_back(Bar{Interval::half_open(sci(a), sci(b)), deg(rng), 1});
  }
  return Barcode(std::move(bars));
}

}  // namespace

SuiteResult homstar_suite(int cases, std::uint64_t seed, std::int64_t prime) {
  SuiteResult result;
  result.name = "homstar";
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  Field f = Field::fp(prime);
  for (int i = 0; i < cases; ++i) {
    Bar lhs = random_covered_bar(rng, 20, 2);
    Bar rhs = random_covered_bar(rng, 20, 2);
    Barcode expect = hom_star_pair(lhs, rhs);
    Barcode got = oracle::hom_star(Barcode({lhs}), Barcode({rhs}), f);
    ++result.cases;
    if (!(expect == got)) {
      ++result.failures;
      result.counterexamples.push_back("lhs " + Barcode({lhs}).to_string() + " rhs " +
                                       Barcode({rhs}).to_string() + " closed " +
                                       expect.to_string() + " oracle " + got.to_string());
    }
  }
  result.seconds = elapsed(start);
  return result;
}

SuiteResult tau_suite(int cases, std::uint64_t seed, std::int64_t prime) {
  SuiteResult result;
  result.name = "tau";
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  Field f = Field::fp(prime);
  std::uniform_int_distribution<int> endpoint(0, 10), cdist(0, 12), shape(0, 3);
  for (int i = 0; i < cases; ++i) {
    int a = endpoint(rng);
    Interval iv = [&]() -> Interval {
      switch (shape(rng)) {
        case 0: return Interval::half_open(sci(a), sci(a + 1 + endpoint(rng) % 5));
        case 1: return Interval::closed_ray(sci(a));
        case 2: return Interval::lower_ray(sci(a));
        default: return Interval::line();
      }
    }();
    Scalar c = sci(cdist(rng));
    oracle::TauProbe probe = oracle::tau_single(iv, c, f);
    bool rule = tau_vanishes(iv, c);
    ++result.cases;
    if (!probe.model_ok || probe.zero != rule) {
      ++result.failures;
      result.counterexamples.push_back("interval " + iv.to_string() + " c=" + c.to_string() +
                                       " oracle_zero=" + (probe.zero ? "1" : "0") +
                                       " rule=" + (rule ? "1" : "0") +
                                       (probe.model_ok ? "" : " (model check failed)"));
    }
  }
  result.seconds = elapsed(start);
  return result;
}

namespace {

// Random natural chain map between barcode complexes, built from the
// canonical overlap maps with random coefficients; validated by check().
ChainMap1 random_natural_map(const Barcode& src_bc, const CellComplex1& src,
                             const Barcode& dst_bc, const CellComplex1& dst,
                             std::mt19937_64& rng) {
  const Field f = src.field();
  const Grid1& grid = src.grid();
  ChainMap1 u;
  u.src = &src;
  u.dst = &dst;
  u.comp.assign(grid.num_cells(), {});
  for (int c = 0; c < grid.num_cells(); ++c)
    for (int k = src.deg_lo(); k < src.deg_hi(); ++k)
      u.comp[c].push_back(Mat(f, dst.dim(c, k), src.dim(c, k)));

  std::uniform_int_distribution<std::int64_t> coeff(0, 100);
  // offsets replicate the embedding layout: bars in canonical order per
  // complex degree
  auto offset_of = [&](const Barcode& bc, std::size_t bar_idx, int cell) {
    const Bar& bar = bc.bars()[bar_idx];
    int off = 0;
    for (std::size_t i = 0; i < bar_idx; ++i) {
      const Bar& other = bc.bars()[i];
      if (other.degree != bar.degree) continue;
      auto r = grid.cell_range(other.interval);
      if (r.first <= cell && cell <= r.second) off += static_cast<int>(other.mult);
    }
    return off;
  };
  for (std::size_t i = 0; i < src_bc.bars().size(); ++i)
    for (std::size_t j = 0; j < dst_bc.bars().size(); ++j) {
      const Bar& bi = src_bc.bars()[i];
      const Bar& bj = dst_bc.bars()[j];
      if (bi.degree != bj.degree) continue;
      if (hom_dim0(bi.interval, bj.interval) == 0) continue;
      FElem lambda = f.from_int(coeff(rng));
      if (f.is_zero(lambda)) continue;
      // the canonical map is supported on [dst.lo, src.hi)
      auto overlap = Interval::make(bj.interval.lo(), bi.interval.hi(), false, true);
      if (!overlap) continue;
      auto cells = grid.cell_range(*overlap);
      int deg = -bi.degree;
      for (int cell = cells.first; cell <= cells.second; ++cell) {
        int r = offset_of(dst_bc, j, cell);
        int cidx = offset_of(src_bc, i, cell);
        Mat& m = u.comp[cell][deg - src.deg_lo()];
        m.set(r, cidx, f.add(m.at(r, cidx), lambda));
      }
    }
  u.check();
  return u;
}

}  // namespace

SuiteResult cone_suite(int cases, std::uint64_t seed, std::int64_t prime) {
  SuiteResult result;
  result.name = "cone";
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  Field f = Field::fp(prime);
  for (int i = 0; i < cases; ++i) {
    Barcode x_bc = random_torsion_barcode(rng, 3, 8, 1);
    Barcode y_bc = random_torsion_barcode(rng, 3, 8, 1);
    Grid1 grid = merge_grids(grid_from_barcode(x_bc), grid_from_barcode(y_bc));
    CellComplex1 x = embed_barcode(x_bc, grid, f);
    CellComplex1 y = embed_barcode(y_bc, grid, f);
    int dlo = std::min(x.deg_lo(), y.deg_lo());
    int dhi = std::max(x.deg_hi(), y.deg_hi());
    CellComplex1 xw = widen(x, dlo, dhi);
    CellComplex1 yw = widen(y, dlo, dhi);
    ChainMap1 u = random_natural_map(x_bc, xw, y_bc, yw, rng);
    CellComplex1 cone = mapping_cone(u);
    Barcode cone_bc = decompose_complex(cone);

    Scalar a = boundary_depth(y_bc);
    Scalar b = boundary_depth(x_bc);
    bool ok = true;
    std::string why;

    // torsion of the cone at the summed threshold, by the oracle morphism
    oracle::TauReport tau = oracle::tau_morphism(cone_bc, a + b, f);
    if (!tau.zero || !tau.model_ok) {
      ok = false;
      why = "cone translation morphism did not vanish";
    }

    // depth subadditivity along the triangle X -> Y -> cone
    Barcode probe = random_covered_barcode(rng, 2, 8, 1);
    if (hom_ray_depth(cone_bc, probe) > hom_ray_depth(x_bc, probe) + hom_ray_depth(y_bc, probe)) {
      ok = false;
      why = "depth subadditivity failed against " + probe.to_string();
    }
    if (hom_ray_depth(probe, cone_bc) > hom_ray_depth(probe, x_bc) + hom_ray_depth(probe, y_bc)) {
      ok = false;
      why = "depth subadditivity (right) failed against " + probe.to_string();
    }

    // direct-sum monotonicity
    Barcode sum = x_bc;
    sum.add(y_bc);
    if (hom_ray_depth(x_bc, probe) > hom_ray_depth(sum, probe) ||
        hom_ray_depth(probe, x_bc) > hom_ray_depth(probe, sum)) {
      ok = false;
      why = "direct-sum monotonicity failed";
    }

    ++result.cases;
    if (!ok) {
      ++result.failures;
      result.counterexamples.push_back("X " + x_bc.to_string() + " Y " + y_bc.to_string() +
                                       " cone " + cone_bc.to_string() + ": " + why);
    }
  }
  result.seconds = elapsed(start);
  return result;
}

SuiteResult equivariant_suite(int cases, std::uint64_t seed, std::int64_t prime) {
  SuiteResult result;
  result.name = "equivariant";
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  Field f = Field::fp(prime);
  for (int i = 0; i < cases; ++i) {
    int order = (i % 2 == 0) ? 2 : 3;
    oracle::EquivariantFamily lhs, rhs;
    lhs.order = rhs.order = order;
    for (int g = 0; g < order; ++g) {
      lhs.comp.push_back(random_covered_barcode(rng, 2, 8, 1));
      rhs.comp.push_back(random_covered_barcode(rng, 2, 8, 1));
    }
    auto out = oracle::equivariant_hom_star(lhs, rhs, f, /*via_oracle=*/true);
    Barcode direct =
        hom_star(oracle::family_sum(lhs), oracle::family_sum(rhs)).barcode;
    ++result.cases;
    if (!(oracle::family_sum(out) == direct)) {
      ++result.failures;
      result.counterexamples.push_back("order " + std::to_string(order) + " sum " +
                                       oracle::family_sum(out).to_string() + " direct " +
                                       direct.to_string());
    }
  }
  result.seconds = elapsed(start);
  return result;
}

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed, std::int64_t prime) {
  if (name == "homstar") return homstar_suite(cases, seed, prime);
  if (name == "tau") return tau_suite(cases, seed, prime);
  if (name == "cone") return cone_suite(cases, seed, prime);
  if (name == "equivariant") return equivariant_suite(cases, seed, prime);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace verify
}  // namespace tamcalc
