// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; seeds are fixed for reproducibility.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "tamcalc/bounds.hpp"
#include "tamcalc/homstar.hpp"
#include "tamcalc/json_io.hpp"
#include "tamcalc/oracle.hpp"
#include "tamcalc/persistence.hpp"
#include "tamcalc/config.hpp"
#include "tamcalc/verify.hpp"

using namespace tamcalc;

namespace {

constexpr std::uint64_t kSeed = 24007;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  if (!pass) ++g_failures;
}

Scalar sc(double v) { return Scalar::from_double(v); }

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<Scalar> shuffled_separated_values(int n, std::mt19937_64& rng) {
  std::vector<Scalar> v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar::from_units(i * (Scalar::scale() / 100)));
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// trigonometric circle samples with |f'| <= budget, exact closure
std::vector<Scalar> lipschitz_circle(int k, double budget, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double c1 = unit(rng), c2 = unit(rng);
  double norm = c1 + 2 * c2;
  if (norm > 0) {
    c1 *= budget / norm;
    c2 *= budget / norm;
  }
  double p1 = unit(rng) * 2 * M_PI, p2 = unit(rng) * 2 * M_PI;
  std::vector<Scalar> v;
  for (int i = 0; i < k; ++i) {
    double t = 2 * M_PI * i / k;
    v.push_back(sc(c1 * std::sin(t + p1) + c2 * std::sin(2 * t + p2)));
  }
  return v;
}

void criterion1() {
  double start = now_seconds();
  auto r = verify::homstar_suite(220, kSeed + 1, 2);
  double secs = now_seconds() - start;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "closed-form hom vs grid oracle: %d random pairs, %d mismatches, %.1f s (< 60 s)",
                r.cases, r.failures, secs);
  report(1, r.pass() && secs < 60.0, buf);
}

void criterion2() {
  auto r = verify::tau_suite(120, kSeed + 2, 2);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "translation-morphism length rule vs convolution model: %d cases, %d mismatches",
                r.cases, r.failures);
  report(2, r.pass(), buf);
}

void criterion3() {
  auto r = verify::cone_suite(110, kSeed + 3, 2);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "cone translation morphism vanishes at summed thresholds: %d triangles, %d failures",
                r.cases, r.failures);
  report(3, r.pass(), buf);
}

void criterion4() {
  auto r = verify::cone_suite(110, kSeed + 4, 2);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "depth subadditivity and direct-sum monotonicity: %d instances, %d violations",
                r.cases, r.failures);
  report(4, r.pass(), buf);
}

void criterion5() {
  auto r = verify::equivariant_suite(54, kSeed + 5, 2);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "finite-group model pushforward identity (Z/2, Z/3): %d cases, %d failures",
                r.cases, r.failures);
  report(5, r.pass(), buf);
}

void criterion6() {
  std::mt19937_64 rng(kSeed + 6);
  auto s1 = SimplicialComplex::circle(360);
  auto t2 = SimplicialComplex::torus_grid(32, 32);
  std::uniform_int_distribution<std::int64_t> units(-3 * Scalar::scale(),
                                                    3 * Scalar::scale());
  int violations = 0, cases = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> f;
    for (int i = 0; i < 360; ++i) f.push_back(Scalar::from_units(units(rng)));
    auto res = spectral_from_function(s1, f, 2);
    if (!(res.spectral.gamma <= hom_ray_depth(res.barcode, res.barcode))) ++violations;
    ++cases;
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> f;
    for (int i = 0; i < 1024; ++i) f.push_back(Scalar::from_units(units(rng)));
    auto res = spectral_from_function(t2, f, 2);
    if (!(res.spectral.gamma <= hom_ray_depth(res.barcode, res.barcode))) ++violations;
    ++cases;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "gamma <= depth on random circle/torus filtrations (exact): %d cases, %d violations",
                cases, violations);
  report(6, violations == 0, buf);
}

void criterion7() {
  auto s1 = SimplicialComplex::circle(360);
  std::vector<Scalar> sine;
  for (int i = 0; i < 360; ++i) sine.push_back(sc(std::sin(2.0 * M_PI * i / 360)));
  auto res = spectral_from_function(s1, sine, 2);
  Scalar tol = sc(2.0 * M_PI / 360);
  bool sine_ok = (res.spectral.c_minus + sc(1)).abs() <= tol &&
                 (res.spectral.c_plus - sc(1)).abs() <= tol;

  std::mt19937_64 rng(kSeed + 7);
  bool betti_ok = true;
  for (std::int64_t p : {2, 3}) {
    auto circle_vals = shuffled_separated_values(24, rng);
    betti_ok &= betti_numbers(persistent_homology(
                    lower_star(SimplicialComplex::circle(24), circle_vals), p)) ==
                std::vector<std::int64_t>{1, 1};
    auto torus_vals = shuffled_separated_values(36, rng);
    betti_ok &= betti_numbers(persistent_homology(
                    lower_star(SimplicialComplex::torus_grid(6, 6), torus_vals), p)) ==
                std::vector<std::int64_t>{1, 2, 1};
    auto sphere_vals = shuffled_separated_values(10, rng);
    betti_ok &= betti_numbers(persistent_homology(
                    lower_star(SimplicialComplex::sphere3_join(5, 5), sphere_vals), p)) ==
                std::vector<std::int64_t>{1, 0, 0, 1};
  }
  report(7, sine_ok && betti_ok,
         "sine spectral invariants within the grid step; Betti census exact over F2 and F3");
}

void criterion8() {
  std::mt19937_64 rng(kSeed + 8);
  auto s1 = SimplicialComplex::circle(360);
  const Scalar eps = sc(1e-3);
  int bad = 0, trials = 22;
  for (int trial = 0; trial < trials; ++trial) {
    auto base = shuffled_separated_values(360, rng);
    std::uniform_int_distribution<std::int64_t> noise(-eps.units(), eps.units());
    std::vector<Scalar> moved;
    for (const Scalar& v : base) moved.push_back(v + Scalar::from_units(noise(rng)));
    Barcode b0 = persistent_homology(lower_star(s1, base), 2);
    Barcode b1 = persistent_homology(lower_star(s1, moved), 2);
    if (b0.size() != b1.size()) {
      ++bad;
      continue;
    }
    for (std::size_t i = 0; i < b0.bars().size(); ++i) {
      const Bar& x = b0.bars()[i];
      const Bar& y = b1.bars()[i];
      bool ok = x.degree == y.degree && (x.interval.lo() - y.interval.lo()).abs() <= eps;
      if (x.interval.hi().finite() != y.interval.hi().finite())
        ok = false;
      else if (x.interval.hi().finite())
        ok = ok && (x.interval.hi() - y.interval.hi()).abs() <= eps;
      if (!ok) {
        ++bad;
        break;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "perturbations of 1e-3 move births and finite endpoints by <= 1e-3: %d/%d trials",
                trials - bad, trials);
  report(8, bad == 0, buf);
}

void criterion9() {
  std::mt19937_64 rng(kSeed + 9);
  bool all = true;
  Scalar four_pi = Scalar::pi().times(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto model = LagrangianModel::graph_circle(180, lipschitz_circle(180, 0.95, rng));
    auto rep = verify_conjecture(model, GroupGeometry::u1(), 2);
    all = all && rep.pass && rep.spectral.gamma <= four_pi && rep.bound == four_pi;
  }
  GroupGeometry t2 = GroupGeometry::torus(2);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Scalar> f;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double a = 0.4 * unit(rng), b = 0.4 * unit(rng), p1 = unit(rng) * 2 * M_PI,
           p2 = unit(rng) * 2 * M_PI;
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        f.push_back(sc(a * std::sin(2 * M_PI * i / 16 + p1) + b * std::sin(2 * M_PI * j / 16 + p2)));
    auto rep = verify_conjecture(LagrangianModel::graph_torus(16, 16, f), t2, 2);
    all = all && rep.pass && rep.spectral.gamma <= rep.bound;
  }
  bool formulas = group_bound(1, Scalar::pi(), Scalar()) == four_pi;
  std::map<int, Scalar> ones{{0, sc(1)}, {1, sc(1)}, {2, sc(1)}};
  formulas = formulas && devissage(ones, 2) == sc(3);
  Scalar c = sc(1.25);
  formulas = formulas && cone_recursion(1, 1, c) == c.times(4);
  formulas = formulas && homogeneous_bound(2, 3, Scalar::pi(), Scalar()).value ==
                             Scalar::pi().times(50);
  report(9, all && formulas,
         "unit-ball graph models pass the inequality chain; formula instances exact");
}

void criterion10() {
  auto fig = make_figure_eight(0.8);
  ChordSet cs = reeb_chords(fig, 1e-6);
  bool fig_ok = cs.chords.size() == 1 && std::abs(cs.chords[0].length - 0.8) < 1e-6;

  auto two = make_two_chord_curve(1.0, 0.6);
  ChordSet cs2 = reeb_chords(two, 1e-6);
  bool two_ok = cs2.chords.size() == 2;
  if (two_ok) {
    double a = cs2.chords[0].length, b = cs2.chords[1].length;
    if (a < b) std::swap(a, b);
    two_ok = std::abs(a - 1.0) < 1e-6 && std::abs(b - 0.6) < 1e-6;
  }
  auto rep = verify_conjecture(fig, GroupGeometry::u1(), 2);
  bool bound_ok = rep.l_max > Scalar() && rep.bound == group_bound(1, Scalar::pi(), rep.l_max) &&
                  rep.bound > group_bound(1, Scalar::pi(), Scalar());
  report(10, fig_ok && two_ok && bound_ok,
         "immersed curves give the designed chord lengths and the bound includes l_max");
}

void criterion11() {
  bool all = true;
  GradedDims l;
  l.ranks[0] = 1;
  l.ranks[1] = 2;
  l.ranks[4] = 1;
  for (int m = 0; m <= 10; ++m) {
    auto r = lacunary_steps(l, m);
    int expect = m <= 1 ? 0 : (m - 1 + 1) / 2;
    all = all && r.steps == expect;
    int i = 0;
    for (const auto& step : r.trace) {
      ++i;
      all = all && step.index == i && step.lacunarity == 2 * i;
      if (step.tail_min_degree >= 0) all = all && step.tail_min_degree >= 2 * i + 1;
    }
    all = all && static_cast<int>(r.trace.size()) == expect;
  }
  report(11, all, "truncation induction returns ceil((m-1)/2) steps with a valid lacunarity trace");
}

}  // namespace

int main() {
  std::printf("%s acceptance suite (seed %llu)\n", tool_version().c_str(),
              static_cast<unsigned long long>(kSeed));
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
