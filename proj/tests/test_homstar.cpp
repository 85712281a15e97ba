#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "tamcalc/homstar.hpp"

using namespace tamcalc;

namespace {

Scalar sc(double v) { return Scalar::from_double(v); }
Interval ho(double a, double b) { return Interval::half_open(sc(a), sc(b)); }
Interval ray(double a) { return Interval::closed_ray(sc(a)); }
Bar bar(Interval iv, int deg = 0, std::int64_t mult = 1) { return Bar{iv, deg, mult}; }

Barcode random_covered_barcode(std::mt19937_64& rng, int max_bars = 4) {
  std::uniform_int_distribution<int> nbars(1, max_bars), endpoint(0, 12), deg(-2, 2);
  std::bernoulli_distribution inf_bar(0.3);
  std::vector<Bar> bars;
  int n = nbars(rng);
  for (int i = 0; i < n; ++i) {
    int a = endpoint(rng);
    if (inf_bar(rng)) {
      bars.push_back(bar(ray(a), deg(rng)));
    } else {
      int b = endpoint(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      bars.push_back(bar(ho(a, b), deg(rng)));
    }
  }
  if (bars.empty()) bars.push_back(bar(ho(0, 1)));
  return Barcode(std::move(bars));
}

}  // namespace

TEST_CASE("pair formulas on the covered shapes") {
  // two rays
  CHECK(hom_star_pair(bar(ray(2)), bar(ray(5))) ==
        Barcode::single(Interval::lower_ray(sc(3)), 1));
  // ray into nothing: c - a <= -inf? no: empty when c <= a is false here
  CHECK(hom_star_pair(bar(ray(5)), bar(ray(5))) ==
        Barcode::single(Interval::lower_ray(sc(0)), 1));
  // equal finite bars
  Barcode same = hom_star_pair(bar(ho(0, 1)), bar(ho(0, 1)));
  CHECK(same == Barcode({bar(ho(-1, 0), 1), bar(ho(0, 1), 0)}));
  // disjoint finite bars
  CHECK(hom_star_pair(bar(ho(0, 1)), bar(ho(2, 3))) ==
        Barcode({bar(ho(1, 2), 1), bar(ho(2, 3), 0)}));
  // finite source, ray target
  CHECK(hom_star_pair(bar(ho(0, 1)), bar(ray(2))) == Barcode::single(ho(1, 2), 1));
  // ray source, finite target: half-open output, closed on the left
  CHECK(hom_star_pair(bar(ray(0)), bar(ho(2, 3))) ==
        Barcode::single(ho(2, 3), 0));
}

TEST_CASE("degenerate pairs drop empty summands") {
  // [0,1) vs [0,1) shifted so both summands die
  CHECK(hom_star_pair(bar(ho(0, 1)), bar(ho(-5, -4))) ==
        Barcode({bar(ho(-6, -5), 1), bar(ho(-5, -4), 0)}));
  // ray source keeps a nonempty (negative) output
  CHECK(hom_star_pair(bar(ray(10)), bar(ho(0, 1))) ==
        Barcode::single(ho(-10, -9), 0));
}

TEST_CASE("degree shift rule and multiplicities") {
  Barcode out = hom_star_pair(bar(ray(0), 0, 2), bar(ray(3), -2, 3));
  CHECK(out == Barcode::single(Interval::lower_ray(sc(3)), 1 - 2, 6));
}

TEST_CASE("uncovered shapes are rejected") {
  CHECK_THROWS_AS(hom_star_pair(bar(Interval::lower_ray(sc(0))), bar(ho(0, 1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(hom_star_pair(bar(ho(0, 1)), bar(Interval::open(sc(0), sc(1)))),
                  std::invalid_argument);
}

TEST_CASE("hom_star bilinearity examples") {
  CHECK(hom_star(Barcode(), Barcode::single(ho(0, 3))).barcode == Barcode());
  // {[0,oo)} vs {[c,oo)[-n]}
  Barcode out = hom_star(Barcode::single(ray(0)), Barcode::single(ray(2), -3)).barcode;
  CHECK(out == Barcode::single(Interval::lower_ray(sc(2)), 1 - 3));
  // {[0,oo),[1,oo)} vs {[0,oo)}
  Barcode two = hom_star(Barcode({bar(ray(0)), bar(ray(1))}), Barcode::single(ray(0))).barcode;
  CHECK(two == Barcode({Bar{Interval::lower_ray(sc(0)), 1, 1},
                        Bar{Interval::lower_ray(sc(-1)), 1, 1}}));
}

TEST_CASE("provenance covers the output") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Barcode f = random_covered_barcode(rng);
    Barcode g = random_covered_barcode(rng);
    HomResult r = hom_star(f, g);
    Barcode merged;
    for (const auto& p : r.provenance) merged.add(p.out);
    CHECK(merged == r.barcode);
  }
}

TEST_CASE("shift covariance") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> shifts(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Barcode f = random_covered_barcode(rng);
    Barcode g = random_covered_barcode(rng);
    int p = shifts(rng), q = shifts(rng);
    CHECK(hom_star(shift_degrees(f, p), shift_degrees(g, q)).barcode ==
          shift_degrees(hom_star(f, g).barcode, q - p));
  }
}

TEST_CASE("hom_ray examples") {
  CHECK(hom_ray(Barcode::single(ray(0)), Barcode::single(ray(0))) == Barcode());
  CHECK(hom_ray(Barcode::single(ray(0)), Barcode::single(ray(2))) ==
        Barcode::single(ho(0, 2), 1));
  CHECK(hom_ray(Barcode::single(ho(0, 1)), Barcode::single(ho(0, 1))) ==
        Barcode::single(ho(0, 1), 0));
}

TEST_CASE("hom_ray_depth matches the two-step definition") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Barcode f = random_covered_barcode(rng);
    Barcode g = random_covered_barcode(rng);
    CHECK(hom_ray_depth(f, g) == boundary_depth(hom_ray(f, g)));
  }
}

TEST_CASE("depth examples") {
  CHECK(hom_ray_depth(Barcode::single(ray(0)), Barcode::single(ray(0))) == Scalar());
  Barcode f({bar(ray(0), 0), bar(ray(2), -3)});
  CHECK(hom_ray_depth(f, f) == sc(2));
  CHECK(hom_ray_depth(Barcode(), Barcode()) == Scalar());
}

TEST_CASE("direct-sum monotonicity of the depth") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Barcode f1 = random_covered_barcode(rng);
    Barcode f2 = random_covered_barcode(rng);
    Barcode g = random_covered_barcode(rng);
    Barcode sum = f1;
    sum.add(f2);
    CHECK(hom_ray_depth(f1, g) <= hom_ray_depth(sum, g));
    CHECK(hom_ray_depth(g, f1) <= hom_ray_depth(g, sum));
  }
}

TEST_CASE("hom_dim0 rule") {
  CHECK(hom_dim0(ho(0, 2), ho(1, 3)) == 1);
  CHECK(hom_dim0(ho(1, 3), ho(0, 2)) == 0);
  CHECK(hom_dim0(ho(0, 1), ho(0, 1)) == 1);
  CHECK(hom_dim0(ray(0), ray(2)) == 1);
  CHECK(hom_dim0(ray(2), ray(0)) == 0);
  CHECK(hom_dim0(ho(0, 2), ray(1)) == 1);
  CHECK(hom_dim0(ray(1), ho(0, 2)) == 0);
  CHECK(hom_dim0(Interval::lower_ray(sc(1)), Interval::lower_ray(sc(2))) == 1);
  CHECK_THROWS_AS(hom_dim0(Interval::open(sc(0), sc(1)), ho(0, 1)), std::invalid_argument);
}

TEST_CASE("hom_dim0 is consistent with the tau length rule") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> endpoint(0, 10), off(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    int a = endpoint(rng), len = 1 + endpoint(rng);
    Interval src = ho(a, a + len);
    Scalar c = sc(off(rng));
    Interval dst = src.translate(c);
    bool nonzero = hom_dim0(src, dst) == 1;
    CHECK(nonzero == !tau_vanishes(src, c));
  }
}
