#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tamcalc/homstar.hpp"
#include "tamcalc/persistence.hpp"

using namespace tamcalc;

namespace {

Scalar sc(double v) { return Scalar::from_double(v); }

std::vector<Scalar> sine_values(int k) {
  std::vector<Scalar> v;
  for (int i = 0; i < k; ++i) v.push_back(sc(std::sin(2.0 * M_PI * i / k)));
  return v;
}

std::vector<Scalar> random_values(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::vector<Scalar> v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar::from_units(d(rng) * (Scalar::scale() / 100)));
  return v;
}

}  // namespace

TEST_CASE("preset complexes have the right shape") {
  auto s1 = SimplicialComplex::circle(12);
  CHECK(s1.euler_characteristic() == 0);
  CHECK(s1.dimension() == 1);
  auto t2 = SimplicialComplex::torus_grid(4, 5);
  CHECK(t2.euler_characteristic() == 0);
  CHECK(t2.dimension() == 2);
  CHECK(t2.simplices.size() == 20u + 60u + 40u);
  auto s3 = SimplicialComplex::sphere3_join(3, 3);
  CHECK(s3.euler_characteristic() == 0);
  CHECK(s3.dimension() == 3);
}

TEST_CASE("lower star takes the max over vertices") {
  auto s1 = SimplicialComplex::circle(4);
  FilteredComplex fc = lower_star(s1, {sc(0), sc(1), sc(0), sc(1)});
  for (std::size_t i = 0; i < s1.simplices.size(); ++i)
    if (s1.simplices[i].size() == 2) CHECK(fc.simplex_values[i] == sc(1));
  // constant values put everything at the same level
  FilteredComplex fcc = lower_star(s1, {sc(2), sc(2), sc(2), sc(2)});
  for (const Scalar& v : fcc.simplex_values) CHECK(v == sc(2));
  // filtration order is monotone
  std::mt19937_64 rng(5);
  auto vals = random_values(4, rng);
  FilteredComplex fcr = lower_star(s1, vals);
  for (std::size_t i = 0; i + 1 < fcr.order.size(); ++i)
    CHECK(fcr.simplex_values[fcr.order[i]] <= fcr.simplex_values[fcr.order[i + 1]]);
}

TEST_CASE("circle with a sine function") {
  auto s1 = SimplicialComplex::circle(360);
  auto result = spectral_from_function(s1, sine_values(360), 2);
  Barcode expect({Bar{Interval::closed_ray(sc(-1)), 0, 1},
                  Bar{Interval::closed_ray(sc(1)), -1, 1}});
  CHECK(result.barcode == expect);
  CHECK(result.spectral.c_minus == sc(-1));
  CHECK(result.spectral.c_plus == sc(1));
  CHECK(result.spectral.gamma == sc(2));
}

TEST_CASE("constant function on the circle") {
  auto s1 = SimplicialComplex::circle(16);
  std::vector<Scalar> f(16, Scalar());
  auto result = spectral_from_function(s1, f, 2);
  Barcode expect({Bar{Interval::closed_ray(Scalar()), 0, 1},
                  Bar{Interval::closed_ray(Scalar()), -1, 1}});
  CHECK(result.barcode == expect);
  CHECK(result.spectral.gamma == Scalar());
}

TEST_CASE("double well on the circle") {
  // piecewise linear with critical values -2, 0.5, -1, 1
  const int k = 40;
  std::vector<Scalar> f(k);
  auto lerp = [&](int i0, int i1, double v0, double v1) {
    for (int i = i0; i <= i1 && i < k; ++i)
      f[i % k] = sc(v0 + (v1 - v0) * (i - i0) / double(i1 - i0));
  };
  lerp(0, 10, -2, 0.5);
  lerp(10, 20, 0.5, -1);
  lerp(20, 30, -1, 1);
  lerp(30, 40, 1, -2);
  auto result = spectral_from_function(SimplicialComplex::circle(k), f, 2);
  Barcode expect({Bar{Interval::closed_ray(sc(-2)), 0, 1},
                  Bar{Interval::half_open(sc(-1), sc(0.5)), 0, 1},
                  Bar{Interval::closed_ray(sc(1)), -1, 1}});
  CHECK(result.barcode == expect);
}

TEST_CASE("betti census for the presets over several fields") {
  std::mt19937_64 rng(9);
  for (std::int64_t p : {2, 3, 5}) {
    auto s1 = SimplicialComplex::circle(24);
    auto b1 = persistent_homology(lower_star(s1, random_values(24, rng)), p);
    CHECK(betti_numbers(b1) == std::vector<std::int64_t>{1, 1});

    auto t2 = SimplicialComplex::torus_grid(5, 5);
    auto b2 = persistent_homology(lower_star(t2, random_values(25, rng)), p);
    CHECK(betti_numbers(b2) == std::vector<std::int64_t>{1, 2, 1});

    auto s3 = SimplicialComplex::sphere3_join(4, 4);
    auto b3 = persistent_homology(lower_star(s3, random_values(8, rng)), p);
    CHECK(betti_numbers(b3) == std::vector<std::int64_t>{1, 0, 0, 1});
  }
}

TEST_CASE("finite endpoints are simplex values") {
  std::mt19937_64 rng(21);
  auto t2 = SimplicialComplex::torus_grid(4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto values = random_values(16, rng);
    FilteredComplex fc = lower_star(t2, values);
    Barcode b = persistent_homology(fc, 2);
    for (const Bar& bar : b.bars()) {
      bool lo_found = false, hi_found = false;
      for (const Scalar& v : fc.simplex_values) {
        lo_found |= v == bar.interval.lo();
        hi_found |= bar.interval.hi().is_pos_inf() || v == bar.interval.hi();
      }
      CHECK(lo_found);
      CHECK(hi_found);
    }
  }
}

TEST_CASE("spectral distance is bounded by the hom depth") {
  std::mt19937_64 rng(33);
  auto s1 = SimplicialComplex::circle(32);
  for (int trial = 0; trial < 15; ++trial) {
    auto result = spectral_from_function(s1, random_values(32, rng), 2);
    CHECK(result.spectral.gamma <= hom_ray_depth(result.barcode, result.barcode));
  }
}

TEST_CASE("perturbation moves endpoints by at most epsilon") {
  std::mt19937_64 rng(47);
  auto s1 = SimplicialComplex::circle(24);
  const Scalar eps = sc(1e-3);
  for (int trial = 0; trial < 10; ++trial) {
    // distinct values separated by 0.01 > 2 eps, so bars cannot cross
    std::vector<Scalar> base;
    for (int i = 0; i < 24; ++i) base.push_back(Scalar::from_units(i * (Scalar::scale() / 100)));
    std::shuffle(base.begin(), base.end(), rng);
    std::uniform_int_distribution<std::int64_t> noise(-eps.units(), eps.units());
    std::vector<Scalar> moved;
    for (const Scalar& v : base) moved.push_back(v + Scalar::from_units(noise(rng)));
    Barcode b0 = persistent_homology(lower_star(s1, base), 2);
    Barcode b1 = persistent_homology(lower_star(s1, moved), 2);
    REQUIRE(b0.size() == b1.size());
    // positional comparison of canonical forms, endpointwise
    for (std::size_t i = 0; i < b0.bars().size(); ++i) {
      const Bar& x = b0.bars()[i];
      const Bar& y = b1.bars()[i];
      CHECK(x.degree == y.degree);
      CHECK((x.interval.lo() - y.interval.lo()).abs() <= eps);
      if (x.interval.hi().finite())
        CHECK((x.interval.hi() - y.interval.hi()).abs() <= eps);
      else
        CHECK(y.interval.hi().is_pos_inf());
    }
  }
}

TEST_CASE("rejects bad input") {
  auto s1 = SimplicialComplex::circle(4);
  CHECK_THROWS(lower_star(s1, {sc(0), sc(1)}));
  FilteredComplex fc = lower_star(s1, {sc(0), sc(1), sc(2), sc(3)});
  CHECK_THROWS(persistent_homology(fc, 6));
}
