#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "tamcalc/barcode.hpp"

using namespace tamcalc;

namespace {

Scalar sc(double v) { return Scalar::from_double(v); }
Interval ho(double a, double b) { return Interval::half_open(sc(a), sc(b)); }
Interval ray(double a) { return Interval::closed_ray(sc(a)); }

// Independent oracle for boundary_depth: scan all candidate thresholds
// (pairwise endpoint differences) for the least c with tau_vanishes.
Scalar depth_by_scan(const Barcode& b) {
  for (const Bar& bar : b.bars())
    if (!bar.interval.length().finite()) return Scalar::pos_inf();
  std::vector<Scalar> candidates{Scalar()};
  for (const Bar& x : b.bars())
    for (const Bar& y : b.bars()) {
      Scalar d = x.interval.hi() - y.interval.lo();
      if (d.finite() && d >= Scalar()) candidates.push_back(d);
    }
  std::sort(candidates.begin(), candidates.end());
  for (const Scalar& c : candidates)
    if (tau_vanishes(b, c)) return c;
  return Scalar::pos_inf();
}

Barcode random_barcode(std::mt19937_64& rng, bool allow_infinite) {
  std::uniform_int_distribution<int> nbars(0, 5), endpoint(0, 20), deg(-2, 2), mult(1, 3);
  std::bernoulli_distribution inf_bar(0.3);
  std::vector<Bar> bars;
  int n = nbars(rng);
  for (int i = 0; i < n; ++i) {
    int a = endpoint(rng);
    if (allow_infinite && inf_bar(rng)) {
      bars.push_back(Bar{ray(a), deg(rng), mult(rng)});
    } else {
      int b = endpoint(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      bars.push_back(Bar{ho(a, b), deg(rng), mult(rng)});
    }
  }
  return Barcode(std::move(bars));
}

}  // namespace

TEST_CASE("canonical form merges duplicates and sorts") {
  Barcode b({Bar{ho(0, 1), 1, 1}, Bar{ho(0, 1), 0, 2}, Bar{ho(0, 1), 1, 3}});
  REQUIRE(b.size() == 2);
  CHECK(b.bars()[0].degree == 0);
  CHECK(b.bars()[1].mult == 4);
  CHECK(b.total_mult() == 6);
}

TEST_CASE("shift") {
  Barcode b = Barcode::single(ho(0, 1), 0);
  CHECK(shift_degrees(b, 2) == Barcode::single(ho(0, 1), 2));
  CHECK(shift_degrees(Barcode(), 5) == Barcode());
  Barcode two({Bar{ho(0, 1), 0, 1}, Bar{ho(0, 1), 1, 1}});
  Barcode expect({Bar{ho(0, 1), -1, 1}, Bar{ho(0, 1), 0, 1}});
  CHECK(shift_degrees(two, -1) == expect);
  CHECK(shift_degrees(shift_degrees(two, 3), -3) == two);
}

TEST_CASE("translate") {
  CHECK(translate(Barcode::single(ho(0, 1)), sc(1)) == Barcode::single(ho(1, 2)));
  CHECK(translate(Barcode::single(ray(0)), sc(-2)) == Barcode::single(ray(-2)));
  Interval open01 = Interval::open(sc(0), sc(1));
  Interval expect = Interval::open(sc(0.5), sc(1.5));
  CHECK(translate(Barcode::single(open01, 1), sc(0.5)) == Barcode::single(expect, 1));
}

TEST_CASE("tensor_ray") {
  CHECK(tensor_ray(Barcode::single(Interval::lower_ray(sc(3)))) ==
        Barcode::single(ho(0, 3)));
  CHECK(tensor_ray(Barcode::single(ho(-2, -1))) == Barcode());
  Interval iv = Interval::open(sc(1), sc(4));
  CHECK(tensor_ray(Barcode::single(iv, 1)) == Barcode::single(iv, 1));
}

TEST_CASE("tensor_ray is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Barcode raw = random_barcode(rng, true);
    std::vector<Bar> shifted;
    for (Bar bar : raw.bars()) {
      bar.interval = bar.interval.translate(sc(-10));
      shifted.push_back(bar);
    }
    Barcode b(shifted);
    CHECK(tensor_ray(tensor_ray(b)) == tensor_ray(b));
  }
}

TEST_CASE("tau_vanishes") {
  CHECK(tau_vanishes(Barcode::single(ho(0, 1)), sc(1)));
  CHECK_FALSE(tau_vanishes(Barcode::single(ray(0)), sc(100)));
  CHECK(tau_vanishes(Barcode(), Scalar()));
  CHECK_FALSE(tau_vanishes(Barcode::single(Interval::lower_ray(sc(0))), sc(1000)));
  CHECK_THROWS_AS(tau_vanishes(Barcode(), sc(-1)), std::invalid_argument);
}

TEST_CASE("tau monotone in c") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cdist(0, 25);
  for (int trial = 0; trial < 100; ++trial) {
    Barcode b = random_barcode(rng, true);
    Scalar c = sc(cdist(rng));
    if (tau_vanishes(b, c)) {
      CHECK(tau_vanishes(b, c + sc(1)));
      CHECK(tau_vanishes(b, c + sc(17)));
    }
  }
}

TEST_CASE("boundary_depth") {
  Barcode b({Bar{ho(0, 2), 0, 1}, Bar{ho(1, 2), 0, 1}});
  CHECK(boundary_depth(b) == sc(2));
  CHECK(boundary_depth(Barcode()) == Scalar());
  CHECK(boundary_depth(Barcode::single(ray(0))) == Scalar::pos_inf());
}

TEST_CASE("boundary_depth equals least vanishing threshold") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Barcode b = random_barcode(rng, trial % 3 == 0);
    CHECK(boundary_depth(b) == depth_by_scan(b));
  }
}

TEST_CASE("boundary_depth of a direct sum is the max") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Barcode x = random_barcode(rng, true);
    Barcode y = random_barcode(rng, true);
    Barcode sum = x;
    sum.add(y);
    CHECK(boundary_depth(sum) == max(boundary_depth(x), boundary_depth(y)));
  }
}

TEST_CASE("boundary_depth invariant under translate and shift") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    Barcode b = random_barcode(rng, true);
    CHECK(boundary_depth(translate(b, sc(3))) == boundary_depth(b));
    CHECK(boundary_depth(shift_degrees(b, -4)) == boundary_depth(b));
  }
}

TEST_CASE("spectral invariants") {
  Barcode b({Bar{ray(0), 0, 1}, Bar{ray(1), -1, 1}, Bar{ho(0.3, 0.7), 0, 1}});
  SpectralData s = spectral_invariants(b);
  CHECK(s.c_minus == Scalar());
  CHECK(s.c_plus == sc(1));
  CHECK(s.gamma == sc(1));

  SpectralData single = spectral_invariants(Barcode::single(ray(5)));
  CHECK(single.c_minus == sc(5));
  CHECK(single.c_plus == sc(5));
  CHECK(single.gamma == Scalar());

  CHECK_THROWS_AS(spectral_invariants(Barcode::single(ho(0, 2))), std::runtime_error);
  CHECK_THROWS_AS(spectral_invariants(Barcode()), std::runtime_error);
}

TEST_CASE("gamma is never negative") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    Barcode b = random_barcode(rng, true);
    bool has_inf = false;
    for (const Bar& bar : b.bars()) has_inf |= bar.interval.hi().is_pos_inf();
    if (!has_inf) continue;
    CHECK(spectral_invariants(b).gamma >= Scalar());
  }
}
