#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tamcalc/bounds.hpp"

using namespace tamcalc;

namespace {

Scalar sc(double v) { return Scalar::from_double(v); }

}  // namespace

TEST_CASE("group bound instances") {
  CHECK(group_bound(1, Scalar::pi(), Scalar()) == Scalar::pi().times(4));
  CHECK(group_bound(3, Scalar::pi(), Scalar::from_int(1)) ==
        (Scalar::pi().times(2) + Scalar::from_int(1)).times(4));
}

TEST_CASE("group bound is monotone in each argument") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> nd(0, 6), ld(0, 40), xd(0, 20);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    Scalar l = sc(ld(rng) / 4.0), lm = sc(xd(rng) / 4.0);
    Scalar base = group_bound(n, l, lm);
    CHECK(group_bound(n + 1, l, lm) >= base);
    CHECK(group_bound(n, l + sc(0.5), lm) >= base);
    CHECK(group_bound(n, l, lm + sc(0.5)) >= base);
  }
}

TEST_CASE("homogeneous bound instance and endpoint domination") {
  auto hb = homogeneous_bound(2, 3, Scalar::pi(), Scalar());
  CHECK(hb.value == Scalar::pi().times(50));
  // m = 1 endpoint: factor 1
  auto hb1 = homogeneous_bound(1, 1, Scalar::pi(), Scalar());
  CHECK(hb1.recursion_endpoint == group_bound(1, Scalar::pi(), Scalar()));
  for (int m = 0; m <= 10; ++m) {
    auto h = homogeneous_bound(m, m + 1, sc(3.0), sc(0.25));
    CHECK(h.recursion_endpoint <= h.value);
  }
}

TEST_CASE("chain bound") {
  CHECK(chain_bound({sc(1), sc(2)}, sc(0.5)) == sc(6.5));
  CHECK(chain_bound({}, sc(7)) == sc(7));
  CHECK(chain_bound({sc(4)}, Scalar()) == sc(8));
}

TEST_CASE("devissage") {
  std::map<int, Scalar> constant{{0, sc(1)}, {1, sc(1)}, {2, sc(1)}};
  CHECK(devissage(constant, 2) == sc(3));
  std::map<int, Scalar> zero{{0, Scalar()}, {1, Scalar()}};
  CHECK(devissage(zero, 1) == Scalar());
  std::map<int, Scalar> mixed{{0, sc(1)}, {1, sc(2)}, {2, sc(3)}};
  CHECK(devissage(mixed, 2) == sc(6));
  CHECK_THROWS(devissage(mixed, 3));
  // constant c over any dimension gives (n+1)c
  for (int n = 0; n <= 6; ++n) {
    std::map<int, Scalar> c;
    for (int k = 0; k <= n; ++k) c[k] = sc(0.75);
    CHECK(devissage(c, n) == sc(0.75).times(n + 1));
  }
}

TEST_CASE("cone recursion") {
  Scalar c = sc(2.5);
  CHECK(cone_recursion(0, 0, c) == c);
  CHECK(cone_recursion(1, 1, c) == c.times(4));
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      CHECK(cone_recursion(i, j, c) <= c.times(static_cast<std::int64_t>(i + 1) * (j + 1)));
}

TEST_CASE("lacunary steps") {
  // concentrated in degree zero: nothing to clear
  GradedDims trivial;
  trivial.ranks[0] = 1;
  CHECK(lacunary_steps(trivial, 5).steps == 0);

  GradedDims l;
  l.ranks[0] = 1;
  l.ranks[1] = 2;
  l.ranks[3] = 1;
  auto r3 = lacunary_steps(l, 3);
  CHECK(r3.steps == 1);
  REQUIRE(r3.trace.size() == 1);
  CHECK(r3.trace[0].lacunarity == 2);
  CHECK(r3.trace[0].tail_min_degree >= 3);

  CHECK(lacunary_steps(l, 2).steps == 1);
  for (int m = 0; m <= 10; ++m) {
    auto r = lacunary_steps(l, m);
    int expect = m <= 1 ? 0 : (m - 1 + 1) / 2;
    CHECK(r.steps == expect);
    for (const auto& step : r.trace)
      if (step.tail_min_degree >= 0) CHECK(step.tail_min_degree >= step.lacunarity + 1);
  }
  GradedDims bad;
  bad.ranks[0] = 2;
  CHECK_THROWS(lacunary_steps(bad, 2));
}

TEST_CASE("verify conjecture on graph models") {
  const int k = 64;
  std::vector<Scalar> half_sine;
  for (int i = 0; i < k; ++i) half_sine.push_back(sc(0.5 * std::sin(2.0 * M_PI * i / k)));
  auto model = LagrangianModel::graph_circle(k, half_sine);
  auto report = verify_conjecture(model, GroupGeometry::u1(), 2);
  CHECK(report.pass);
  CHECK(report.spectral.gamma == sc(1.0));
  CHECK(report.bound == Scalar::pi().times(4));
  CHECK(report.spectral.gamma <= report.bound);

  auto zero = LagrangianModel::graph_circle(8, std::vector<Scalar>(8, Scalar()));
  auto zr = verify_conjecture(zero, GroupGeometry::u1(), 2);
  CHECK(zr.pass);
  CHECK(zr.spectral.gamma == Scalar());
}

TEST_CASE("verify conjecture on a torus height function") {
  const int m = 8, n = 8;
  std::vector<Scalar> f;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) f.push_back(sc(0.3 * std::sin(2.0 * M_PI * i / m)));
  auto model = LagrangianModel::graph_torus(m, n, f);
  auto report = verify_conjecture(model, GroupGeometry::torus(2), 2);
  CHECK(report.pass);
  CHECK(report.spectral.gamma == sc(0.6));
}

TEST_CASE("verify conjecture refuses models outside the unit ball") {
  const int k = 16;
  std::vector<Scalar> steep;
  for (int i = 0; i < k; ++i) steep.push_back(sc(5.0 * std::sin(2.0 * M_PI * i / k)));
  auto model = LagrangianModel::graph_circle(k, steep);
  CHECK_THROWS_AS(verify_conjecture(model, GroupGeometry::u1(), 2), std::runtime_error);
}

TEST_CASE("reports are byte-deterministic") {
  const int k = 32;
  std::vector<Scalar> f;
  for (int i = 0; i < k; ++i) f.push_back(sc(0.4 * std::sin(2.0 * M_PI * i / k)));
  auto model = LagrangianModel::graph_circle(k, f);
  auto a = verify_conjecture(model, GroupGeometry::u1(), 2);
  auto b = verify_conjecture(model, GroupGeometry::u1(), 2);
  CHECK(a.detail == b.detail);
  CHECK(a.detail.find("PASS") != std::string::npos);
}

TEST_CASE("immersed curve bound includes the chord length") {
  auto curve = make_figure_eight(0.8);
  auto report = verify_conjecture(curve, GroupGeometry::u1(), 2);
  CHECK(report.pass);
  CHECK((report.l_max - sc(0.8)).abs() <= sc(1e-6));
  CHECK(report.bound == group_bound(1, Scalar::pi(), report.l_max));
  CHECK(report.bound > Scalar::pi().times(2).times(2));
}
