#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "tamcalc/config.hpp"
#include "tamcalc/json_io.hpp"
#include "tamcalc/svg.hpp"

using namespace tamcalc;

namespace {

Scalar sc(double v) { return Scalar::from_double(v); }
Interval ho(double a, double b) { return Interval::half_open(sc(a), sc(b)); }

Barcode random_barcode(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nbars(0, 6), endpoint(-40, 40), deg(-3, 3), mult(1, 4);
  std::bernoulli_distribution inf_hi(0.25), inf_lo(0.15), open_lo(0.2);
  std::vector<Bar> bars;
  int n = nbars(rng);
  for (int i = 0; i < n; ++i) {
    Scalar lo = inf_lo(rng) ? Scalar::neg_inf() : sc(endpoint(rng) / 4.0);
    Scalar hi = inf_hi(rng) ? Scalar::pos_inf() : sc(endpoint(rng) / 4.0 + 12.0);
    auto iv = Interval::make(lo, hi, open_lo(rng), true);
    if (!iv) continue;
    bars.push_back(Bar{*iv, deg(rng), mult(rng)});
  }
  return Barcode(std::move(bars));
}

}  // namespace

TEST_CASE("barcode json round trip") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Barcode b = random_barcode(rng);
    std::string text = barcode_to_json(b);
    CHECK(barcode_from_json(text) == b);
    // canonical serialization is a fixed point
    CHECK(barcode_to_json(barcode_from_json(text)) == text);
  }
}

TEST_CASE("barcode json rejects bad input") {
  CHECK_THROWS(barcode_from_json("[]"));
  CHECK_THROWS(barcode_from_json(R"({"bars": [{"lo": 1, "hi": 0}]})"));
  CHECK_THROWS(barcode_from_json(R"({"bars": [{"lo": 0, "hi": 1, "mult": 0}]})"));
  CHECK_THROWS(barcode_from_json(R"({"scale": 1000, "bars": []})"));
}

TEST_CASE("svg rendering is deterministic and sane") {
  Barcode b({Bar{ho(0, 2), 0, 1}, Bar{Interval::closed_ray(sc(1)), -1, 2},
             Bar{Interval::lower_ray(sc(3)), 1, 1}});
  std::string one = render_svg(b);
  std::string two = render_svg(b);
  CHECK(one == two);
  CHECK(one.find("<svg") == 0);
  CHECK(one.find("circle") != std::string::npos);  // finite endpoints
  CHECK(one.find("path") != std::string::npos);    // infinite arrowheads
  CHECK(one.find("x2") != std::string::npos);
  std::string empty = render_svg(Barcode());
  CHECK(empty.find("<svg") == 0);
  CHECK(empty.find("0 bars") != std::string::npos);
}

TEST_CASE("model json parsing") {
  ParsedModel s1 = model_from_json(R"({"preset":"s1","values":[0,1,0,-1]})");
  CHECK_FALSE(s1.is_curve);
  CHECK(s1.complex.n_vertices == 4);
  CHECK(s1.has_lagrangian);

  ParsedModel t2 = model_from_json(R"({"preset":"t2","m":3,"n":3,
    "values":[0,0,0, 1,1,1, 2,2,2]})");
  CHECK(t2.complex.n_vertices == 9);

  ParsedModel curve = model_from_json(R"({"kind":"curve","primitive_start":0,
    "samples":[{"s":0,"x":0,"xi":0},{"s":0.25,"x":1,"xi":1},{"s":0.5,"x":0,"xi":0},
               {"s":0.75,"x":-1,"xi":-1}]})");
  CHECK(curve.is_curve);
  // a loop around nonzero area is rejected: the primitive cannot close
  CHECK_THROWS(model_from_json(R"({"kind":"curve","primitive_start":0,
    "samples":[{"s":0,"x":0,"xi":0},{"s":0.25,"x":1,"xi":1},{"s":0.5,"x":2,"xi":0},
               {"s":0.75,"x":1,"xi":-1}]})"));

  ParsedModel custom = model_from_json(R"({"preset":"custom","vertices":3,
    "simplices":[[0],[1],[2],[0,1],[1,2],[0,2]],"values":[0,1,2]})");
  CHECK(custom.complex.simplices.size() == 6);

  CHECK_THROWS(model_from_json(R"({"preset":"s1","values":[]})"));
  CHECK_THROWS(model_from_json(R"({"preset":"nope","values":[1]})"));
}

TEST_CASE("geometry json parsing") {
  GroupGeometry g = geometry_from_json(R"({"name":"flag","n":3,"m":2,"l":3.14,"quotient":true})");
  CHECK(g.n == 3);
  CHECK(g.m == 2);
  CHECK(g.is_quotient);
  CHECK_THROWS(geometry_from_json(R"({"n":1,"m":2,"l":1})"));
}

TEST_CASE("grid representation json") {
  std::string text = R"({
    "prime": 2,
    "breakpoints": [0, 1],
    "dims": [0, 1, 1, 1, 1],
    "maps": [{"point": 1, "side": "right", "matrix": [[1]]},
             {"point": 3, "side": "left", "matrix": [[1]]},
             {"point": 3, "side": "right", "matrix": [[1]]}]
  })";
  GridRep rep = grid_rep_from_json(text);
  CHECK(gabriel_barcode(rep, 0) == Barcode::single(Interval::closed_ray(Scalar()), 0));
  CHECK_THROWS(grid_rep_from_json(R"({"breakpoints":[0],"dims":[1]})"));
}

TEST_CASE("config file and environment") {
  const char* path = "/tmp/tamcalc_test_config";
  {
    std::ofstream out(path);
    out << "# comment\nprime = 3\nseed= 99\noracle_cases =17\n";
  }
  Config cfg = Config::load(path);
  CHECK(cfg.prime == 3);
  CHECK(cfg.seed == 99);
  CHECK(cfg.oracle_cases == 17);
  CHECK(cfg.scale_pow10 == 9);

  setenv("TAMCALC_PRIME", "5", 1);
  Config cfg2 = Config::load(path);
  CHECK(cfg2.prime == 5);
  unsetenv("TAMCALC_PRIME");

  {
    std::ofstream out(path);
    out << "bogus = 1\n";
  }
  CHECK_THROWS(Config::load(path));
  std::remove(path);
}
