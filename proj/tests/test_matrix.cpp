#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tamcalc/field.hpp"

using namespace tamcalc;

namespace {

Mat random_mat(Field f, int rows, int cols, std::mt19937_64& rng) {
  Mat m(f, rows, cols);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set_int(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic mod p") {
  Field f5 = Field::fp(5);
  CHECK(f5.add(f5.from_int(3), f5.from_int(4)) == f5.from_int(2));
  CHECK(f5.mul(f5.from_int(2), f5.from_int(4)) == f5.from_int(3));
  CHECK(f5.mul(f5.inv(f5.from_int(3)), f5.from_int(3)) == f5.one());
  CHECK_THROWS(Field::fp(6));
}

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  FElem half = q.mul(q.from_int(1), q.inv(q.from_int(2)));
  FElem third = q.inv(q.from_int(3));
  FElem sum = q.add(half, third);
  CHECK(sum == (FElem{5, 6}));
  CHECK(q.mul(sum, q.from_int(6)) == q.from_int(5));
}

TEST_CASE("rank kernel solve over F2 and Q") {
  for (Field f : {Field::fp(2), Field::fp(3), Field::rationals()}) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
      Mat a = random_mat(f, 4, 6, rng);
      Mat k = a.kernel();
      CHECK((a * k).is_zero());
      CHECK(a.rank() + k.cols() == 6);
      // A * (A-solve of A*x0) reproduces A*x0
      Mat x0 = random_mat(f, 6, 2, rng);
      Mat rhs = a * x0;
      auto sol = a.solve(rhs);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == rhs);
    }
  }
}

TEST_CASE("solve detects inconsistency") {
  Field f = Field::fp(2);
  Mat a(f, 2, 1);
  a.set_int(0, 0, 1);
  Mat rhs(f, 2, 1);
  rhs.set_int(1, 0, 1);
  CHECK_FALSE(a.solve(rhs).has_value());
}

TEST_CASE("quotient coordinates") {
  Field f = Field::fp(5);
  // C^3 with out = 0, in = span{(1,1,0)}: quotient has dim 2.
  Mat in(f, 3, 1);
  in.set_int(0, 0, 1);
  in.set_int(1, 0, 1);
  Quotient q(in, Mat(f, 0, 3));
  CHECK(q.dim() == 2);
  Mat v(f, 3, 1);
  v.set_int(0, 0, 2);
  v.set_int(1, 0, 2);
  v.set_int(2, 0, 3);
  Mat h = q.project(v);
  // (2,2,3) = 2*(1,1,0) + (0,0,3): nonzero class
  CHECK_FALSE(h.is_zero());
  Mat w = q.lift(h);
  // lift - v must be in the image
  Mat dv = w - v;
  auto c = in.solve(dv);
  CHECK(c.has_value());
}

TEST_CASE("quotient of kernel by image") {
  Field f = Field::fp(2);
  // 0 -> k^2 --d--> k^2 with d = [[1,0],[0,0]]: H at the right = coker has dim 1.
  Mat d(f, 2, 2);
  d.set_int(0, 0, 1);
  Quotient h(d, Mat(f, 0, 2));
  CHECK(h.dim() == 1);
  // H at the left = ker d has dim 1
  Quotient hl(Mat(f, 2, 0), d);
  CHECK(hl.dim() == 1);
}
