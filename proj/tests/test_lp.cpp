#include "kummer/lp.hpp"

#include <doctest.h>

using namespace kummer;

namespace {

RatMat mat(std::size_t r, std::size_t c, std::initializer_list<int> v) {
  RatMat m(r, c);
  auto it = v.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(*it++);
  return m;
}

}  // namespace

// lp_maximize solves: max c.y subject to A y >= b, y free.

TEST_CASE("bounded optimum is exact") {
  RatMat a = mat(2, 2, {-1, 0, 0, -1});  // x <= 1, y <= 2
  LpResult r = lp_maximize(a, {Rat(-1), Rat(-2)}, {Rat(1), Rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(r.point[0] == 1);
  CHECK(r.point[1] == 2);
}

TEST_CASE("rational data stays rational") {
  // max x with 3x <= 1: optimum exactly 1/3.
  RatMat a = mat(1, 1, {-3});
  LpResult r = lp_maximize(a, {Rat(-1)}, {Rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(1, 3));
}

TEST_CASE("unbounded and infeasible are detected") {
  RatMat up = mat(1, 1, {1});  // x >= 0, maximize x
  CHECK(lp_maximize(up, {Rat(0)}, {Rat(1)}).status == LpStatus::Unbounded);

  RatMat bad = mat(2, 1, {1, -1});  // x >= 1 and x <= 0
  CHECK(lp_maximize(bad, {Rat(1), Rat(0)}, {Rat(1)}).status == LpStatus::Infeasible);
}

TEST_CASE("equality constraints are eliminated") {
  RatMat a = mat(2, 2, {1, 0, 0, 1});  // x, y >= 0
  RatMat e = mat(1, 2, {1, 1});        // x + y = 1
  LpResult r = lp_maximize(a, {Rat(0), Rat(0)}, {Rat(3), Rat(1)}, e, {Rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(r.point[0] == 1);
  CHECK(r.point[1] == 0);
  // Inconsistent equalities.
  RatMat e2 = mat(2, 2, {1, 1, 1, 1});
  CHECK(lp_maximize(a, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, e2, {Rat(1), Rat(2)}).status ==
        LpStatus::Infeasible);
}
