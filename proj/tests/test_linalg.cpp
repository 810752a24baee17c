#include "kummer/linalg.hpp"

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

TEST_CASE("rank, kernel, solve") {
  RatMat a = mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(rank(a) == 2);
  auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 1);
  CHECK(vec_is_zero(a * ker[0]));
  CHECK(!vec_is_zero(ker[0]));

  RatMat b = mat(2, 2, {2, 1, 1, 1});
  auto x = solve(b, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  // Inconsistent system.
  RatMat c = mat(2, 1, {1, 1});
  CHECK(!solve(c, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("inverse and determinant") {
  RatMat a = mat(2, 2, {1, 2, 3, 5});
  CHECK(det(a) == -1);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((*inv) * a == RatMat::identity(2));
  RatMat s = mat(2, 2, {1, 2, 2, 4});
  CHECK(det(s) == 0);
  CHECK(!inverse(s).has_value());
  // det is multiplicative on a fixture pair.
  RatMat b = mat(2, 2, {0, 1, -1, 4});
  CHECK(det(a * b) == det(a) * det(b));
}

TEST_CASE("congruence inertia") {
  RatMat d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = -3;
  Inertia sig = congruence_inertia(d);
  CHECK(sig.positive == 1);
  CHECK(sig.negative == 1);
  CHECK(sig.zero == 1);
  // Off-diagonal hyperbolic plane: signature (1, 1).
  RatMat h(2, 2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  sig = congruence_inertia(h);
  CHECK(sig.positive == 1);
  CHECK(sig.negative == 1);
}

TEST_CASE("column Hermite form and membership") {
  // Columns (2,0,0), (1,1,0), (0,0,3) span the lattice {(x,y,z): x+y even}
  // intersected with 3Z in the last coordinate.
  IntMat m(3, 3);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 1) = 1;
  m(2, 2) = 3;
  IntMat h = hnf_columns(m);
  CHECK(hnf_contains(h, {1, 1, 0}));
  CHECK(hnf_contains(h, {2, 0, 0}));
  CHECK(hnf_contains(h, {0, 0, 3}));
  CHECK(!hnf_contains(h, {1, 0, 0}));
  CHECK(!hnf_contains(h, {0, 0, 1}));
}
