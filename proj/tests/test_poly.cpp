#include "kummer/poly.hpp"

#include <doctest.h>

using namespace kummer;

namespace {

const MultiPoly X0 = MultiPoly::var(vX0);
const MultiPoly X1 = MultiPoly::var(vX1);
const MultiPoly X2 = MultiPoly::var(vX2);
const MultiPoly X3 = MultiPoly::var(vX3);

}  // namespace

TEST_CASE("ring operations") {
  MultiPoly p = X0 + Rat(2) * X1;
  MultiPoly q = X0 - X1;
  CHECK(p * q == q * p);
  CHECK((p + q) * q == p * q + q * q);
  CHECK(p - p == MultiPoly());
  CHECK(p.pow(3) == p * p * p);
  CHECK(p.pow(0) == MultiPoly::constant(1));
  CHECK((X0 * X1).degree_in_xs() == 2);
  CHECK(MultiPoly::constant(5).degree_in_xs() == 0);
  CHECK(MultiPoly().is_zero());
}

TEST_CASE("substitution") {
  MultiPoly p = X0 * X0 + X1;
  CHECK(p.substitute(vX1, X0 * X0) == Rat(2) * X0.pow(2));
  // Coordinate substitution of a homogeneous quadric.
  MultiPoly f = X0 * X1 - X2 * X3;
  std::array<MultiPoly, 4> xs = {X1, X0, X3, X2};  // swap pairs
  CHECK(substitute_xs(f, xs) == f);
  std::array<MultiPoly, 4> sc = {Rat(2) * X0, Rat(2) * X1, Rat(2) * X2, Rat(2) * X3};
  CHECK(substitute_xs(f, sc) == Rat(4) * f);
}

TEST_CASE("exact division") {
  MultiPoly p = X0 + Rat(3) * X2;
  MultiPoly q = X1 * X1 - Rat(1, 2) * X3 * X0;
  auto d = exact_divide(p * q, q);
  REQUIRE(d.has_value());
  CHECK(*d == p);
  CHECK(!exact_divide(p * q + MultiPoly::constant(1), q).has_value());
  CHECK(!exact_divide(X0, X1).has_value());
  CHECK(divides(p, p * p));
}

TEST_CASE("content normalization and scalar ratio") {
  MultiPoly p = Rat(4, 3) * X0 + Rat(2, 3) * X1;
  auto [n, c] = content_normalize(p);
  CHECK(c * n == p);
  CHECK(n == Rat(2) * X0 + X1);

  auto r = scalar_ratio(Rat(6) * p, p);
  REQUIRE(r.has_value());
  CHECK(*r == 6);
  CHECK(!scalar_ratio(p, X0).has_value());
}

TEST_CASE("lowest form at a vertex") {
  // Affine chart at vertex 0: the order-2 part in the other variables.
  MultiPoly f = X0 * X1 * X2 + X0 * X0 * X3 + X1 * X2 * X3;
  LowestForm lf = lowest_form_at_vertex(f, 0);
  CHECK(lf.order == 1);
  CHECK(lf.form == X3);
  LowestForm g = lowest_form_at_vertex(X1 * X2 - X3 * X3, 0);
  CHECK(g.order == 2);
  CHECK(g.form == X1 * X2 - X3 * X3);
}

TEST_CASE("quadric form matrices") {
  MultiPoly f = X0 * X1 - X2 * X3;
  CHECK(quadric_rank(f) == 4);
  CHECK(quadric_rank(X0 * X1) == 2);
  CHECK(quadric_rank(X0 * X0) == 1);
  CHECK(span_rank({f, X0 * X1, X2 * X3}) == 2);
}

TEST_CASE("Bareiss determinant and rank over the polynomial ring") {
  PolyMat m(2, std::vector<MultiPoly>(2));
  m[0] = {X0, X1};
  m[1] = {X2, X3};
  CHECK(bareiss_det(m) == X0 * X3 - X1 * X2);
  CHECK(bareiss_rank(m) == 2);
  PolyMat s(2, std::vector<MultiPoly>(2));
  s[0] = {X0, X1};
  s[1] = {X0 * X2, X1 * X2};  // second row = X2 * first
  CHECK(bareiss_det(s).is_zero());
  CHECK(bareiss_rank(s) == 1);
}

TEST_CASE("binary forms in (u, v)") {
  MultiPoly u = MultiPoly::var(vU), v = MultiPoly::var(vV);
  auto co = binary_form_coeffs((u + v) * (u + v));
  REQUIRE(co.size() == 3);
  CHECK(co[0] == 1);
  CHECK(co[1] == 2);
  CHECK(co[2] == 1);
  CHECK(binary_gcd_degree((u + v) * (u - v), (u + v) * (Rat(2) * u + v)) == 1);
  CHECK(binary_gcd_degree(u * v, (u + v).pow(2)) == 0);
  CHECK(binary_gcd_degree((u - v).pow(2), (u - v) * u) == 1);
}
