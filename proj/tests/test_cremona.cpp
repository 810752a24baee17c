#include "kummer/cremona.hpp"

#include <doctest.h>

using namespace kummer;

namespace {

const MultiPoly X0 = MultiPoly::var(vX0);
const MultiPoly X1 = MultiPoly::var(vX1);
const MultiPoly X2 = MultiPoly::var(vX2);
const MultiPoly X3 = MultiPoly::var(vX3);

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  return scalar_ratio(p, q).has_value();
}

}  // namespace

TEST_CASE("moduli sampling") {
  auto s1 = sample_moduli(7, 5);
  auto s2 = sample_moduli(7, 5);
  REQUIRE(s1.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(s1[i].a == s2[i].a);
    CHECK(s1[i].b == s2[i].b);
    CHECK(s1[i].c == s2[i].c);
  }
  CHECK(s1[0].a == Rat(9, 7));
  CHECK(s1[0].b == Rat(7, 2));
  CHECK(s1[0].c == Rat(-4));
  for (const auto& m : s1) {
    for (const Rat& v : {m.a, m.b, m.c}) {
      CHECK(v != 0);
      CHECK(v != 1);
    }
    CHECK(m.a != m.b);
    CHECK(m.a != m.c);
    CHECK(m.b != m.c);
  }
}

TEST_CASE("degenerate moduli are rejected") {
  CHECK_THROWS_AS(CremonaEngine(Rat(2), Rat(2), Rat(5)), CremonaDegenerate);
  CHECK_THROWS_AS(CremonaEngine(Rat(0), Rat(3), Rat(5)), CremonaDegenerate);
  CHECK_THROWS_AS(CremonaEngine(Rat(2), Rat(1), Rat(5)), CremonaDegenerate);
}

TEST_CASE("quadrics through the base scheme") {
  CremonaEngine eng(Rat(2), Rat(3), Rat(5));
  // f5 is moduli-free; f4 picks up a and bc.
  CHECK(proportional(eng.f5(), X0 * X1 - X2 * X3));
  CHECK(proportional(eng.f4(), Rat(2) * X0 * X1 - Rat(15) * X2 * X3));
  CHECK(proportional(eng.h(0, 2), Rat(8) * X0 * X1 - Rat(13) * X0 * X2 + Rat(5) * X2 * X3));
  CHECK(proportional(eng.h(0, 3), Rat(4) * X0 * X1 - Rat(13) * X0 * X3 + Rat(9) * X2 * X3));
  CHECK(proportional(eng.h(1, 2), Rat(3) * X0 * X1 - Rat(13) * X1 * X2 + Rat(10) * X2 * X3));
  CHECK(proportional(eng.h(1, 3), X0 * X1 - Rat(13) * X1 * X3 + Rat(12) * X2 * X3));
  // Coordinate planes.
  CHECK(proportional(eng.plane(0, 2, 3), X1));
  CHECK(proportional(eng.plane(1, 2, 3), X0));
  // The quadrics are genuinely quadratic and vanish at the required points.
  std::array<Rat, kNumVars> p5{};
  p5[vX0] = 30;
  p5[vX1] = 15;
  p5[vX2] = 10;
  p5[vX3] = 6;
  CHECK(eng.f4().eval(p5) == 0);
  CHECK(eng.h(0, 2).eval(p5) == 0);
  CHECK(eng.f5().eval(p5) != 0);
}

TEST_CASE("construction and linear system") {
  CremonaEngine eng(Rat(2), Rat(3), Rat(5));
  auto rep = eng.check_construction();
  CHECK(rep.ok);
  CHECK(eng.linear_system_dimension() == 4);
  CHECK(eng.linear_system_dimension(true) > 4);
  CHECK(eng.qualifying_products().size() == 16);
  // All four sections are quintics spanning a rank-4 space.
  for (const auto& s : eng.sections()) CHECK(s.degree_in_xs() == 5);
  std::vector<MultiPoly> secs(eng.sections().begin(), eng.sections().end());
  CHECK(span_rank(secs) == 4);
  // Alternate bases span too; unknown names are rejected.
  for (const char* v : {"s01", "s02", "s03"}) {
    auto alt = eng.build_sections(v);
    std::vector<MultiPoly> av(alt.begin(), alt.end());
    CHECK(span_rank(av) == 4);
  }
  CHECK_THROWS_AS(eng.build_sections("s12"), std::invalid_argument);
}

TEST_CASE("factorization over the certified pool") {
  CremonaEngine eng(Rat(2), Rat(3), Rat(5));
  MultiPoly p = Rat(3) * eng.f4() * eng.h(0, 2) * eng.h(0, 2);
  Factorization f = eng.factor_over_pool(p);
  CHECK(f.ok);
  CHECK(f.exponents.at("f4") == 1);
  CHECK(f.exponents.at("h02") == 2);
  CHECK(f.remainder == MultiPoly::constant(3));
  CHECK(f.str() == "f4 * h02^2");
  // A factor outside the pool is left in the remainder and flagged.
  Factorization g = eng.factor_over_pool(eng.f5() * (X0 + X2));
  CHECK(!g.ok);
  CHECK(g.exponents.at("f5") == 1);
}

TEST_CASE("involution certificates at one specialization") {
  CremonaEngine eng(Rat(2), Rat(3), Rat(5));
  auto comp = eng.compose_self();
  CHECK(comp.ok);
  CHECK(comp.failures.empty());
  auto jac = eng.jacobian_factorization();
  CHECK(jac.ok);
}
