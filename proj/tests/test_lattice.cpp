#include "kummer/surface.hpp"

#include <doctest.h>

using namespace kummer;

TEST_CASE("gram form and signature") {
  const RatMat& g = surface_gram();
  CHECK(g(0, 0) == 4);
  CHECK(g(1, 1) == -2);
  CHECK(g(0, 1) == 0);
  CHECK(g(5, 9) == 0);
  Inertia sig = surface_signature();
  CHECK(sig.positive == 1);
  CHECK(sig.negative == 16);
  CHECK(sig.zero == 0);
  // pair() agrees with the gram matrix on basis vectors.
  CHECK(pair(cls_lambda(), cls_lambda()) == 4);
  CHECK(pair(cls_node(Label::zero()), cls_node(Label::zero())) == -2);
  CHECK(pair(cls_lambda(), cls_node(Label::parse("23"))) == 0);
}

TEST_CASE("named class identities") {
  CHECK(cls_b() == cls_c() - cls_R());
  CHECK(pair(cls_R(), cls_R()) == -2);
  CHECK(pair(cls_c(), cls_c()) == -16);
  CHECK(pair(cls_b(), cls_b()) == -14);
  CHECK(pair(cls_w_prime(), cls_w_prime()) == 8);
  CHECK(pair(cls_w_dblprime(), cls_w_dblprime()) == Rat(60, 7));
  CHECK(pair(cls_w_dblprime(), cls_R()) == 0);
  CHECK(pair(cls_w_dblprime(), cls_c()) == 0);
  // Every trope class is a (-2)-class meeting Lambda in 2.
  for (Label b : all_labels()) {
    CHECK(pair(trope_class(b), trope_class(b)) == -2);
    CHECK(pair(trope_class(b), cls_lambda()) == 2);
  }
}

TEST_CASE("roots attached to tetrads and hexads") {
  auto g1 = find_gopel({Label::parse("00"), Label::parse("16"), Label::parse("23"),
                        Label::parse("45")});
  REQUIRE(g1.has_value());
  CHECK(g1->type() == 1);
  SurfaceClass rg = cls_r_gopel(*g1);
  CHECK(pair(rg, rg) == -4);
  CHECK(pair(cls_w_dblprime(), rg) == 4);
  CHECK(pair(rg, cls_R()) == 0);
  CHECK(pair(rg, cls_c()) == 0);

  auto w1 = find_weber({Label::parse("00"), Label::parse("16"), Label::parse("26"),
                        Label::parse("13"), Label::parse("24"), Label::parse("34")});
  REQUIRE(w1.has_value());
  CHECK(w1->type() == 1);
  SurfaceClass rw = cls_r_weber(*w1);
  CHECK(pair(rw, rw) == -12);
  CHECK(pair(cls_w_dblprime(), rw) == 12);

  for (Label a : all_labels()) {
    CHECK(pair(cls_proj_root(a), cls_proj_root(a)) == -4);
    CHECK(pair(cls_corr_root(a), cls_corr_root(a)) == -4);
  }
}

TEST_CASE("boundary classes") {
  for (int i = 1; i <= 6; ++i) {
    SurfaceClass ci = cls_C(i);
    CHECK(pair(ci, ci) == 20);
    Label i6 = (i == 6) ? Label::zero() : Label::pair(i, 6);
    CHECK(pair(ci, cls_proj_root(i6)) == 0);
  }
  CHECK_THROWS_AS(cls_C(0), std::invalid_argument);
  CHECK_THROWS_AS(cls_C(7), std::invalid_argument);

  auto g2 = find_gopel({Label::parse("12"), Label::parse("13"), Label::parse("24"),
                        Label::parse("34")});
  REQUIRE(g2.has_value());
  REQUIRE(g2->type() == 2);
  SurfaceClass f = cls_F(*g2);
  CHECK(pair(f, f) == 24);
  CHECK(pair(cls_w_dblprime(), f) == 24);
  CHECK(pair(f, cls_r_gopel(*g2)) == 0);
  auto g1 = find_gopel({Label::parse("00"), Label::parse("16"), Label::parse("23"),
                        Label::parse("45")});
  CHECK_THROWS_AS(cls_F(*g1), std::invalid_argument);
}

TEST_CASE("integrality") {
  CHECK(is_integral(cls_lambda()));
  CHECK(is_integral(cls_node(Label::parse("14"))));
  CHECK(is_integral(trope_class(Label::parse("25"))));
  CHECK(is_integral(cls_R()));
  CHECK(is_integral(cls_c()));
  CHECK(is_integral(cls_b()));
  // The ample representative has denominator 7; only its 7th multiple is
  // a lattice class.
  SurfaceClass w2 = cls_w_dblprime();
  CHECK(!is_integral(w2));
  w2 *= 7;
  CHECK(is_integral(w2));
  // Half a node is half-integral but still not in the lattice.
  SurfaceClass half = cls_node(Label::zero());
  half *= rat(1, 2);
  CHECK(!is_integral(half));
}

TEST_CASE("(-2)-classes of the span of b and R") {
  auto xs = neg2_classes_in_B();
  REQUIRE(xs.size() == 2);
  CHECK(((xs[0] == cls_R() && xs[1] == -cls_R()) ||
         (xs[0] == -cls_R() && xs[1] == cls_R())));
}

TEST_CASE("serialization roundtrip") {
  SurfaceClass x = cls_w_dblprime();
  auto s = surface_strs(x);
  REQUIRE(s.size() == kSurfaceRank);
  CHECK(s[0] == "15/7");
  CHECK(surface_parse(s) == x);
  CHECK_THROWS_AS(surface_parse({"1", "2"}), std::invalid_argument);
}
