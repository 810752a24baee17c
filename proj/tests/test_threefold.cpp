#include "kummer/threefold.hpp"

#include <doctest.h>

using namespace kummer;

TEST_CASE("index dictionaries") {
  CHECK(line_pos(0, 1) == 0);
  CHECK(line_pos(4, 5) == 14);
  CHECK(line_pos(3, 1) == line_pos(1, 3));
  CHECK_THROWS_AS(line_pos(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(line_pos(0, 6), std::invalid_argument);

  for (int p = 0; p < 6; ++p) {
    CHECK(point_of_branch(branch_of_point(p)) == p);
    CHECK(point_of_node(node_of_point(p)) == p);
  }
  CHECK(node_of_point(0) == Label::zero());
  CHECK(node_of_point(3) == Label::parse("36"));
  CHECK_THROWS_AS(point_of_node(Label::parse("12")), std::invalid_argument);

  CHECK(trope_of_line(0, 2) == Label::parse("26"));
  CHECK(trope_of_line(1, 4) == Label::parse("14"));
  for (Label b : all_labels()) {
    if (b == Label::zero()) continue;
    auto [p, q] = line_of_trope(b);
    CHECK(trope_of_line(p, q) == b);
  }
  CHECK_THROWS_AS(line_of_trope(Label::zero()), std::invalid_argument);
}

TEST_CASE("restriction to the surface") {
  for (int p = 0; p < 6; ++p)
    CHECK(restrict_class(cls3_E(p)) == cls_node(node_of_point(p)));
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      CHECK(restrict_class(cls3_E(p, q)) == trope_class(trope_of_line(p, q)));
  // Restriction is linear.
  ThreefoldClass x = cls3_H() - cls3_E(0) - cls3_E(0, 1);
  CHECK(restrict_class(x) ==
        restrict_class(cls3_H()) - cls_node(Label::zero()) -
            trope_class(Label::parse("16")));
}

TEST_CASE("quintic classes") {
  auto g = find_gopel({Label::parse("00"), Label::parse("16"), Label::parse("23"),
                       Label::parse("45")});
  REQUIRE(g.has_value());
  ThreefoldClass d = d_class(*g);
  CHECK(d.h() == 5);
  CHECK(d.e(2) == -2);
  auto g2 = find_gopel({Label::parse("12"), Label::parse("13"), Label::parse("24"),
                        Label::parse("34")});
  REQUIRE(g2.has_value());
  CHECK_THROWS_AS(d_class(*g2), std::invalid_argument);
}

TEST_CASE("base transformation") {
  ThreefoldMap phi = phi_base();
  CHECK((phi * phi).is_identity());
  CHECK(phi.apply(canonical_class()) == canonical_class());
  // H maps to the quintic class of the base tetrad.
  CHECK(phi.apply(cls3_H()) == d_class(hutchinson_base_tetrad()));
  CHECK(phi.apply(cls3_E(0)) == cls3_E(1));
  CHECK(phi.apply(cls3_E(0, 4)) == cls3_E(1, 5));
  CHECK(phi.apply(cls3_E(0, 1)) == cls3_E(0, 1));
}

TEST_CASE("relabeling maps") {
  S6 pi{{2, 3, 1, 4, 5, 6}};  // 3-cycle on 1,2,3
  ThreefoldMap P = map_relabel(pi);
  CHECK(P.apply(cls3_H()) == cls3_H());
  CHECK(P.apply(cls3_E(1)) == cls3_E(2));
  CHECK(P.apply(cls3_E(3)) == cls3_E(1));
  CHECK(P * map_relabel(pi.inverse()) == ThreefoldMap());
  // The relabeling maps intertwine restriction with the surface relabeling.
  LatticeIsometry f = iso_relabel(pi);
  for (int p = 0; p < 6; ++p)
    CHECK(restrict_class(P.apply(cls3_E(p))) == f.apply(restrict_class(cls3_E(p))));
}

TEST_CASE("conjugated transformations and compatibility") {
  auto g = find_gopel({Label::parse("00"), Label::parse("26"), Label::parse("13"),
                       Label::parse("45")});
  REQUIRE(g.has_value());
  REQUIRE(g->type() == 1);
  ThreefoldMap phi = map_phi(*g);
  CHECK((phi * phi).is_identity());
  CHECK(phi.apply(canonical_class()) == canonical_class());
  CHECK(phi.apply(cls3_H()) == d_class(*g));
  CompatibilityReport rep = compatibility_check(*g);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
  auto g2 = find_gopel({Label::parse("12"), Label::parse("13"), Label::parse("24"),
                        Label::parse("34")});
  CHECK_THROWS_AS(map_phi(*g2), std::invalid_argument);
}
