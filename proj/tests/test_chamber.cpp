#include "kummer/chamber.hpp"

#include <doctest.h>

#include <set>

using namespace kummer;

TEST_CASE("wall inventory") {
  const auto& walls = chamber_walls();
  REQUIRE(walls.size() == 316);
  std::set<std::string> names;
  for (const Wall& w : walls) names.insert(w.name);
  CHECK(names.size() == 316);  // no duplicate names
  CHECK(walls[0].name == "N:00");
  CHECK(walls[16].name == "T:00");
  CHECK(walls[16].cls == cls_R());
  CHECK(walls[32].name == "P:00");
  CHECK(walls[48].name == "Q:00");
  CHECK(walls[64].name.rfind("G:", 0) == 0);
  CHECK(walls[124].name.rfind("W:", 0) == 0);
  CHECK(walls.back().name.rfind("W:", 0) == 0);
}

TEST_CASE("membership") {
  MembershipReport in = omega_membership(cls_w_dblprime());
  CHECK(in.inside);
  CHECK(in.violations.empty());

  // Lambda misses the slice equalities.
  MembershipReport lam = omega_membership(cls_lambda());
  CHECK(!lam.inside);
  CHECK(lam.violations.front() == "eq:R");

  // Pushing past a Goepel wall flips its pairing sign.
  auto g = find_gopel({Label::parse("00"), Label::parse("16"), Label::parse("23"),
                       Label::parse("45")});
  REQUIRE(g.has_value());
  SurfaceClass u = cls_w_dblprime() + Rat(2) * cls_r_gopel(*g);
  MembershipReport out = omega_membership(u);
  CHECK(!out.inside);
  bool flagged = false;
  for (const auto& v : out.violations)
    if (v == "G:00.16.23.45") flagged = true;
  CHECK(flagged);
}

TEST_CASE("face dimensions") {
  auto reps = representative_wall_indices();
  REQUIRE(reps.size() == 6);
  // The first representative is the type-1 Goepel facet.
  FaceReport facet = face_report(reps[0]);
  CHECK(facet.nonempty);
  CHECK(facet.dimension == 14);
  // The only implied wall is the trope wall equal to R, which vanishes on
  // the whole slice and therefore on every face.
  CHECK(facet.implied == std::vector<std::string>{"T:00"});
  // The trope wall at the zero label vanishes on the whole slice, so its
  // "face" is the full 15-dimensional chamber.
  FaceReport whole = face_report(16);
  CHECK(whole.nonempty);
  CHECK(whole.dimension == 15);
  // A nodal wall cuts a low-dimensional face.
  FaceReport nodal = face_report(reps[1]);
  CHECK(nodal.dimension <= 10);
  CHECK_THROWS_AS(face_report(316), std::invalid_argument);
}

TEST_CASE("dimension certificate") {
  DimensionCertificate cert = dimension_certificate();
  CHECK(cert.ok);
  CHECK(cert.rank == 15);
  CHECK(cert.failures.empty());
}

TEST_CASE("homing") {
  SurfaceClass wpp = cls_w_dblprime();

  // Already home: empty word.
  HomingResult triv = home_to_chamber(wpp);
  CHECK(triv.admissible);
  CHECK(triv.success);
  CHECK(triv.word.empty());
  CHECK(triv.final_class == wpp);
  CHECK(triv.final_value == Rat(60, 7));

  // One step out, one step back.
  const auto& zs = all_z_isometries();
  SurfaceClass u = zs[7].second.apply(wpp);
  CHECK(!omega_membership(u).inside);
  HomingResult one = home_to_chamber(u);
  CHECK(one.success);
  CHECK(one.final_class == wpp);
  REQUIRE(one.word.size() == 1);

  // A longer word still comes home to the same class.
  SurfaceClass v = zs[3].second.apply(zs[20].second.apply(zs[41].second.apply(wpp)));
  HomingResult three = home_to_chamber(v);
  CHECK(three.admissible);
  CHECK(three.success);
  CHECK(three.final_class == wpp);
  CHECK(three.final_value == Rat(60, 7));

  // Inadmissible input is reported without touching the descent.
  HomingResult bad = home_to_chamber(cls_lambda());
  CHECK(!bad.admissible);
  CHECK(!bad.success);
  CHECK(!bad.notes.empty());
}
