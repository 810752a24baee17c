#include "kummer/isometry.hpp"

#include <doctest.h>

using namespace kummer;

TEST_CASE("translations") {
  Label a = Label::parse("13"), b = Label::parse("45");
  LatticeIsometry ta = iso_translation(a), tb = iso_translation(b);
  CHECK(ta.is_gram_isometry());
  CHECK((ta * ta).is_identity());
  CHECK(ta * tb == tb * ta);
  CHECK(ta * tb == iso_translation(a + b));
  CHECK(ta.apply(cls_node(b)) == cls_node(a + b));
  CHECK(ta.apply(cls_lambda()) == cls_lambda());
}

TEST_CASE("switch") {
  LatticeIsometry s = iso_switch();
  CHECK(s.is_gram_isometry());
  CHECK((s * s).is_identity());
  for (Label a : {Label::zero(), Label::parse("26"), Label::parse("35")})
    CHECK(s.apply(cls_node(a)) == trope_class(a));
  CHECK(s.apply(cls_c()) == -cls_c());
  CHECK(s * iso_translation(Label::parse("12")) ==
        iso_translation(Label::parse("12")) * s);
}

TEST_CASE("reflections, projections, correlations") {
  LatticeIsometry r = iso_reflection(cls_R());
  CHECK(r.is_gram_isometry());
  CHECK((r * r).is_identity());
  CHECK(r.apply(cls_R()) == -cls_R());
  CHECK(r.apply(cls_w_dblprime()) == cls_w_dblprime());

  Label a = Label::parse("24");
  LatticeIsometry p = iso_projection(a), q = iso_correlation(a);
  CHECK((p * p).is_identity());
  CHECK((q * q).is_identity());
  CHECK(p.preserves_integral_lattice());
  CHECK(q.preserves_integral_lattice());
  CHECK(q == iso_switch() * p * iso_switch());
  CHECK(p.apply(cls_proj_root(a)) == -cls_proj_root(a));

  SurfaceClass iso;  // isotropic: Lambda - N_0 - N_16 has square 0
  iso.lambda() = 1;
  iso.node(Label::zero()) = -1;
  iso.node(Label::parse("16")) = -1;
  CHECK_THROWS_AS(iso_reflection(iso), std::invalid_argument);
}

TEST_CASE("relabeling matches the node action") {
  S6 pi{{2, 1, 3, 4, 6, 5}};  // swaps 1<->2 and 5<->6
  LatticeIsometry f = iso_relabel(pi);
  CHECK(f.is_gram_isometry());
  CHECK(f.apply(cls_lambda()) == cls_lambda());
  for (Label x : all_labels())
    CHECK(f.apply(cls_node(x)) == cls_node(relabel_node(pi, x)));
  CHECK(f * iso_relabel(pi.inverse()) == iso_identity());
}

TEST_CASE("base involution") {
  GopelTetrad g0 = hutchinson_base_tetrad();
  CHECK(g0.type() == 1);
  LatticeIsometry phi = iso_hutchinson_base();
  CHECK(phi.is_gram_isometry());
  CHECK(phi.preserves_integral_lattice());
  CHECK((phi * phi).is_identity());
  SurfaceClass lam_img;
  lam_img.lambda() = 3;
  for (Label a : g0.labels) lam_img.node(a) = -2;
  CHECK(phi.apply(cls_lambda()) == lam_img);
  CHECK(hutchinson_translation_label(g0) == Label::parse("45"));
}

TEST_CASE("z family") {
  const auto& zs = all_z_isometries();
  REQUIRE(zs.size() == 45);
  // Spot-check the full relation set on one member away from the base tetrad.
  auto g = find_gopel({Label::parse("00"), Label::parse("16"), Label::parse("23"),
                       Label::parse("45")});
  REQUIRE(g.has_value());
  LatticeIsometry z = iso_z(*g);
  CHECK(z == iso_z(*g));  // deterministic
  CHECK((z * z).is_identity());
  CHECK(z.apply(cls_R()) == cls_R());
  CHECK(z.apply(cls_c()) == cls_c());
  SurfaceClass rg = cls_r_gopel(*g);
  CHECK(z.apply(rg) == -rg);
  CHECK(z.apply(cls_w_dblprime()) == cls_w_dblprime() + Rat(2) * rg);
  RatMat diff = z.m;
  for (std::size_t i = 0; i < kSurfaceRank; ++i) diff(i, i) -= 1;
  CHECK(rank(diff) == 7);
  // The conjugating relabeling really carries the base tetrad to g.
  S6 pi = first_relabel_to(*g);
  CHECK(relabel(pi, hutchinson_base_tetrad()).labels == g->labels);
  // phi_g = z_g t_alpha(g).
  CHECK(iso_hutchinson(*g) ==
        z * iso_translation(hutchinson_translation_label(*g)));
}

TEST_CASE("translation-switch group") {
  const auto& grp = aut_dprime_group();
  CHECK(grp.size() == 32);
  CHECK(grp[3] * grp[17] == grp[17] * grp[3]);
  auto stab = stabilizer_of(grp, cls_R());
  REQUIRE(stab.size() == 1);
  CHECK(stab[0].is_identity());
}

TEST_CASE("gate rejects structurally wrong matrices") {
  auto w2 = find_weber({Label::parse("00"), Label::parse("12"), Label::parse("13"),
                        Label::parse("24"), Label::parse("35"), Label::parse("45")});
  REQUIRE(w2.has_value());
  REQUIRE(w2->type() == 2);
  KeumValidation v2 = validate_keum(*w2, iso_identity());
  CHECK(!v2.ok);
  REQUIRE(v2.failures.size() == 1);
  CHECK(v2.failures[0].find("type 1") != std::string::npos);

  auto w1 = find_weber({Label::parse("00"), Label::parse("16"), Label::parse("26"),
                        Label::parse("13"), Label::parse("24"), Label::parse("34")});
  REQUIRE(w1.has_value());
  // The identity is an isometry but has none of the required actions.
  KeumValidation vid = validate_keum(*w1, iso_identity());
  CHECK(!vid.ok);
  CHECK(vid.failures.size() >= 3);  // w'' action, dual root action, involution

  // A scaled matrix breaks the form and the lattice.
  RatMat half = RatMat::identity(kSurfaceRank);
  for (std::size_t i = 0; i < kSurfaceRank; ++i) half(i, i) = rat(1, 2);
  KeumValidation vh = validate_keum(*w1, LatticeIsometry(half));
  CHECK(!vh.ok);
  bool gram_flagged = false;
  for (const auto& f : vh.failures)
    if (f.find("intersection form") != std::string::npos) gram_flagged = true;
  CHECK(gram_flagged);
}
