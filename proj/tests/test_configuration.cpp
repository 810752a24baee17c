#include "kummer/configuration.hpp"

#include <doctest.h>

#include <set>

using namespace kummer;

TEST_CASE("labels form the two-torsion group") {
  auto labels = all_labels();
  REQUIRE(labels.size() == 16);
  std::set<int> idx;
  for (Label l : labels) {
    idx.insert(l.index());
    CHECK(Label::from_index(l.index()) == l);
    CHECK(Label::parse(l.str()) == l);
    CHECK(l + l == Label::zero());
  }
  CHECK(idx.size() == 16);
  // Spot-check commutativity and associativity; the suite does the full table.
  Label a = Label::from_index(3), b = Label::from_index(11), c = Label::from_index(14);
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
}

TEST_CASE("trope incidence is a (16,6) configuration") {
  for (Label t : all_labels()) {
    auto inc = trope_incidence(t);
    std::set<int> seen;
    for (Label n : inc) {
      CHECK(incident(n, t));
      seen.insert(n.index());
    }
    CHECK(seen.size() == 6);
  }
  // Node degree 6.
  for (Label n : all_labels()) {
    int deg = 0;
    for (Label t : all_labels())
      if (incident(n, t)) ++deg;
    CHECK(deg == 6);
  }
}

TEST_CASE("Goepel tetrads: counts, types, complement") {
  const auto& gop = enumerate_gopel();
  REQUIRE(gop.size() == 60);
  int t1 = 0, t2 = 0;
  for (const auto& g : gop) {
    CHECK(is_gopel(g.labels));
    (g.type() == 1 ? t1 : t2)++;
  }
  CHECK(t1 == 45);
  CHECK(t2 == 15);
  for (const auto& g : gop) {
    if (g.type() != 1) continue;
    GopelTetrad gc = gopel_complement(g);
    CHECK(is_gopel(gc.labels));
    for (Label x : g.labels)
      for (Label y : gc.labels) CHECK(x != y);
  }
  // Four nodes of one trope are never a tetrad.
  auto inc = trope_incidence(Label::zero());
  LabelSet<4> bad{inc[0], inc[1], inc[2], inc[3]};
  CHECK(!is_gopel(bad));
  CHECK(!find_gopel(bad).has_value());
}

TEST_CASE("Weber hexads: counts, duality") {
  const auto& web = enumerate_weber();
  REQUIRE(web.hexads.size() == 192);
  int t1 = 0, t2 = 0;
  for (const auto& w : web.hexads) {
    CHECK(is_weber(w.labels));
    (w.type() == 1 ? t1 : t2)++;
  }
  CHECK(t1 == 120);
  CHECK(t2 == 72);
  CHECK(web.dual_pairs.size() == 60);
  for (const auto& w : web.hexads) {
    if (w.type() != 1) continue;
    WeberHexad d = weber_dual(w);
    CHECK(d.type() == 1);
    CHECK(sorted(weber_dual(d).labels) == sorted(w.labels));
  }
  // A full trope is not a hexad.
  auto inc = trope_incidence(Label::zero());
  LabelSet<6> bad{inc[0], inc[1], inc[2], inc[3], inc[4], inc[5]};
  CHECK(!is_weber(bad));
}

TEST_CASE("relabelling and translation act on the configuration") {
  REQUIRE(all_s6().size() == 720);
  const S6& pi = all_s6()[123];
  for (const auto& g : enumerate_gopel()) {
    GopelTetrad img = relabel(pi, g);
    CHECK(is_gopel(img.labels));
    CHECK(img.type() == g.type());
  }
  // Translation by any label preserves hexads.
  Label t = Label::from_index(9);
  const auto& w = enumerate_weber().hexads.front();
  CHECK(is_weber(translate(w.labels, t)));
  // meet_t0 matches the declared types.
  for (const auto& g : enumerate_gopel())
    CHECK(meet_t0(g.labels) == (g.type() == 1 ? 2 : 0));
  for (const auto& w2 : enumerate_weber().hexads)
    CHECK(meet_t0(w2.labels) == (w2.type() == 1 ? 3 : 1));
}
