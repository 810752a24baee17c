#pragma once

// Isometries of the rank-17 lattice: nodal translations, the switch, the
// projection and correlation involutions, S6 relabelings, and the
// Hutchinson-Goepel involutions attached to type-1 Goepel tetrads.
//
// Matrices act on coordinate columns; column j holds the image of the j-th
// basis vector. Composition (f * g)(x) = f(g(x)).

#include "kummer/surface.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

struct LatticeIsometry {
  RatMat m;

  LatticeIsometry() : m(RatMat::identity(kSurfaceRank)) {}
  explicit LatticeIsometry(RatMat mat) : m(std::move(mat)) {
    if (m.rows() != kSurfaceRank || m.cols() != kSurfaceRank)
      throw std::invalid_argument("LatticeIsometry: 17x17 matrix required");
  }

  SurfaceClass apply(const SurfaceClass& x) const {
    return SurfaceClass::from_vec(m * x.vec());
  }

  LatticeIsometry inverse() const {
    auto inv = kummer::inverse(m);
    if (!inv) throw std::invalid_argument("LatticeIsometry: singular matrix");
    return LatticeIsometry(*inv);
  }

  friend LatticeIsometry operator*(const LatticeIsometry& f, const LatticeIsometry& g) {
    return LatticeIsometry(f.m * g.m);
  }
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.m == b.m;
  }
  friend bool operator!=(const LatticeIsometry& a, const LatticeIsometry& b) {
    return !(a == b);
  }
  friend bool operator<(const LatticeIsometry& a, const LatticeIsometry& b) {
    for (std::size_t i = 0; i < kSurfaceRank; ++i)
      for (std::size_t j = 0; j < kSurfaceRank; ++j) {
        int c = cmp(a.m(i, j), b.m(i, j));
        if (c != 0) return c < 0;
      }
    return false;
  }

  bool is_gram_isometry() const {
    const RatMat& g = surface_gram();
    RatMat mt(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) mt(j, i) = m(i, j);
    return mt * g * m == g;
  }

  // True when every nodal and trope class maps to an integral class.
  bool preserves_integral_lattice() const {
    for (Label a : all_labels()) {
      if (!is_integral(apply(cls_node(a)))) return false;
      if (!is_integral(apply(trope_class(a)))) return false;
    }
    return true;
  }

  bool is_identity() const { return m == RatMat::identity(kSurfaceRank); }
};

inline LatticeIsometry iso_identity() { return LatticeIsometry(); }

namespace detail {

// Isometry fixing Lambda and permuting the nodal classes by f.
template <typename F>
inline LatticeIsometry node_permutation_isometry(F&& f) {
  RatMat m(kSurfaceRank, kSurfaceRank);
  m(0, 0) = 1;
  for (Label a : all_labels()) m(1 + f(a).index(), 1 + a.index()) = 1;
  return LatticeIsometry(std::move(m));
}

inline void set_column(RatMat& m, std::size_t j, const SurfaceClass& x) {
  for (std::size_t i = 0; i < kSurfaceRank; ++i) m(i, j) = x.c[i];
}

}  // namespace detail

// t_alpha: N_x -> N_{x + alpha}, Lambda fixed.
inline LatticeIsometry iso_translation(Label alpha) {
  return detail::node_permutation_isometry([alpha](Label x) { return x + alpha; });
}

// sigma: N_alpha -> T_alpha, Lambda -> 3 Lambda - sum N. An involution that
// commutes with every translation.
inline LatticeIsometry iso_switch() {
  RatMat m(kSurfaceRank, kSurfaceRank);
  SurfaceClass lam_img;
  lam_img.lambda() = 3;
  for (Label a : all_labels()) lam_img.node(a) = -1;
  detail::set_column(m, 0, lam_img);
  for (Label a : all_labels()) detail::set_column(m, 1 + a.index(), trope_class(a));
  return LatticeIsometry(std::move(m));
}

// Reflection about a root r (r^2 < 0): x -> x - 2 (x.r)/(r.r) r.
inline LatticeIsometry iso_reflection(const SurfaceClass& r) {
  Rat rr = pair(r, r);
  if (rr == 0) throw std::invalid_argument("iso_reflection: isotropic vector");
  RatMat m(kSurfaceRank, kSurfaceRank);
  for (std::size_t j = 0; j < kSurfaceRank; ++j) {
    RatVec e(kSurfaceRank, Rat(0));
    e[j] = 1;
    SurfaceClass basis = SurfaceClass::from_vec(e);
    SurfaceClass img = basis - (2 * pair(basis, r) / rr) * r;
    detail::set_column(m, j, img);
  }
  return LatticeIsometry(std::move(m));
}

// p_alpha: reflection about Lambda - 2 N_alpha (the projection from the
// node alpha).
inline LatticeIsometry iso_projection(Label alpha) {
  return iso_reflection(cls_proj_root(alpha));
}

// q_alpha = sigma p_alpha sigma (the correlation dual to p_alpha).
inline LatticeIsometry iso_correlation(Label alpha) {
  LatticeIsometry s = iso_switch();
  return s * iso_projection(alpha) * s;
}

// Relabeling by pi in S6: Lambda fixed, N_x -> N under the twisted node
// action (the permutation of nodes induced by relabeling the six branch
// points, which keeps the six nodes on T_0 at the labels i6).
inline LatticeIsometry iso_relabel(const S6& pi) {
  return detail::node_permutation_isometry([&pi](Label x) { return relabel_node(pi, x); });
}

// ---------------------------------------------------------------------------
// Hutchinson-Goepel involutions.

// Base tetrad used for the tabulated matrix; all other type-1 tetrads are
// reached by relabeling.
inline GopelTetrad hutchinson_base_tetrad() {
  return GopelTetrad{sorted(LabelSet<4>{Label::parse("46"), Label::parse("56"),
                                        Label::parse("14"), Label::parse("15")})};
}

// phi_{g0} for g0 = {46, 56, 14, 15}: Lambda -> 3 Lambda - 2 sum_{g0} N;
// N_beta -> Lambda - sum_{g0} N + N_beta for beta in g0; the remaining
// twelve nodal classes swap in pairs.
inline LatticeIsometry iso_hutchinson_base() {
  static const LatticeIsometry phi = [] {
    GopelTetrad g0 = hutchinson_base_tetrad();
    RatMat m(kSurfaceRank, kSurfaceRank);
    SurfaceClass lam_img;
    lam_img.lambda() = 3;
    for (Label a : g0.labels) lam_img.node(a) = -2;
    detail::set_column(m, 0, lam_img);
    for (Label b : g0.labels) {
      SurfaceClass img = cls_lambda();
      for (Label a : g0.labels) img.node(a) = -1;
      img.node(b) += 1;
      detail::set_column(m, 1 + b.index(), img);
    }
    const char* swaps[6][2] = {{"00", "23"}, {"16", "45"}, {"26", "12"},
                               {"36", "13"}, {"24", "25"}, {"34", "35"}};
    for (auto& sw : swaps) {
      Label a = Label::parse(sw[0]);
      Label b = Label::parse(sw[1]);
      detail::set_column(m, 1 + a.index(), cls_node(b));
      detail::set_column(m, 1 + b.index(), cls_node(a));
    }
    return LatticeIsometry(std::move(m));
  }();
  return phi;
}

// The translation attached to a type-1 tetrad: the sum of its two labels
// incident to T_0.
inline Label hutchinson_translation_label(const GopelTetrad& g) {
  std::vector<Label> on_t0;
  for (Label a : g.labels)
    if (a.index() < 6) on_t0.push_back(a);
  if (on_t0.size() != 2)
    throw std::invalid_argument("hutchinson_translation_label: type-1 tetrad required");
  return on_t0[0] + on_t0[1];
}

// First permutation in lexicographic order carrying the base tetrad to g
// under the node action.
inline S6 first_relabel_to(const GopelTetrad& g) {
  GopelTetrad g0 = hutchinson_base_tetrad();
  LabelSet<4> target = sorted(g.labels);
  for (const S6& pi : all_s6())
    if (relabel(pi, g0.labels) == target) return pi;
  throw std::invalid_argument("first_relabel_to: tetrad not in the type-1 orbit");
}

// z_g = phi_g t_{alpha(g)}: the relabeling-equivariant form of the
// Hutchinson-Goepel involution. For the base tetrad z = phi t_45; in general
// z_g = Pi z_{g0} Pi^{-1} with Pi the first relabeling carrying g0 to g.
inline LatticeIsometry iso_z(const GopelTetrad& g) {
  static const LatticeIsometry z0 =
      iso_hutchinson_base() * iso_translation(Label::parse("45"));
  GopelTetrad g0 = hutchinson_base_tetrad();
  if (sorted(g.labels) == sorted(g0.labels)) return z0;
  S6 pi = first_relabel_to(g);
  return iso_relabel(pi) * z0 * iso_relabel(pi.inverse());
}

// phi_g = z_g t_{alpha(g)} (t is an involution, so this inverts the
// definition of z_g). Unlike z_g, phi_g is not relabeling-equivariant.
inline LatticeIsometry iso_hutchinson(const GopelTetrad& g) {
  return iso_z(g) * iso_translation(hutchinson_translation_label(g));
}

// All 45 type-1 tetrads with their z matrices, cached.
inline const std::vector<std::pair<GopelTetrad, LatticeIsometry>>& all_z_isometries() {
  static const std::vector<std::pair<GopelTetrad, LatticeIsometry>> zs = [] {
    std::vector<std::pair<GopelTetrad, LatticeIsometry>> out;
    for (const GopelTetrad& g : enumerate_gopel())
      if (g.type() == 1) out.emplace_back(g, iso_z(g));
    return out;
  }();
  return zs;
}

// ---------------------------------------------------------------------------
// Finite group utilities.

// Closure of a generating set under composition; throws if the group
// exceeds cap elements.
inline std::vector<LatticeIsometry> group_closure(
    const std::vector<LatticeIsometry>& gens, std::size_t cap = 1024) {
  std::map<LatticeIsometry, bool> seen;  // value: already expanded
  seen.emplace(iso_identity(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto it = seen.begin(); it != seen.end(); ++it) {
      if (it->second) continue;
      it->second = true;
      for (const auto& g : gens) {
        LatticeIsometry prod = g * it->first;
        if (seen.emplace(std::move(prod), false).second) {
          grew = true;
          if (seen.size() > cap) throw std::runtime_error("group_closure: cap exceeded");
        }
      }
    }
  }
  std::vector<LatticeIsometry> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(kv.first);
  return out;
}

// The order-32 group generated by the sixteen translations and the switch
// (isomorphic to (Z/2)^5).
inline const std::vector<LatticeIsometry>& aut_dprime_group() {
  static const std::vector<LatticeIsometry> grp = [] {
    std::vector<LatticeIsometry> gens;
    for (const char* s : {"16", "26", "36", "46"}) gens.push_back(iso_translation(Label::parse(s)));
    gens.push_back(iso_switch());
    return group_closure(gens, 64);
  }();
  return grp;
}

inline std::vector<LatticeIsometry> stabilizer_of(
    const std::vector<LatticeIsometry>& group, const SurfaceClass& x) {
  std::vector<LatticeIsometry> out;
  for (const auto& g : group)
    if (g.apply(x) == x) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Gate for externally supplied matrices attached to type-1 Weber hexads.
// A candidate is accepted only if it passes every structural check; the
// library ships no such matrices itself.

struct KeumValidation {
  bool ok = false;
  std::vector<std::string> failures;
};

inline KeumValidation validate_keum(const WeberHexad& w, const LatticeIsometry& z) {
  KeumValidation v;
  auto fail = [&](const std::string& why) { v.failures.push_back(why); };

  if (w.type() != 1) {
    fail("hexad is not type 1, duality partner undefined");
    v.ok = false;
    return v;
  }
  WeberHexad wd = weber_dual(w);
  SurfaceClass rw = cls_r_weber(w);
  SurfaceClass rwd = cls_r_weber(wd);

  if (!z.is_gram_isometry()) fail("matrix does not preserve the intersection form");
  if (!z.preserves_integral_lattice()) fail("matrix does not map the integral lattice into itself");
  bool inverse_integral = true;
  try {
    inverse_integral = z.inverse().preserves_integral_lattice();
  } catch (const std::exception&) {
    inverse_integral = false;
  }
  if (!inverse_integral) fail("inverse does not map the integral lattice into itself");
  if (z.apply(cls_R()) != cls_R()) fail("matrix does not fix the trope class T_0");
  if (z.apply(cls_c()) != cls_c()) fail("matrix does not fix the class c");
  {
    SurfaceClass expect = cls_w_dblprime() + 3 * rw;
    if (z.apply(cls_w_dblprime()) != expect) fail("image of w'' is not w'' + 3 r_w");
  }
  if (z.apply(rwd) != -rw) fail("image of the dual hexad root is not -r_w");
  if ((z * z).is_identity()) fail("matrix is an involution, inconsistent with the required action");

  v.ok = v.failures.empty();
  return v;
}

}  // namespace kummer
