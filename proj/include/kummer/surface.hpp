#pragma once

// The rank-17 sublattice of the Picard group of a (16,6) nodal Kummer
// quartic spanned over Q by the hyperplane class Lambda and the sixteen
// nodal classes N_alpha. Gram form: Lambda^2 = 4, N_alpha^2 = -2, all other
// products of basis elements 0; signature (1,16).
//
// Coordinates: index 0 is the Lambda coefficient, indices 1..16 follow the
// canonical label order of labels.hpp.

#include "kummer/configuration.hpp"
#include "kummer/linalg.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

constexpr std::size_t kSurfaceRank = 17;

struct SurfaceClass {
  std::array<Rat, kSurfaceRank> c{};

  Rat& lambda() { return c[0]; }
  const Rat& lambda() const { return c[0]; }
  Rat& node(Label a) { return c[1 + a.index()]; }
  const Rat& node(Label a) const { return c[1 + a.index()]; }

  SurfaceClass& operator+=(const SurfaceClass& o) {
    for (std::size_t i = 0; i < kSurfaceRank; ++i) c[i] += o.c[i];
    return *this;
  }
  SurfaceClass& operator-=(const SurfaceClass& o) {
    for (std::size_t i = 0; i < kSurfaceRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  SurfaceClass& operator*=(const Rat& s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
  friend SurfaceClass operator-(SurfaceClass a, const SurfaceClass& b) { return a -= b; }
  friend SurfaceClass operator*(const Rat& s, SurfaceClass a) { return a *= s; }
  friend SurfaceClass operator-(SurfaceClass a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) { return a.c == b.c; }
  friend bool operator!=(const SurfaceClass& a, const SurfaceClass& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  RatVec vec() const { return RatVec(c.begin(), c.end()); }

  static SurfaceClass from_vec(const RatVec& v) {
    if (v.size() != kSurfaceRank)
      throw std::invalid_argument("SurfaceClass: expected 17 coordinates");
    SurfaceClass x;
    std::copy(v.begin(), v.end(), x.c.begin());
    return x;
  }
};

inline const RatMat& surface_gram() {
  static const RatMat g = [] {
    RatMat m(kSurfaceRank, kSurfaceRank);
    m(0, 0) = 4;
    for (std::size_t i = 1; i < kSurfaceRank; ++i) m(i, i) = -2;
    return m;
  }();
  return g;
}

inline Rat pair(const SurfaceClass& x, const SurfaceClass& y) {
  Rat s = 4 * x.c[0] * y.c[0];
  for (std::size_t i = 1; i < kSurfaceRank; ++i) s -= 2 * x.c[i] * y.c[i];
  return s;
}

// ---------------------------------------------------------------------------
// Named classes.

inline SurfaceClass cls_lambda() {
  SurfaceClass x;
  x.lambda() = 1;
  return x;
}

inline SurfaceClass cls_node(Label a) {
  SurfaceClass x;
  x.node(a) = 1;
  return x;
}

// T_beta = (Lambda - sum_{alpha in I(T_beta)} N_alpha) / 2.
inline SurfaceClass trope_class(Label beta) {
  SurfaceClass x;
  x.lambda() = rat(1, 2);
  for (Label a : trope_incidence(beta)) x.node(a) = rat(-1, 2);
  return x;
}

inline SurfaceClass cls_R() { return trope_class(Label::zero()); }

// c = 2 Lambda - sum_alpha N_alpha; fixed by translations and the
// Hutchinson-Goepel involutions, negated by the switch.
inline SurfaceClass cls_c() {
  SurfaceClass x;
  x.lambda() = 2;
  for (Label a : all_labels()) x.node(a) = -1;
  return x;
}

// b = (3 Lambda - sum_{i=1}^{6} N_i6 - 2 sum_{1<=i<j<=5} N_ij) / 2, with
// N_66 = N_0; satisfies b = c - R.
inline SurfaceClass cls_b() {
  SurfaceClass x;
  x.lambda() = rat(3, 2);
  for (int i = 0; i < 6; ++i) x.node(Label::from_index(i)) = rat(-1, 2);
  for (int i = 6; i < 16; ++i) x.node(Label::from_index(i)) = -1;
  return x;
}

// w' = (sum N_alpha + sum T_alpha) / 4 = 2 Lambda - (1/2) sum N_alpha.
inline SurfaceClass cls_w_prime() {
  SurfaceClass x;
  x.lambda() = 2;
  for (Label a : all_labels()) x.node(a) = rat(-1, 2);
  return x;
}

// w'' = (13 Lambda - 3 sum N_alpha + 4 R) / 7: the orthogonal projection of
// w' onto the orthogonal complement of span{b, R}.
inline SurfaceClass cls_w_dblprime() {
  SurfaceClass x = cls_lambda();
  x *= 13;
  for (Label a : all_labels()) x.node(a) += -3;
  SurfaceClass r = cls_R();
  r *= 4;
  x += r;
  x *= rat(1, 7);
  return x;
}

// r_g = Lambda - sum_{alpha in g} N_alpha (square -4).
inline SurfaceClass cls_r_gopel(const GopelTetrad& g) {
  SurfaceClass x = cls_lambda();
  for (Label a : g.labels) x.node(a) = -1;
  return x;
}

// r_w = 3 Lambda - 2 sum_{alpha in w} N_alpha (square -12).
inline SurfaceClass cls_r_weber(const WeberHexad& w) {
  SurfaceClass x;
  x.lambda() = 3;
  for (Label a : w.labels) x.node(a) = -2;
  return x;
}

// Projection root Lambda - 2 N_alpha (square -4).
inline SurfaceClass cls_proj_root(Label alpha) {
  SurfaceClass x = cls_lambda();
  x.node(alpha) = -2;
  return x;
}

// Correlation root sigma(Lambda - 2 N_alpha) = 3 Lambda - sum N - 2 T_alpha.
inline SurfaceClass cls_corr_root(Label alpha) {
  SurfaceClass x;
  x.lambda() = 3;
  for (Label a : all_labels()) x.node(a) = -1;
  SurfaceClass t = trope_class(alpha);
  t *= 2;
  x -= t;
  return x;
}

// C_i = 5 Lambda - 5 N_i6 - sum_{alpha != i6} N_alpha, i in 1..6 (N_66 = N_0):
// a boundary class of the chamber lying on the wall (Lambda - 2 N_i6)-perp.
inline SurfaceClass cls_C(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("cls_C: index in 1..6");
  Label i6 = (i == 6) ? Label::zero() : Label::pair(i, 6);
  SurfaceClass x;
  x.lambda() = 5;
  for (Label a : all_labels()) x.node(a) = (a == i6) ? -5 : -1;
  return x;
}

// F_g = 6 Lambda - 2 sum_{i=1}^{6} N_i6 - 3 sum_{alpha in g} N_alpha for a
// type-2 Goepel tetrad g: a boundary class on the wall r_g-perp.
inline SurfaceClass cls_F(const GopelTetrad& g) {
  if (g.type() != 2) throw std::invalid_argument("cls_F: type-2 tetrad required");
  SurfaceClass x;
  x.lambda() = 6;
  for (int i = 0; i < 6; ++i) x.node(Label::from_index(i)) = -2;
  for (Label a : g.labels) x.node(a) = -3;
  return x;
}

// ---------------------------------------------------------------------------
// Integrality: membership in the Z-span of the 16 nodal classes and the 16
// trope classes. Tested against a precomputed column Hermite normal form of
// the doubled generator matrix (all generators lie in (1/2)Z^17).

inline const IntMat& integral_lattice_hnf() {
  static const IntMat h = [] {
    IntMat gen(kSurfaceRank, 32);
    auto put = [&](std::size_t col, const SurfaceClass& x) {
      for (std::size_t i = 0; i < kSurfaceRank; ++i) {
        Rat twice = 2 * x.c[i];
        if (twice.get_den() != 1) throw std::logic_error("generator not half-integral");
        gen(i, col) = twice.get_num();
      }
    };
    for (int i = 0; i < 16; ++i) put(i, cls_node(Label::from_index(i)));
    for (int i = 0; i < 16; ++i) put(16 + i, trope_class(Label::from_index(i)));
    return hnf_columns(gen);
  }();
  return h;
}

inline bool is_integral(const SurfaceClass& x) {
  std::vector<Int> y(kSurfaceRank);
  for (std::size_t i = 0; i < kSurfaceRank; ++i) {
    Rat twice = 2 * x.c[i];
    if (twice.get_den() != 1) return false;
    y[i] = twice.get_num();
  }
  return hnf_contains(integral_lattice_hnf(), y);
}

// ---------------------------------------------------------------------------
// The rank-2 sublattice B = span{b, R} and its (-2)-classes.
//
// A class (v/2) c + t R has square -2(2v^2 + tv + t^2); the form is positive
// definite, forcing |v| <= 1 and |t| <= 1, and the only solutions of
// 2v^2 + tv + t^2 = 1 are (v, t) = (0, +-1), i.e. the classes +-R.

inline std::vector<SurfaceClass> neg2_classes_in_B() {
  std::vector<SurfaceClass> out;
  for (int v = -1; v <= 1; ++v)
    for (int t = -1; t <= 1; ++t) {
      if (2 * v * v + t * v + t * t != 1) continue;
      SurfaceClass x = cls_c();
      x *= rat(v, 2);
      SurfaceClass r = cls_R();
      r *= t;
      x += r;
      out.push_back(x);
    }
  return out;
}

inline Inertia surface_signature() { return congruence_inertia(surface_gram()); }

// ---------------------------------------------------------------------------
// Serialization.

inline std::vector<std::string> surface_strs(const SurfaceClass& x) {
  std::vector<std::string> out;
  out.reserve(kSurfaceRank);
  for (const auto& q : x.c) out.push_back(rat_str(q));
  return out;
}

inline SurfaceClass surface_parse(const std::vector<std::string>& v) {
  if (v.size() != kSurfaceRank)
    throw std::invalid_argument("surface_parse: expected 17 entries");
  SurfaceClass x;
  for (std::size_t i = 0; i < kSurfaceRank; ++i) x.c[i] = rat_parse(v[i]);
  return x;
}

}  // namespace kummer
