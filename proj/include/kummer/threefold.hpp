#pragma once

// The rank-22 divisor class group of the blow-up of P^3 at the six vertices
// of a complete quadrilateral frame and the fifteen lines joining them.
// Basis: H (hyperplane), E_0..E_5 (point divisors), E_ij (line divisors,
// 0 <= i < j <= 5, lexicographic).
//
// Restriction to the quartic surface identifies E_p with a nodal class and
// E_pq with a trope class; point indices 0..5 match branch indices 6,1..5.

#include "kummer/isometry.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kummer {

constexpr std::size_t kThreefoldRank = 22;

inline int line_pos(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 5 || i == j) throw std::invalid_argument("line_pos: need 0 <= i < j <= 5");
  static constexpr int base[5] = {0, 5, 9, 12, 14};
  return base[i] + (j - i - 1);
}

struct ThreefoldClass {
  std::array<Rat, kThreefoldRank> c{};

  Rat& h() { return c[0]; }
  const Rat& h() const { return c[0]; }
  Rat& e(int i) { return c[1 + i]; }
  const Rat& e(int i) const { return c[1 + i]; }
  Rat& e(int i, int j) { return c[7 + line_pos(i, j)]; }
  const Rat& e(int i, int j) const { return c[7 + line_pos(i, j)]; }

  ThreefoldClass& operator+=(const ThreefoldClass& o) {
    for (std::size_t i = 0; i < kThreefoldRank; ++i) c[i] += o.c[i];
    return *this;
  }
  ThreefoldClass& operator-=(const ThreefoldClass& o) {
    for (std::size_t i = 0; i < kThreefoldRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  ThreefoldClass& operator*=(const Rat& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend ThreefoldClass operator+(ThreefoldClass a, const ThreefoldClass& b) { return a += b; }
  friend ThreefoldClass operator-(ThreefoldClass a, const ThreefoldClass& b) { return a -= b; }
  friend ThreefoldClass operator*(const Rat& s, ThreefoldClass a) { return a *= s; }
  friend bool operator==(const ThreefoldClass& a, const ThreefoldClass& b) { return a.c == b.c; }
  friend bool operator!=(const ThreefoldClass& a, const ThreefoldClass& b) { return !(a == b); }

  RatVec vec() const { return RatVec(c.begin(), c.end()); }
  static ThreefoldClass from_vec(const RatVec& v) {
    if (v.size() != kThreefoldRank)
      throw std::invalid_argument("ThreefoldClass: expected 22 coordinates");
    ThreefoldClass x;
    std::copy(v.begin(), v.end(), x.c.begin());
    return x;
  }
};

inline ThreefoldClass cls3_H() {
  ThreefoldClass x;
  x.h() = 1;
  return x;
}
inline ThreefoldClass cls3_E(int i) {
  ThreefoldClass x;
  x.e(i) = 1;
  return x;
}
inline ThreefoldClass cls3_E(int i, int j) {
  ThreefoldClass x;
  x.e(i, j) = 1;
  return x;
}

// K = -4H + 2 sum E_i + sum E_ij.
inline ThreefoldClass canonical_class() {
  ThreefoldClass x;
  x.h() = -4;
  for (int i = 0; i < 6; ++i) x.e(i) = 2;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) x.e(i, j) = 1;
  return x;
}

// ---------------------------------------------------------------------------
// Dictionary between lattice labels and blow-up indices. Point p corresponds
// to branch index w(p), with w(0) = 6 and w(i) = i; the node of point p is
// the label {w(p), 6} (so p = 0 gives the zero label) and the trope of line
// pq is the label {w(p), w(q)}.

inline int branch_of_point(int p) {
  if (p < 0 || p > 5) throw std::invalid_argument("branch_of_point: index in 0..5");
  return p == 0 ? 6 : p;
}
inline int point_of_branch(int w) {
  if (w < 1 || w > 6) throw std::invalid_argument("point_of_branch: index in 1..6");
  return w == 6 ? 0 : w;
}

inline Label node_of_point(int p) {
  int w = branch_of_point(p);
  return w == 6 ? Label::zero() : Label::pair(w, 6);
}
inline int point_of_node(Label a) {
  if (a == Label::zero()) return 0;
  if (a.index() >= 6) throw std::invalid_argument("point_of_node: label not on T_0");
  auto [i, j] = a.indices();
  return point_of_branch(j == 6 ? i : j);
}

inline Label trope_of_line(int p, int q) {
  return Label::pair(branch_of_point(p), branch_of_point(q));
}
inline std::pair<int, int> line_of_trope(Label beta) {
  if (beta == Label::zero()) throw std::invalid_argument("line_of_trope: zero label");
  auto [i, j] = beta.indices();
  int p = point_of_branch(i), q = point_of_branch(j);
  if (p > q) std::swap(p, q);
  return {p, q};
}

// ---------------------------------------------------------------------------
// Restriction to the surface lattice.

inline SurfaceClass restrict_class(const ThreefoldClass& x) {
  SurfaceClass out;
  // H restricts to (3 Lambda - sum_{1<=i<j<=5} N_ij) / 2.
  SurfaceClass h_img;
  h_img.lambda() = rat(3, 2);
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) h_img.node(Label::pair(i, j)) = rat(-1, 2);
  out += x.h() * h_img;
  for (int p = 0; p < 6; ++p) out += x.e(p) * cls_node(node_of_point(p));
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q) out += x.e(p, q) * trope_class(trope_of_line(p, q));
  return out;
}

// ---------------------------------------------------------------------------
// The quintic class attached to a type-1 Goepel tetrad:
// D_g = 5H - 2 sum E_i - 2 sum_{beta in g'} E_{line(beta)}.

inline ThreefoldClass d_class(const GopelTetrad& g) {
  if (g.type() != 1) throw std::invalid_argument("d_class: type-1 tetrad required");
  GopelTetrad gc = gopel_complement(g);
  ThreefoldClass x;
  x.h() = 5;
  for (int i = 0; i < 6; ++i) x.e(i) = -2;
  for (Label b : gc.labels) {
    auto [p, q] = line_of_trope(b);
    x.e(p, q) = -2;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Linear maps of the rank-22 lattice.

struct ThreefoldMap {
  RatMat m;

  ThreefoldMap() : m(RatMat::identity(kThreefoldRank)) {}
  explicit ThreefoldMap(RatMat mat) : m(std::move(mat)) {
    if (m.rows() != kThreefoldRank || m.cols() != kThreefoldRank)
      throw std::invalid_argument("ThreefoldMap: 22x22 matrix required");
  }

  ThreefoldClass apply(const ThreefoldClass& x) const {
    return ThreefoldClass::from_vec(m * x.vec());
  }
  ThreefoldMap inverse() const {
    auto inv = kummer::inverse(m);
    if (!inv) throw std::invalid_argument("ThreefoldMap: singular matrix");
    return ThreefoldMap(*inv);
  }
  friend ThreefoldMap operator*(const ThreefoldMap& f, const ThreefoldMap& g) {
    return ThreefoldMap(f.m * g.m);
  }
  friend bool operator==(const ThreefoldMap& a, const ThreefoldMap& b) { return a.m == b.m; }
  friend bool operator!=(const ThreefoldMap& a, const ThreefoldMap& b) { return !(a == b); }
  bool is_identity() const { return m == RatMat::identity(kThreefoldRank); }
};

namespace detail {
inline void set_column3(RatMat& m, std::size_t j, const ThreefoldClass& x) {
  for (std::size_t i = 0; i < kThreefoldRank; ++i) m(i, j) = x.c[i];
}
}  // namespace detail

// P_pi: H fixed, points and lines permuted through the branch dictionary.
inline ThreefoldMap map_relabel(const S6& pi) {
  RatMat m(kThreefoldRank, kThreefoldRank);
  m(0, 0) = 1;
  auto img = [&](int p) { return point_of_branch(pi(branch_of_point(p))); };
  for (int p = 0; p < 6; ++p) m(1 + img(p), 1 + p) = 1;
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      m(7 + line_pos(img(p), img(q)), 7 + line_pos(p, q)) = 1;
  return ThreefoldMap(std::move(m));
}

// Phi for the base tetrad g0 = {46, 56, 14, 15}, with complement
// g0' = {26, 36, 12, 13} giving the lines 02, 03, 12, 13.
inline ThreefoldMap phi_base() {
  static const ThreefoldMap phi = [] {
    RatMat m(kThreefoldRank, kThreefoldRank);
    const int gl[4][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};  // lines of g0'
    auto sum_gprime = [&](ThreefoldClass& x, const Rat& s) {
      for (auto& pq : gl) x.e(pq[0], pq[1]) += s;
    };
    // H -> D = 5H - 2 sum E_i - 2 sum_{g0'} E.
    {
      ThreefoldClass d;
      d.h() = 5;
      for (int i = 0; i < 6; ++i) d.e(i) = -2;
      sum_gprime(d, -2);
      detail::set_column3(m, 0, d);
    }
    auto put_point = [&](int p, const ThreefoldClass& x) { detail::set_column3(m, 1 + p, x); };
    auto put_line = [&](int p, int q, const ThreefoldClass& x) {
      detail::set_column3(m, 7 + line_pos(p, q), x);
    };
    // E_0 <-> E_1, E_2 <-> E_3.
    put_point(0, cls3_E(1));
    put_point(1, cls3_E(0));
    put_point(2, cls3_E(3));
    put_point(3, cls3_E(2));
    // E_4 -> F_5, E_5 -> F_4 with F_k = 2H - sum E_i + E_k - sum_{g0'} E.
    auto f_class = [&](int k) {
      ThreefoldClass f;
      f.h() = 2;
      for (int i = 0; i < 6; ++i) f.e(i) = -1;
      f.e(k) += 1;
      sum_gprime(f, -1);
      return f;
    };
    put_point(4, f_class(5));
    put_point(5, f_class(4));
    // E_02 -> H_13 etc., with H_pq = 2H - sum E_i - sum_{g0'} E + E_pq.
    auto h_class = [&](int p, int q) {
      ThreefoldClass h;
      h.h() = 2;
      for (int i = 0; i < 6; ++i) h.e(i) = -1;
      sum_gprime(h, -1);
      h.e(p, q) += 1;
      return h;
    };
    put_line(0, 2, h_class(1, 3));
    put_line(0, 3, h_class(1, 2));
    put_line(1, 2, h_class(0, 3));
    put_line(1, 3, h_class(0, 2));
    // Swapped line pairs.
    const int swaps[4][4] = {{0, 4, 1, 5}, {0, 5, 1, 4}, {2, 4, 3, 5}, {3, 4, 2, 5}};
    for (auto& s : swaps) {
      put_line(s[0], s[1], cls3_E(s[2], s[3]));
      put_line(s[2], s[3], cls3_E(s[0], s[1]));
    }
    // Fixed lines.
    for (auto& pq : {std::pair{0, 1}, std::pair{2, 3}, std::pair{4, 5}})
      put_line(pq.first, pq.second, cls3_E(pq.first, pq.second));
    return ThreefoldMap(std::move(m));
  }();
  return phi;
}

// Phi_g = P_pi Phi_{g0} P_pi^{-1}, with the same first relabeling as the
// surface-side z_g, so the two transports stay compatible.
inline ThreefoldMap map_phi(const GopelTetrad& g) {
  if (g.type() != 1) throw std::invalid_argument("map_phi: type-1 tetrad required");
  if (sorted(g.labels) == sorted(hutchinson_base_tetrad().labels)) return phi_base();
  S6 pi = first_relabel_to(g);
  return map_relabel(pi) * phi_base() * map_relabel(pi.inverse());
}

// restrict(Phi_g(x)) == z_g(restrict(x)) on every basis class.
struct CompatibilityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

inline CompatibilityReport compatibility_check(const GopelTetrad& g) {
  CompatibilityReport rep;
  ThreefoldMap phi = map_phi(g);
  LatticeIsometry z = iso_z(g);
  auto check = [&](const ThreefoldClass& x, const std::string& name) {
    if (restrict_class(phi.apply(x)) != z.apply(restrict_class(x))) {
      rep.ok = false;
      rep.failures.push_back(name);
    }
  };
  check(cls3_H(), "H");
  for (int p = 0; p < 6; ++p) check(cls3_E(p), "E_" + std::to_string(p));
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      check(cls3_E(p, q), "E_" + std::to_string(p) + std::to_string(q));
  return rep;
}

}  // namespace kummer
