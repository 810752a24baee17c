#pragma once

// The chamber in the positive cone of the rank-17 lattice cut out, inside
// the orthogonal complement of span{R, c}, by nonnegativity against the 316
// wall classes: 16 nodal, 16 trope, 16 projection roots, 16 correlation
// roots, 60 Goepel roots, 192 Weber roots.
//
// All face computations run on the compact section {x . w'' = 1}: on the
// complement of span{R, c} the functional x . w'' equals x . Lambda, which
// is strictly positive on every nonzero point of the cone, so the section
// meets every ray exactly once. Dimensions reported below are cone
// dimensions (the full chamber has dimension 15; a facet has 14).

#include "kummer/isometry.hpp"
#include "kummer/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

struct Wall {
  std::string name;
  SurfaceClass cls;
};

namespace detail {

inline std::string label_set_name(const Label* begin, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += '.';
    s += begin[i].str();
  }
  return s;
}

}  // namespace detail

inline const std::vector<Wall>& chamber_walls() {
  static const std::vector<Wall> walls = [] {
    std::vector<Wall> out;
    out.reserve(316);
    for (Label a : all_labels()) out.push_back({"N:" + a.str(), cls_node(a)});
    for (Label a : all_labels()) out.push_back({"T:" + a.str(), trope_class(a)});
    for (Label a : all_labels()) out.push_back({"P:" + a.str(), cls_proj_root(a)});
    for (Label a : all_labels()) out.push_back({"Q:" + a.str(), cls_corr_root(a)});
    for (const GopelTetrad& g : enumerate_gopel()) {
      auto s = sorted(g.labels);
      out.push_back({"G:" + detail::label_set_name(s.data(), 4), cls_r_gopel(g)});
    }
    for (const WeberHexad& w : enumerate_weber().hexads) {
      auto s = sorted(w.labels);
      out.push_back({"W:" + detail::label_set_name(s.data(), 6), cls_r_weber(w)});
    }
    if (out.size() != 316) throw std::logic_error("chamber_walls: expected 316 walls");
    return out;
  }();
  return walls;
}

// The linear functional x -> pair(w, x) as a coordinate row.
inline RatVec pairing_row(const SurfaceClass& w) {
  RatVec row(kSurfaceRank);
  row[0] = 4 * w.c[0];
  for (std::size_t j = 1; j < kSurfaceRank; ++j) row[j] = -2 * w.c[j];
  return row;
}

// ---------------------------------------------------------------------------
// Membership.

struct MembershipReport {
  bool inside = false;
  std::vector<std::string> violations;
};

inline MembershipReport omega_membership(const SurfaceClass& u) {
  MembershipReport rep;
  if (pair(u, cls_R()) != 0) rep.violations.push_back("eq:R");
  if (pair(u, cls_c()) != 0) rep.violations.push_back("eq:c");
  for (const Wall& w : chamber_walls())
    if (sgn(pair(u, w.cls)) < 0) rep.violations.push_back(w.name);
  rep.inside = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Face analysis on the compact section.

struct FaceReport {
  std::string wall;
  bool nonempty = false;
  int dimension = -1;  // cone dimension; -1 when the face is just the origin
  std::vector<std::string> implied;  // other walls vanishing on the whole face
};

namespace detail {

// Equality rows common to every face LP: R, c and the section normalizer.
inline void face_equalities(const SurfaceClass& wall, std::size_t extra_cols, RatMat& E,
                            RatVec& f) {
  const std::size_t d = kSurfaceRank + extra_cols;
  E = RatMat(4, d);
  f = RatVec(4, Rat(0));
  RatVec rows[4] = {pairing_row(cls_R()), pairing_row(cls_c()), pairing_row(wall),
                    pairing_row(cls_w_dblprime())};
  for (int i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < kSurfaceRank; ++j) E(i, j) = rows[i][j];
  f[3] = 1;
}

}  // namespace detail

inline FaceReport face_report(const SurfaceClass& wall, const std::string& name) {
  FaceReport rep;
  rep.wall = name;
  const auto& walls = chamber_walls();
  const std::size_t m = walls.size();

  std::vector<RatVec> wall_rows;
  wall_rows.reserve(m);
  for (const Wall& w : walls) wall_rows.push_back(pairing_row(w.cls));
  RatVec this_row = pairing_row(wall);

  // Feasibility of the section slice.
  {
    RatMat A(m, kSurfaceRank);
    for (std::size_t i = 0; i < m; ++i) A.set_row(i, wall_rows[i]);
    RatMat E;
    RatVec f;
    detail::face_equalities(wall, 0, E, f);
    LpResult fe = lp_maximize(A, RatVec(m, Rat(0)), RatVec(kSurfaceRank, Rat(0)), E, f);
    if (fe.status != LpStatus::Optimal) return rep;  // empty: dimension -1
    rep.nonempty = true;
  }

  // Chebyshev step: maximize the minimum slack t over the candidate walls
  // (everything except the defining wall). A positive optimum certifies that
  // no candidate vanishes identically; otherwise only the walls tight at the
  // maximizing point can be implied equalities, and each gets its own LP.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < m; ++i)
    if (wall_rows[i] != this_row) candidates.push_back(i);

  std::vector<std::size_t> suspects;
  {
    const std::size_t d = kSurfaceRank + 1;
    RatMat A(candidates.size(), d);
    for (std::size_t r = 0; r < candidates.size(); ++r) {
      for (std::size_t j = 0; j < kSurfaceRank; ++j) A(r, j) = wall_rows[candidates[r]][j];
      A(r, kSurfaceRank) = -1;
    }
    RatMat E;
    RatVec f;
    detail::face_equalities(wall, 1, E, f);
    RatVec obj(d, Rat(0));
    obj[d - 1] = 1;
    LpResult ch = lp_maximize(A, RatVec(candidates.size(), Rat(0)), obj, E, f);
    if (ch.status != LpStatus::Optimal)
      throw std::logic_error("face_report: slack LP not optimal on a nonempty face");
    if (sgn(ch.value) > 0) {
      // all candidates positive somewhere
    } else {
      for (std::size_t r = 0; r < candidates.size(); ++r) {
        Rat s = 0;
        for (std::size_t j = 0; j < kSurfaceRank; ++j) s += wall_rows[candidates[r]][j] * ch.point[j];
        if (s == 0) suspects.push_back(candidates[r]);
      }
    }
  }

  std::vector<std::size_t> implied;
  if (!suspects.empty()) {
    RatMat A(m, kSurfaceRank);
    for (std::size_t i = 0; i < m; ++i) A.set_row(i, wall_rows[i]);
    RatMat E;
    RatVec f;
    detail::face_equalities(wall, 0, E, f);
    for (std::size_t idx : suspects) {
      LpResult mx = lp_maximize(A, RatVec(m, Rat(0)), wall_rows[idx], E, f);
      if (mx.status != LpStatus::Optimal)
        throw std::logic_error("face_report: wall maximum unbounded on compact section");
      if (mx.value == 0) implied.push_back(idx);
    }
  }
  for (std::size_t idx : implied) rep.implied.push_back(walls[idx].name);

  // Cone dimension: corank of the span of all functionals vanishing on the
  // face (R, c, the wall, and the implied walls).
  RatMat span(3 + implied.size(), kSurfaceRank);
  span.set_row(0, pairing_row(cls_R()));
  span.set_row(1, pairing_row(cls_c()));
  span.set_row(2, this_row);
  for (std::size_t r = 0; r < implied.size(); ++r) span.set_row(3 + r, wall_rows[implied[r]]);
  rep.dimension = static_cast<int>(kSurfaceRank) - static_cast<int>(rank(span));
  return rep;
}

inline FaceReport face_report(std::size_t wall_index) {
  const auto& walls = chamber_walls();
  if (wall_index >= walls.size()) throw std::invalid_argument("face_report: bad wall index");
  return face_report(walls[wall_index].cls, walls[wall_index].name);
}

// Representative walls covering each geometric type: a type-1 Goepel root
// (facet), projection roots at a node on T_0 and off it, a correlation
// root, a type-2 Goepel root, a type-2 Weber root.
inline std::vector<std::size_t> representative_wall_indices() {
  const auto& walls = chamber_walls();
  auto find_name = [&](const std::string& n) -> std::size_t {
    for (std::size_t i = 0; i < walls.size(); ++i)
      if (walls[i].name == n) return i;
    throw std::logic_error("representative_wall_indices: missing wall " + n);
  };
  std::vector<std::size_t> out;
  {
    auto g0 = hutchinson_base_tetrad();
    auto s = sorted(g0.labels);
    out.push_back(find_name("G:" + detail::label_set_name(s.data(), 4)));
  }
  out.push_back(find_name("P:00"));
  out.push_back(find_name("P:12"));
  out.push_back(find_name("Q:00"));
  for (const GopelTetrad& g : enumerate_gopel())
    if (g.type() == 2) {
      auto s = sorted(g.labels);
      out.push_back(find_name("G:" + detail::label_set_name(s.data(), 4)));
      break;
    }
  for (const WeberHexad& w : enumerate_weber().hexads)
    if (w.type() == 2) {
      auto s = sorted(w.labels);
      out.push_back(find_name("W:" + detail::label_set_name(s.data(), 6)));
      break;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Span certificate: 21 chamber points (the six C_i and the fifteen F_g over
// type-2 tetrads) of rank 15, matching the corank of {R, c}, so the chamber
// is full-dimensional in the complement of span{R, c}.

struct DimensionCertificate {
  bool ok = false;
  int rank = 0;
  std::vector<std::string> failures;
};

inline DimensionCertificate dimension_certificate() {
  DimensionCertificate cert;
  std::vector<std::pair<std::string, SurfaceClass>> pts;
  for (int i = 1; i <= 6; ++i) pts.emplace_back("C_" + std::to_string(i), cls_C(i));
  for (const GopelTetrad& g : enumerate_gopel())
    if (g.type() == 2) {
      auto s = sorted(g.labels);
      pts.emplace_back("F[" + detail::label_set_name(s.data(), 4) + "]", cls_F(g));
    }
  RatMat span(pts.size(), kSurfaceRank);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto mem = omega_membership(pts[i].second);
    if (!mem.inside) cert.failures.push_back(pts[i].first + " outside the chamber");
    span.set_row(i, pts[i].second.vec());
  }
  cert.rank = static_cast<int>(rank(span));
  if (cert.rank != 15) cert.failures.push_back("span rank " + std::to_string(cert.rank));
  cert.ok = cert.failures.empty();
  return cert;
}

// ---------------------------------------------------------------------------
// Homing: greedy descent of u . w'' by the involutions z_g (optionally
// augmented with validated external generators) until the chamber absorbs
// the class or no generator improves it.

struct HomingResult {
  bool admissible = false;  // input satisfied the pre-checks
  bool success = false;     // terminated inside the chamber
  std::vector<std::string> word;  // generators applied, in application order
  SurfaceClass final_class;
  Rat final_value;
  std::vector<std::string> notes;
};

inline HomingResult home_to_chamber(
    SurfaceClass u,
    const std::vector<std::pair<std::string, LatticeIsometry>>& extra_generators = {},
    std::size_t max_steps = 10000) {
  HomingResult res;
  if (pair(u, cls_R()) != 0) res.notes.push_back("u . R nonzero");
  if (pair(u, cls_c()) != 0) res.notes.push_back("u . c nonzero");
  if (sgn(pair(u, u)) <= 0) res.notes.push_back("u . u not positive");
  SurfaceClass wd = cls_w_dblprime();
  if (sgn(pair(u, wd)) <= 0) res.notes.push_back("u . w'' not positive");
  if (!res.notes.empty()) return res;
  res.admissible = true;

  std::vector<std::pair<std::string, LatticeIsometry>> gens;
  for (const auto& [g, z] : all_z_isometries()) {
    auto s = sorted(g.labels);
    gens.emplace_back("z[" + detail::label_set_name(s.data(), 4) + "]", z);
  }
  for (const auto& e : extra_generators) gens.push_back(e);

  Rat value = pair(u, wd);
  for (std::size_t step = 0; step < max_steps; ++step) {
    Rat best = value;
    std::size_t best_idx = gens.size();
    SurfaceClass best_img;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      SurfaceClass img = gens[i].second.apply(u);
      Rat v = pair(img, wd);
      if (v < best) {
        best = v;
        best_idx = i;
        best_img = img;
      }
    }
    if (best_idx == gens.size()) break;
    u = best_img;
    value = best;
    res.word.push_back(gens[best_idx].first);
  }

  res.final_class = u;
  res.final_value = value;
  auto mem = omega_membership(u);
  res.success = mem.inside;
  if (!res.success)
    res.notes.push_back("descent stalled outside the chamber (first violation: " +
                        (mem.violations.empty() ? std::string("none") : mem.violations.front()) +
                        ")");
  return res;
}

}  // namespace kummer
