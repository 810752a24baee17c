#pragma once

// Goepel tetrads and Weber hexads of the (16,6) configuration, their types
// relative to the distinguished trope T_0, complements, and duality.
//
// A Goepel tetrad is a 4-element subset with no three nodes on a common
// trope; equivalently it meets every incidence set I(T_beta) in 0 or 2
// nodes. A Weber hexad is a 6-element subset with no four nodes on a common
// trope and no four forming a Goepel tetrad; it meets every I(T_beta) in 1
// or 3 nodes. Type 1 / type 2 records |. intersect I(T_0)| = 2/0 resp. 3/1.

#include "kummer/labels.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace kummer {

template <std::size_t N>
using LabelSet = std::array<Label, N>;

template <std::size_t N>
inline LabelSet<N> sorted(LabelSet<N> s) {
  std::sort(s.begin(), s.end());
  return s;
}

template <std::size_t N>
inline int meet_t0(const LabelSet<N>& s) {
  int c = 0;
  for (Label a : s)
    if (a.index() <= 5) ++c;  // I(T_0) is exactly the first six canonical labels
  return c;
}

struct GopelTetrad {
  LabelSet<4> labels;  // sorted canonically
  int type() const {
    int m = meet_t0(labels);
    if (m == 2) return 1;
    if (m == 0) return 2;
    throw std::logic_error("GopelTetrad: bad meet with I(T_0)");
  }
  bool operator==(const GopelTetrad& o) const { return labels == o.labels; }
  bool operator<(const GopelTetrad& o) const { return labels < o.labels; }
};

struct WeberHexad {
  LabelSet<6> labels;  // sorted canonically
  int type() const {
    int m = meet_t0(labels);
    if (m == 3) return 1;
    if (m == 1) return 2;
    throw std::logic_error("WeberHexad: bad meet with I(T_0)");
  }
  bool operator==(const WeberHexad& o) const { return labels == o.labels; }
  bool operator<(const WeberHexad& o) const { return labels < o.labels; }
};

namespace detail {

inline void push_gopel(std::set<GopelTetrad>& out, Label a, Label b, Label c, Label d) {
  out.insert(GopelTetrad{sorted(LabelSet<4>{a, b, c, d})});
}

}  // namespace detail

// All 60 Goepel tetrads from the closed-form patterns:
//   type 1: {0, i6, jk, lm} and {i6, j6, ik, jk};  type 2: {ik, il, jk, jl},
// indices ranging over {1..5}.
inline const std::vector<GopelTetrad>& enumerate_gopel() {
  static const std::vector<GopelTetrad> table = [] {
    std::set<GopelTetrad> out;
    for (int i = 1; i <= 5; ++i) {
      int rest[4], n = 0;
      for (int x = 1; x <= 5; ++x)
        if (x != i) rest[n++] = x;
      // {0, i6, jk, lm}: split the remaining four indices into two pairs.
      static const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (auto& sp : splits)
        detail::push_gopel(out, Label::zero(), Label::pair(i, 6),
                           Label::pair(rest[sp[0]], rest[sp[1]]),
                           Label::pair(rest[sp[2]], rest[sp[3]]));
    }
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) {
          if (k == i || k == j) continue;
          detail::push_gopel(out, Label::pair(i, 6), Label::pair(j, 6),
                             Label::pair(std::min(i, k), std::max(i, k)),
                             Label::pair(std::min(j, k), std::max(j, k)));
        }
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k)
          for (int l = k + 1; l <= 5; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            if (i > k) continue;  // {i,j} vs {k,l} unordered
            detail::push_gopel(out, Label::pair(i, k), Label::pair(i, l),
                               Label::pair(j, k), Label::pair(j, l));
          }
    return std::vector<GopelTetrad>(out.begin(), out.end());
  }();
  return table;
}

inline bool is_gopel(const LabelSet<4>& s) {
  for (Label beta : all_labels()) {
    auto inc = trope_incidence(beta);
    int c = 0;
    for (Label a : s)
      for (Label b : inc)
        if (a == b) ++c;
    if (c != 0 && c != 2) return false;
  }
  return true;
}

inline std::optional<GopelTetrad> find_gopel(const LabelSet<4>& s) {
  GopelTetrad g{sorted(s)};
  const auto& all = enumerate_gopel();
  auto it = std::lower_bound(all.begin(), all.end(), g);
  if (it != all.end() && *it == g) return g;
  return std::nullopt;
}

// The paired tetrad g' of a type-1 Goepel tetrad:
//   g = {0, i6, jk, lm}    ->  g' = {jl, jm, kl, km}
//   g = {i6, j6, ik, jk}   ->  g' = {l6, m6, kl, km}
// with {i,j,k,l,m} = {1..5}. Rejects type-2 input.
inline GopelTetrad gopel_complement(const GopelTetrad& g) {
  if (g.type() != 1)
    throw std::invalid_argument("gopel_complement: defined for type-1 tetrads only");
  std::vector<Label> on;   // labels in I(T_0)
  std::vector<Label> off;  // pair labels within {1..5}
  for (Label a : g.labels)
    (a.index() <= 5 ? on : off).push_back(a);
  LabelSet<4> out;
  if (on[0].is_zero() || on[1].is_zero()) {
    // {0, i6, jk, lm}: g' = pairs with one index from {j,k}, one from {l,m}.
    auto [j, k] = off[0].indices();
    auto [l, m] = off[1].indices();
    out = {Label::pair(std::min(j, l), std::max(j, l)),
           Label::pair(std::min(j, m), std::max(j, m)),
           Label::pair(std::min(k, l), std::max(k, l)),
           Label::pair(std::min(k, m), std::max(k, m))};
  } else {
    // {i6, j6, ik, jk}: shared index k, leftovers {l, m}.
    auto [a1, a2] = off[0].indices();
    auto [b1, b2] = off[1].indices();
    int k = (a1 == b1 || a1 == b2) ? a1 : a2;
    bool used[6] = {};
    for (Label a : g.labels)
      if (!a.is_zero()) {
        auto [x, y] = a.indices();
        if (x <= 5) used[x - 1] = true;
        if (y <= 5) used[y - 1] = true;
      }
    int lm[2], n = 0;
    for (int x = 1; x <= 5; ++x)
      if (!used[x - 1]) lm[n++] = x;
    out = {Label::pair(lm[0], 6), Label::pair(lm[1], 6),
           Label::pair(std::min(k, lm[0]), std::max(k, lm[0])),
           Label::pair(std::min(k, lm[1]), std::max(k, lm[1]))};
  }
  return GopelTetrad{sorted(out)};
}

// ---------------------------------------------------------------------------
// Weber hexads.

inline bool is_weber(const LabelSet<6>& s) {
  for (Label beta : all_labels()) {
    auto inc = trope_incidence(beta);
    int c = 0;
    for (Label a : s)
      for (Label b : inc)
        if (a == b) ++c;
    if (c > 3) return false;
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d)
          if (find_gopel({s[a], s[b], s[c], s[d]})) return false;
  return true;
}

struct WeberEnumeration {
  std::vector<WeberHexad> hexads;                 // all 192, canonical order
  std::vector<std::pair<int, int>> dual_pairs;    // 60 index pairs among type 1
};

// Duality on type-1 hexads: w and w' are dual when their symmetric
// difference is I(T_0). Closed forms: {0,i6,j6,ik,kl,lj} <-> {k6,l6,m6,ik,kl,lj}.
inline WeberHexad weber_dual(const WeberHexad& w) {
  if (w.type() != 1)
    throw std::invalid_argument("weber_dual: defined for type-1 hexads only");
  std::vector<Label> out;
  auto in_w = [&](Label a) {
    for (Label b : w.labels)
      if (a == b) return true;
    return false;
  };
  for (Label a : w.labels)
    if (a.index() > 5) out.push_back(a);
  for (int i = 0; i < 6; ++i) {
    Label a = Label::from_index(i);
    if (!in_w(a)) out.push_back(a);
  }
  if (out.size() != 6) throw std::logic_error("weber_dual: bad symmetric difference");
  LabelSet<6> arr;
  std::copy(out.begin(), out.end(), arr.begin());
  return WeberHexad{sorted(arr)};
}

inline const WeberEnumeration& enumerate_weber() {
  static const WeberEnumeration table = [] {
    std::set<WeberHexad> out;
    auto add = [&](std::initializer_list<Label> ls) {
      LabelSet<6> a;
      std::copy(ls.begin(), ls.end(), a.begin());
      out.insert(WeberHexad{sorted(a)});
    };
    auto P = [](int i, int j) { return Label::pair(std::min(i, j), std::max(i, j)); };
    // Type 1: {0, i6, j6, ik, kl, lj} and {i6, j6, k6, ij, il, jm},
    // indices in {1..5}, {l,m} the leftovers in the second form.
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        if (j == i) continue;
        for (int k = 1; k <= 5; ++k) {
          if (k == i || k == j) continue;
          for (int l = 1; l <= 5; ++l) {
            if (l == i || l == j || l == k) continue;
            add({Label::zero(), P(i, 6), P(j, 6), P(i, k), P(k, l), P(l, j)});
          }
        }
      }
    for (int k = 1; k <= 5; ++k)
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
          if (i == j || i == k || j == k) continue;
          int rest[2], n = 0;
          for (int x = 1; x <= 5; ++x)
            if (x != i && x != j && x != k) rest[n++] = x;
          for (int t = 0; t < 2; ++t) {
            int l = rest[t], m = rest[1 - t];
            add({P(i, 6), P(j, 6), P(k, 6), P(i, j), P(i, l), P(j, m)});
          }
        }
    // Type 2: {0, ij, jk, kl, lm, mi} (pentagons) and {i6, ij, jk, ki, jl, km}.
    {
      std::array<int, 5> a{1, 2, 3, 4, 5};
      std::sort(a.begin(), a.end());
      do {
        add({Label::zero(), P(a[0], a[1]), P(a[1], a[2]), P(a[2], a[3]), P(a[3], a[4]),
             P(a[4], a[0])});
      } while (std::next_permutation(a.begin(), a.end()));
    }
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        if (j == i) continue;
        for (int k = 1; k <= 5; ++k) {
          if (k == i || k == j) continue;
          int rest[2], n = 0;
          for (int x = 1; x <= 5; ++x)
            if (x != i && x != j && x != k) rest[n++] = x;
          for (int t = 0; t < 2; ++t) {
            int l = rest[t], m = rest[1 - t];
            add({P(i, 6), P(i, j), P(j, k), P(k, i), P(j, l), P(k, m)});
          }
        }
      }
    WeberEnumeration e;
    e.hexads.assign(out.begin(), out.end());
    for (int wi = 0; wi < static_cast<int>(e.hexads.size()); ++wi) {
      if (e.hexads[wi].type() != 1) continue;
      WeberHexad d = weber_dual(e.hexads[wi]);
      auto it = std::lower_bound(e.hexads.begin(), e.hexads.end(), d);
      int di = static_cast<int>(it - e.hexads.begin());
      if (wi < di) e.dual_pairs.emplace_back(wi, di);
    }
    return e;
  }();
  return table;
}

inline std::optional<WeberHexad> find_weber(const LabelSet<6>& s) {
  WeberHexad w{sorted(s)};
  const auto& all = enumerate_weber().hexads;
  auto it = std::lower_bound(all.begin(), all.end(), w);
  if (it != all.end() && *it == w) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Group actions on tetrads and hexads.

template <std::size_t N>
inline LabelSet<N> translate(const LabelSet<N>& s, Label alpha) {
  LabelSet<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = s[i] + alpha;
  return sorted(out);
}

template <std::size_t N>
inline LabelSet<N> relabel(const S6& pi, const LabelSet<N>& s) {
  LabelSet<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = relabel_node(pi, s[i]);
  return sorted(out);
}

inline GopelTetrad relabel(const S6& pi, const GopelTetrad& g) {
  return GopelTetrad{relabel(pi, g.labels)};
}

inline WeberHexad relabel(const S6& pi, const WeberHexad& w) {
  return WeberHexad{relabel(pi, w.labels)};
}

}  // namespace kummer
