#pragma once

// The 16-element two-torsion group indexing nodes and tropes of a (16,6)
// nodal quartic configuration. Elements are written 0 (the identity, also
// spelled 66) and ij for 1 <= i < j <= 6; internally an element is the
// even subset of {1..6} of size 0 or 2 picked from each complementary pair.
//
// Group law: 0 is the identity, ij + jk = ik, and ij + kl = mn when
// {i,j,k,l,m,n} = {1,...,6}. This is symmetric difference of subsets
// followed by complementation back into size <= 2.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kummer {

class Label {
 public:
  Label() : idx_(0) {}

  static constexpr int kCount = 16;

  static Label zero() { return Label(0); }

  // Pair label {i,j}, 1-based indices in 1..6; pair(6,6) is the zero label.
  static Label pair(int i, int j) {
    if (i == j && i == 6) return zero();
    if (i < 1 || i > 6 || j < 1 || j > 6 || i == j)
      throw std::invalid_argument("Label::pair: bad indices");
    return from_mask((1u << (i - 1)) | (1u << (j - 1)));
  }

  static Label from_index(int idx) {
    if (idx < 0 || idx >= kCount) throw std::invalid_argument("Label: bad index");
    return Label(static_cast<std::uint8_t>(idx));
  }

  static Label from_mask(unsigned mask) {
    int idx = mask_to_index()[mask & 0x3f];
    if (idx < 0) throw std::invalid_argument("Label: bad mask");
    return Label(static_cast<std::uint8_t>(idx));
  }

  // Canonical order: 0, 16, 26, 36, 46, 56, 12, 13, 14, 15, 23, 24, 25, 34,
  // 35, 45. This fixes coordinate positions throughout the library.
  int index() const { return idx_; }

  unsigned mask() const { return index_to_mask()[idx_]; }

  bool is_zero() const { return idx_ == 0; }

  // For a pair label, the two 1-based indices (i < j).
  std::pair<int, int> indices() const {
    if (is_zero()) throw std::invalid_argument("Label::indices on zero label");
    unsigned m = mask();
    int i = std::countr_zero(m) + 1;
    m &= m - 1;
    int j = std::countr_zero(m) + 1;
    return {i, j};
  }

  bool contains(int i) const { return (mask() >> (i - 1)) & 1u; }

  std::string str() const {
    if (is_zero()) return "00";
    auto [i, j] = indices();
    return std::string(1, char('0' + i)) + char('0' + j);
  }

  static Label parse(std::string_view s) {
    if (s.size() != 2 || s[0] < '0' || s[0] > '6' || s[1] < '0' || s[1] > '6')
      throw std::invalid_argument("Label::parse: expected two digits, got '" +
                                  std::string(s) + "'");
    int i = s[0] - '0', j = s[1] - '0';
    if (i == 0 && j == 0) return zero();
    if (i == 6 && j == 6) return zero();
    if (i == 0 || j == 0 || i == j)
      throw std::invalid_argument("Label::parse: bad label '" + std::string(s) + "'");
    if (i > j) std::swap(i, j);
    return pair(i, j);
  }

  friend Label operator+(Label a, Label b) {
    unsigned m = a.mask() ^ b.mask();
    if (std::popcount(m) > 2) m ^= 0x3f;  // complement back into size <= 2
    return from_mask(m);
  }

  friend bool operator==(Label a, Label b) { return a.idx_ == b.idx_; }
  friend bool operator!=(Label a, Label b) { return a.idx_ != b.idx_; }
  friend bool operator<(Label a, Label b) { return a.idx_ < b.idx_; }

 private:
  explicit Label(std::uint8_t idx) : idx_(idx) {}

  static const std::array<unsigned, kCount>& index_to_mask() {
    static const std::array<unsigned, kCount> t = [] {
      std::array<unsigned, kCount> a{};
      a[0] = 0;
      for (int i = 1; i <= 5; ++i) a[i] = (1u << (i - 1)) | (1u << 5);  // i6
      int k = 6;
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) a[k++] = (1u << (i - 1)) | (1u << (j - 1));
      return a;
    }();
    return t;
  }

  static const std::array<int, 64>& mask_to_index() {
    static const std::array<int, 64> t = [] {
      std::array<int, 64> a{};
      a.fill(-1);
      for (int i = 0; i < kCount; ++i) a[index_to_mask()[i]] = i;
      return a;
    }();
    return t;
  }

  std::uint8_t idx_;
};

inline std::vector<Label> all_labels() {
  std::vector<Label> v;
  v.reserve(Label::kCount);
  for (int i = 0; i < Label::kCount; ++i) v.push_back(Label::from_index(i));
  return v;
}

// Incidence set I(T_beta): the six nodes lying on the trope T_beta.
// I(T_0) = {0, 16, 26, 36, 46, 56} and I(T_beta) = I(T_0) + beta.
inline std::array<Label, 6> trope_incidence(Label beta) {
  std::array<Label, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = Label::from_index(i) + beta;
  return out;
}

inline bool incident(Label node, Label trope) {
  for (Label a : trope_incidence(trope))
    if (a == node) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Relabeling: permutations of the six Weierstrass indices 1..6.
//
// A permutation pi acts on subsets by relabeling indices; composing with the
// translation by {pi(6),6} gives the configuration automorphism that fixes
// the trope T_0 and permutes its six nodes as i6 -> pi(i)6 (with 66 = 0).
// On trope indices the induced action is the plain subset action.

struct S6 {
  std::array<int, 6> img;  // img[i-1] = pi(i), values in 1..6

  static S6 identity() { return {{1, 2, 3, 4, 5, 6}}; }

  int operator()(int i) const { return img[i - 1]; }

  S6 then(const S6& second) const {  // (second . first)(i) = second(first(i))
    S6 r;
    for (int i = 1; i <= 6; ++i) r.img[i - 1] = second(img[i - 1]);
    return r;
  }

  S6 inverse() const {
    S6 r;
    for (int i = 1; i <= 6; ++i) r.img[img[i - 1] - 1] = i;
    return r;
  }

  bool operator==(const S6& o) const { return img == o.img; }
};

inline std::vector<S6> all_s6() {
  std::vector<S6> out;
  S6 p = S6::identity();
  std::array<int, 6> a = p.img;
  // std::next_permutation enumerates in lexicographic order.
  do {
    out.push_back(S6{a});
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// Plain subset action (used for trope indices).
inline Label relabel_trope(const S6& pi, Label beta) {
  unsigned m = beta.mask(), out = 0;
  for (int i = 1; i <= 6; ++i)
    if ((m >> (i - 1)) & 1u) out |= 1u << (pi(i) - 1);
  if (std::popcount(out) > 2) out ^= 0x3f;
  return Label::from_mask(out);
}

// Node action: subset action twisted by the translation t_{pi(6)6}, so that
// the six nodes on T_0 are permuted among themselves (i6 -> pi(i)6, 66 = 0).
inline Label relabel_node(const S6& pi, Label alpha) {
  Label gamma = pi(6) == 6 ? Label::zero() : Label::pair(pi(6), 6);
  return relabel_trope(pi, alpha) + gamma;
}

}  // namespace kummer
