#pragma once

// Sparse multivariate polynomials over Q in a fixed set of ten variables:
// the projective coordinates x0..x3, the cross-ratio moduli a, b, c, and
// three parameter variables u, v, w used for curve and quadric
// parametrizations. Monomials are exponent arrays ordered lexicographically,
// so the leading term of a nonzero polynomial is the map's last entry.
//
// Division is the classical leading-term algorithm: against a single divisor
// it terminates for any monomial well-order and leaves remainder zero
// exactly when the divisor divides. Matrices with polynomial entries are
// handled by Bareiss fraction-free elimination, giving exact ranks,
// determinants and (via maximal minors) kernel generators over the fraction
// field Q(a, b, c).

#include "kummer/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

constexpr int kNumVars = 10;
enum PolyVar { vX0 = 0, vX1, vX2, vX3, vA, vB, vC, vU, vV, vW };

inline const char* poly_var_name(int v) {
  static const char* names[kNumVars] = {"x0", "x1", "x2", "x3", "a", "b", "c", "u", "v", "w"};
  return names[v];
}

using Mono = std::array<int, kNumVars>;

class MultiPoly {
 public:
  std::map<Mono, Rat> terms;

  MultiPoly() = default;

  static MultiPoly constant(const Rat& q) {
    MultiPoly p;
    if (q != 0) p.terms[Mono{}] = q;
    return p;
  }
  static MultiPoly var(int v, int e = 1) {
    if (v < 0 || v >= kNumVars || e < 0) throw std::invalid_argument("MultiPoly::var");
    MultiPoly p;
    Mono m{};
    m[v] = e;
    p.terms[m] = 1;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Mono& m, const Rat& q) {
    if (q == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, q);
    } else {
      it->second += q;
      if (it->second == 0) terms.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, q] : o.terms) add_term(m, q);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, q] : o.terms) add_term(m, -q);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [m, q] : a.terms) r.terms.emplace(m, -q);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, qa] : a.terms)
      for (const auto& [mb, qb] : b.terms) {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, qa * qb);
      }
    return r;
  }
  friend MultiPoly operator*(const Rat& s, const MultiPoly& a) {
    MultiPoly r;
    if (s == 0) return r;
    for (const auto& [m, q] : a.terms) r.terms.emplace(m, s * q);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rat& s) { return *this = s * *this; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms < b.terms; }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow");
    MultiPoly r = constant(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, q] : terms) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }
  int degree_in(int v) const {
    int d = -1;
    for (const auto& [m, q] : terms) d = std::max(d, m[v]);
    return terms.empty() ? -1 : d;
  }
  // Total degree in the projective coordinates x0..x3 only.
  int degree_in_xs() const {
    int d = -1;
    for (const auto& [m, q] : terms) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
  }
  bool uses(int v) const {
    for (const auto& [m, q] : terms)
      if (m[v] > 0) return true;
    return false;
  }

  Rat eval(const std::array<Rat, kNumVars>& at) const {
    Rat s = 0;
    for (const auto& [m, q] : terms) {
      Rat t = q;
      for (int i = 0; i < kNumVars; ++i)
        for (int e = 0; e < m[i]; ++e) t *= at[i];
      s += t;
    }
    return s;
  }

  MultiPoly specialize(int v, const Rat& value) const {
    MultiPoly r;
    for (const auto& [m, q] : terms) {
      Rat t = q;
      for (int e = 0; e < m[v]; ++e) t *= value;
      Mono m2 = m;
      m2[v] = 0;
      r.add_term(m2, t);
    }
    return r;
  }

  MultiPoly substitute(int v, const MultiPoly& g) const {
    MultiPoly r;
    for (const auto& [m, q] : terms) {
      Mono m2 = m;
      m2[v] = 0;
      MultiPoly t;
      t.terms.emplace(m2, q);
      r += t * g.pow(m[v]);
    }
    return r;
  }

  MultiPoly partial(int v) const {
    MultiPoly r;
    for (const auto& [m, q] : terms) {
      if (m[v] == 0) continue;
      Mono m2 = m;
      m2[v] -= 1;
      r.add_term(m2, q * m[v]);
    }
    return r;
  }

  const std::pair<const Mono, Rat>& leading() const {
    if (terms.empty()) throw std::logic_error("MultiPoly::leading on zero");
    return *terms.rbegin();
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [m, q] = *it;
      Rat aq = abs(q);
      if (first) {
        if (sgn(q) < 0) out += "-";
        first = false;
      } else {
        out += sgn(q) < 0 ? " - " : " + ";
      }
      bool mono_empty = true;
      std::string ms;
      for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!mono_empty) ms += "*";
        ms += poly_var_name(i);
        if (m[i] > 1) ms += "^" + std::to_string(m[i]);
        mono_empty = false;
      }
      if (mono_empty) {
        out += rat_str(aq);
      } else {
        if (aq != 1) out += rat_str(aq) + "*";
        out += ms;
      }
    }
    return out;
  }
};

// Simultaneous substitution of the four projective coordinates.
inline MultiPoly substitute_xs(const MultiPoly& f, const std::array<MultiPoly, 4>& xs) {
  MultiPoly r;
  for (const auto& [m, q] : f.terms) {
    Mono m2 = m;
    for (int i = 0; i < 4; ++i) m2[i] = 0;
    MultiPoly t;
    t.terms.emplace(m2, q);
    for (int i = 0; i < 4; ++i)
      if (m[i] > 0) t *= xs[i].pow(m[i]);
    r += t;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Division and normalization.

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Quotient f / g when the division is exact, nullopt otherwise.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  MultiPoly r = f, q;
  const auto& [gm, gc] = g.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!mono_divides(gm, rm)) return std::nullopt;
    Mono d;
    for (int i = 0; i < kNumVars; ++i) d[i] = rm[i] - gm[i];
    Rat coef = rc / gc;
    MultiPoly t;
    t.terms.emplace(d, coef);
    q += t;
    r -= t * g;
  }
  return q;
}

inline bool divides(const MultiPoly& g, const MultiPoly& f) {
  return exact_divide(f, g).has_value();
}

// Scale so the integer coefficients are coprime and the leading one is
// positive; returns the normalized polynomial and the scalar s with
// input = s * normalized.
inline std::pair<MultiPoly, Rat> content_normalize(const MultiPoly& f) {
  if (f.is_zero()) return {f, Rat(1)};
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, q] : f.terms) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(f.leading().second) < 0) content = -content;
  MultiPoly out;
  for (const auto& [m, q] : f.terms) out.terms.emplace(m, q / content);
  return {out, content};
}

// The scalar s with f = s * g, when it exists.
inline std::optional<Rat> scalar_ratio(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) return f.is_zero() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  if (f.is_zero()) return Rat(0);
  const auto& [fm, fc] = f.leading();
  const auto& [gm, gc] = g.leading();
  if (fm != gm) return std::nullopt;
  Rat s = fc / gc;
  return f == s * g ? std::optional<Rat>(s) : std::nullopt;
}

// ---------------------------------------------------------------------------
// Local behaviour at a coordinate vertex: in the affine chart x_k = 1, the
// terms of minimal total degree in the remaining coordinates. The order is
// the multiplicity of the vertex on the hypersurface.

struct LowestForm {
  int order = 0;
  MultiPoly form;  // chart coordinates; the exponent of x_k is zero
};

inline LowestForm lowest_form_at_vertex(const MultiPoly& f, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("lowest_form_at_vertex: vertex in 0..3");
  if (f.is_zero()) throw std::invalid_argument("lowest_form_at_vertex: zero polynomial");
  LowestForm out;
  out.order = -1;
  for (const auto& [m, q] : f.terms) {
    int d = m[0] + m[1] + m[2] + m[3] - m[k];
    if (out.order < 0 || d < out.order) out.order = d;
  }
  for (const auto& [m, q] : f.terms) {
    int d = m[0] + m[1] + m[2] + m[3] - m[k];
    if (d != out.order) continue;
    Mono m2 = m;
    m2[k] = 0;
    out.form.add_term(m2, q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient matrices (numeric coefficients): rows = polynomials, columns =
// the union of the supports. Rank of the span, contraction certificates.

inline RatMat support_matrix(const std::vector<MultiPoly>& polys) {
  std::map<Mono, std::size_t> cols;
  for (const auto& p : polys)
    for (const auto& [m, q] : p.terms) cols.emplace(m, 0);
  std::size_t c = 0;
  for (auto& kv : cols) kv.second = c++;
  RatMat out(polys.size(), cols.empty() ? 1 : cols.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [m, q] : polys[i].terms) out(i, cols[m]) = q;
  return out;
}

inline std::size_t span_rank(const std::vector<MultiPoly>& polys) {
  return rank(support_matrix(polys));
}

// The symmetric 4x4 matrix of a quadratic form in x0..x3 (coefficients must
// be numeric); its rank classifies the quadric (>= 3 means irreducible).
inline RatMat quadric_form_matrix(const MultiPoly& f) {
  RatMat m(4, 4);
  for (const auto& [mo, q] : f.terms) {
    int idx[2], n = 0;
    for (int i = 0; i < kNumVars; ++i) {
      if (i >= 4 && mo[i] > 0) throw std::invalid_argument("quadric_form_matrix: non-x variable");
      for (int e = 0; e < mo[i]; ++e) {
        if (n >= 2) throw std::invalid_argument("quadric_form_matrix: degree > 2");
        idx[n++] = i;
      }
    }
    if (n != 2) throw std::invalid_argument("quadric_form_matrix: term of degree != 2");
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) += q;
    } else {
      m(idx[0], idx[1]) += q / 2;
      m(idx[1], idx[0]) += q / 2;
    }
  }
  return m;
}

inline std::size_t quadric_rank(const MultiPoly& f) { return rank(quadric_form_matrix(f)); }

// ---------------------------------------------------------------------------
// Matrices with polynomial entries: Bareiss fraction-free elimination.

using PolyMat = std::vector<std::vector<MultiPoly>>;

// Row echelon reduction in place; returns the rank. Divisions are by the
// previous pivot and are exact by the Bareiss identity.
inline std::size_t bareiss_rank(PolyMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  MultiPoly prev = MultiPoly::constant(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("bareiss_rank: inexact division");
        m[i][j] = *q;
      }
      m[i][c] = MultiPoly();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline MultiPoly bareiss_det(PolyMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_det: square matrix required");
  if (n == 0) return MultiPoly::constant(1);
  MultiPoly prev = MultiPoly::constant(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return MultiPoly();
    if (piv != c) {
      std::swap(m[c], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        MultiPoly num = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("bareiss_det: inexact division");
        m[i][j] = *q;
      }
      m[i][c] = MultiPoly();
    }
    prev = m[c][c];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Kernel generator of a matrix of corank one: signed maximal minors of a
// full-rank subset of rows. Entries are polynomials, exact over Q(a, b, c).
inline std::vector<MultiPoly> corank_one_kernel(const PolyMat& m) {
  if (m.empty()) throw std::invalid_argument("corank_one_kernel: empty matrix");
  const std::size_t cols = m[0].size();
  if (bareiss_rank(m) + 1 != cols)
    throw std::invalid_argument("corank_one_kernel: corank is not one");
  // Select cols-1 independent rows greedily.
  PolyMat sel;
  for (const auto& row : m) {
    sel.push_back(row);
    if (bareiss_rank(sel) < sel.size()) sel.pop_back();
    if (sel.size() == cols - 1) break;
  }
  if (sel.size() != cols - 1) throw std::logic_error("corank_one_kernel: row selection failed");
  std::vector<MultiPoly> ker(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    PolyMat minor(cols - 1, std::vector<MultiPoly>(cols - 1));
    for (std::size_t i = 0; i < cols - 1; ++i) {
      std::size_t cc = 0;
      for (std::size_t jj = 0; jj < cols; ++jj) {
        if (jj == j) continue;
        minor[i][cc++] = sel[i][jj];
      }
    }
    MultiPoly d = bareiss_det(minor);
    ker[j] = (j % 2 == 0) ? d : -d;
  }
  bool all_zero = true;
  for (const auto& k : ker)
    if (!k.is_zero()) all_zero = false;
  if (all_zero) throw std::logic_error("corank_one_kernel: zero kernel vector");
  return ker;
}

// ---------------------------------------------------------------------------
// Binary forms in u, v: univariate Euclid for gcd degrees.

// Coefficient vector c[i] of u^i v^(d-i) for a form of degree d, checking
// that only u and v occur.
inline std::vector<Rat> binary_form_coeffs(const MultiPoly& f) {
  if (f.is_zero()) return {};
  int d = -1;
  for (const auto& [m, q] : f.terms) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != vU && i != vV && m[i] > 0)
        throw std::invalid_argument("binary_form_coeffs: variable other than u, v");
    int t = m[vU] + m[vV];
    if (d < 0) d = t;
    if (t != d) throw std::invalid_argument("binary_form_coeffs: not homogeneous");
  }
  std::vector<Rat> c(d + 1, Rat(0));
  for (const auto& [m, q] : f.terms) c[m[vU]] = q;
  return c;
}

namespace polydetail {

inline void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace polydetail

// Degree of gcd of two binary forms, counting common powers of u and v.
inline int binary_gcd_degree(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("binary_gcd_degree: zero form");
  auto cf = binary_form_coeffs(f), cg = binary_form_coeffs(g);
  // Shared powers of v (low end) and u (high end).
  auto low = [](const std::vector<Rat>& c) {
    std::size_t i = 0;
    while (i < c.size() && c[i] == 0) ++i;
    return i;
  };
  // c[0..k-1] = 0 means u^k divides; trailing zeros give the power of v.
  std::size_t umult_f = low(cf), umult_g = low(cg);
  int common = static_cast<int>(std::min(umult_f, umult_g));
  std::vector<Rat> pf(cf.begin() + umult_f, cf.end()), pg(cg.begin() + umult_g, cg.end());
  polydetail::trim(pf);
  polydetail::trim(pg);
  std::size_t vmult_f = cf.size() - umult_f - pf.size(), vmult_g = cg.size() - umult_g - pg.size();
  common += static_cast<int>(std::min(vmult_f, vmult_g));
  // Euclid on the dehomogenized parts (variable t = u/v).
  while (!pg.empty()) {
    auto r = polydetail::poly_mod(pf, pg);
    pf = std::move(pg);
    pg = std::move(r);
  }
  return common + static_cast<int>(pf.size()) - 1;
}

}  // namespace kummer
