#pragma once

// Dense exact linear algebra over Q and Z, at the small sizes this project
// needs (matrices up to a few hundred rows). Row reduction, kernels, linear
// solves, symmetric congruence inertia, and a column-style Hermite normal
// form for integer lattice membership.

#include "kummer/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace kummer {

using RatVec = std::vector<Rat>;

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const {
    return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const RatVec& r) {
    assert(r.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

inline RatMat operator*(const RatMat& a, const RatMat& b) {
  assert(a.cols() == b.rows());
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

inline RatVec operator*(const RatMat& a, const RatVec& x) {
  assert(a.cols() == x.size());
  RatVec y(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

inline RatVec vec_add(const RatVec& x, const RatVec& y) {
  assert(x.size() == y.size());
  RatVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

inline RatVec vec_sub(const RatVec& x, const RatVec& y) {
  assert(x.size() == y.size());
  RatVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

inline RatVec vec_scale(const Rat& c, const RatVec& x) {
  RatVec z(x);
  for (auto& v : z) v *= c;
  return z;
}

inline bool vec_is_zero(const RatVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

inline Rat dot(const RatVec& x, const RatVec& y) {
  assert(x.size() == y.size());
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

// In-place reduction to row echelon form. Returns the pivot columns; the
// matrix afterwards has unit pivots with zeros above and below (RREF).
inline std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }

// Basis of the right kernel {x : m x = 0}, as columns stacked into vectors.
inline std::vector<RatVec> kernel_basis(RatMat m) {
  const std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, or nullopt if inconsistent.
inline std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  assert(b.size() == m.rows());
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

inline std::optional<RatMat> inverse(const RatMat& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rat det(RatMat m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rat inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// Signature of a symmetric matrix by exact congruence diagonalization
// (simultaneous row/column operations; Sylvester's law of inertia).
inline Inertia congruence_inertia(RatMat m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Inertia sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Find a usable pivot: prefer a later diagonal entry, else create one
      // from an off-diagonal entry by a symmetric row/col addition.
      std::size_t p = k + 1;
      while (p < n && m(p, p) == 0) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, p));
      } else {
        std::size_t q = k + 1;
        while (q < n && m(k, q) == 0) ++q;
        if (q == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) m(k, j) += m(q, j);
        for (std::size_t i = 0; i < n; ++i) m(i, k) += m(i, q);
      }
    }
    if (m(k, k) == 0) {
      ++sig.zero;
      continue;
    }
    if (m(k, k) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    Rat inv = 1 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) * inv;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
    }
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Integer lattice tools.

class IntMat {
 public:
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Column-style Hermite normal form (lower triangular, column operations
// only). Returns the reduced matrix; the column span over Z is unchanged.
inline IntMat hnf_columns(IntMat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t c0 = 0;
  for (std::size_t r = 0; r < rows && c0 < cols; ++r) {
    // Euclidean reduction of row r across columns c0..cols-1.
    while (true) {
      std::size_t p = c0;
      bool any = false;
      for (std::size_t c = c0; c < cols; ++c) {
        if (m(r, c) != 0 && (!any || abs(m(r, c)) < abs(m(r, p)) || m(r, p) == 0)) {
          p = c;
          any = true;
        }
      }
      if (!any) break;
      if (p != c0)
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, p), m(i, c0));
      bool done = true;
      for (std::size_t c = c0 + 1; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        Int q = m(r, c) / m(r, c0);  // truncated division is fine here
        for (std::size_t i = 0; i < rows; ++i) m(i, c) -= q * m(i, c0);
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c0) != 0) {
      if (m(r, c0) < 0)
        for (std::size_t i = 0; i < rows; ++i) m(i, c0) = -m(i, c0);
      ++c0;
    }
  }
  return m;
}

// Does the integer vector y lie in the Z-span of the columns of h, where h is
// a column HNF? Forward substitution down the triangular structure.
inline bool hnf_contains(const IntMat& h, std::vector<Int> y) {
  const std::size_t rows = h.rows(), cols = h.cols();
  // In the column HNF produced above, the pivot for each successive nonzero
  // row sits in the next unused column, with zero columns pushed right.
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (c < cols && h(r, c) != 0) {
      Int q, rem;
      mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), y[r].get_mpz_t(), h(r, c).get_mpz_t());
      if (rem != 0) return false;
      if (q != 0)
        for (std::size_t i = r; i < rows; ++i) y[i] -= q * h(i, c);
      ++c;
    } else if (y[r] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace kummer
