#pragma once

// Exact linear programming over the rationals, sized for systems with a few
// hundred inequalities in at most a couple dozen variables.
//
// The user-facing problem is max c.y subject to A y >= b (y free), optionally
// with equalities E y = f eliminated up front. Internally the dual is solved
// in standard form, max b.u s.t. A^T u = -c, u >= 0, by a tableau simplex
// with Bland's rule; the primal point is read off the reduced costs of the
// artificial columns. Every optimal answer is re-checked against the
// original data, so a solver bug surfaces as an exception rather than a
// wrong certificate.

#include "kummer/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace kummer {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;     // meaningful only when Optimal
  RatVec point;  // meaningful only when Optimal
};

namespace lpdetail {

struct StandardResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec multipliers;  // dual prices of the equality rows, sign-corrected
};

// max obj.u s.t. M u = rhs, u >= 0, where M is d x m. Returns the optimum
// together with the equality multipliers (the primal point of the original
// inequality problem).
inline StandardResult standard_form_max(const RatMat& M, const RatVec& rhs, const RatVec& obj) {
  const std::size_t d = M.rows(), m = M.cols(), n = m + d;
  RatMat T(d, n);
  RatVec r(d);
  std::vector<int> rowsign(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    int s = sgn(rhs[i]) < 0 ? -1 : 1;
    rowsign[i] = s;
    r[i] = s * rhs[i];
    for (std::size_t j = 0; j < m; ++j) T(i, j) = s * M(i, j);
    T(i, m + i) = 1;
  }

  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = m + i;
  std::vector<char> allowed(n, 1);
  RatVec rc(n);
  Rat z;

  auto price = [&](const RatVec& cost) {
    z = 0;
    for (std::size_t i = 0; i < d; ++i) z += cost[basis[i]] * r[i];
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = cost[j];
      for (std::size_t i = 0; i < d; ++i)
        if (cost[basis[i]] != 0) s -= cost[basis[i]] * T(i, j);
      rc[j] = s;
    }
  };

  auto pivot = [&](std::size_t lr, std::size_t ec) {
    Rat p = T(lr, ec);
    for (std::size_t j = 0; j < n; ++j) T(lr, j) /= p;
    r[lr] /= p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == lr || T(i, ec) == 0) continue;
      Rat f = T(i, ec);
      for (std::size_t j = 0; j < n; ++j) T(i, j) -= f * T(lr, j);
      r[i] -= f * r[lr];
    }
    if (rc[ec] != 0) {
      Rat f = rc[ec];
      for (std::size_t j = 0; j < n; ++j) rc[j] -= f * T(lr, j);
      z += f * r[lr];
    }
    basis[lr] = ec;
  };

  // Bland: entering = lowest-index allowed column with positive reduced
  // cost; leaving = lowest basis index among the minimizing ratios.
  auto run = [&]() -> bool {
    for (;;) {
      std::size_t ec = n;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed[j] && sgn(rc[j]) > 0) {
          ec = j;
          break;
        }
      if (ec == n) return true;
      std::size_t lr = d;
      Rat best;
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(T(i, ec)) <= 0) continue;
        Rat ratio = r[i] / T(i, ec);
        if (lr == d || ratio < best || (ratio == best && basis[i] < basis[lr])) {
          best = ratio;
          lr = i;
        }
      }
      if (lr == d) return false;
      pivot(lr, ec);
    }
  };

  // Phase 1: drive the artificials to zero.
  RatVec phase1(n, Rat(0));
  for (std::size_t i = 0; i < d; ++i) phase1[m + i] = -1;
  price(phase1);
  if (!run()) throw std::logic_error("lp: phase 1 unbounded");
  StandardResult out;
  if (z != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  // Pivot surviving artificials out of the basis where possible; rows that
  // are zero on every structural column are redundant and stay frozen.
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i] < m) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (T(i, j) != 0) {
        pivot(i, j);
        break;
      }
  }
  for (std::size_t j = m; j < n; ++j) allowed[j] = 0;

  // Phase 2.
  RatVec phase2(n, Rat(0));
  for (std::size_t j = 0; j < m; ++j) phase2[j] = obj[j];
  price(phase2);
  if (!run()) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = z;
  out.multipliers.assign(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) out.multipliers[i] = rowsign[i] * -rc[m + i];
  return out;
}

}  // namespace lpdetail

// max c.y subject to A y >= b, y free.
inline LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c) {
  const std::size_t m = A.rows(), d = A.cols();
  if (b.size() != m || c.size() != d) throw std::invalid_argument("lp_maximize: size mismatch");

  LpResult res;
  if (d == 0) {
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(b[i]) > 0) return res;  // 0 >= b_i fails
    res.status = LpStatus::Optimal;
    res.value = 0;
    return res;
  }
  if (m == 0) {
    if (vec_is_zero(c)) {
      res.status = LpStatus::Optimal;
      res.value = 0;
      res.point.assign(d, Rat(0));
      return res;
    }
    res.status = LpStatus::Unbounded;
    return res;
  }

  RatMat At(d, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) At(j, i) = A(i, j);
  RatVec rhs(d);
  for (std::size_t j = 0; j < d; ++j) rhs[j] = -c[j];

  auto sf = lpdetail::standard_form_max(At, rhs, b);
  if (sf.status == LpStatus::Unbounded) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  if (sf.status == LpStatus::Infeasible) {
    // Gale's alternative: A y >= b is insolvable iff some u >= 0 has
    // A^T u = 0 and b.u > 0, which is exactly unboundedness of the
    // homogeneous dual.
    auto sf0 = lpdetail::standard_form_max(At, RatVec(d, Rat(0)), b);
    if (sf0.status == LpStatus::Unbounded) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    if (sf0.status != LpStatus::Optimal || sf0.value != 0)
      throw std::logic_error("lp: homogeneous dual returned impossible answer");
    res.status = LpStatus::Unbounded;
    return res;
  }

  const RatVec& y = sf.multipliers;
  Rat cy = dot(c, y);
  if (cy != -sf.value) throw std::logic_error("lp: duality gap in certificate");
  for (std::size_t i = 0; i < m; ++i) {
    Rat ay = 0;
    for (std::size_t j = 0; j < d; ++j) ay += A(i, j) * y[j];
    if (ay < b[i]) throw std::logic_error("lp: recovered point infeasible");
  }
  res.status = LpStatus::Optimal;
  res.value = cy;
  res.point = y;
  return res;
}

// max c.y subject to A y >= b and E y = f. Equalities are eliminated by
// substituting y = y0 + K t with K a kernel basis of E.
inline LpResult lp_maximize(const RatMat& A, const RatVec& b, const RatVec& c, const RatMat& E,
                            const RatVec& f) {
  const std::size_t d = A.cols();
  if (E.rows() == 0) return lp_maximize(A, b, c);
  if (E.cols() != d || f.size() != E.rows()) throw std::invalid_argument("lp_maximize: size mismatch");

  auto y0 = solve(E, f);
  LpResult res;
  if (!y0) return res;  // equalities inconsistent
  std::vector<RatVec> kern = kernel_basis(E);
  const std::size_t k = kern.size();

  RatMat Ared(A.rows(), k);
  RatVec bred(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Rat ay0 = 0;
    for (std::size_t j = 0; j < d; ++j) ay0 += A(i, j) * (*y0)[j];
    bred[i] = b[i] - ay0;
    for (std::size_t t = 0; t < k; ++t) {
      Rat s = 0;
      for (std::size_t j = 0; j < d; ++j) s += A(i, j) * kern[t][j];
      Ared(i, t) = s;
    }
  }
  RatVec cred(k);
  Rat shift = dot(c, *y0);
  for (std::size_t t = 0; t < k; ++t) cred[t] = dot(c, kern[t]);

  LpResult inner = lp_maximize(Ared, bred, cred);
  if (inner.status != LpStatus::Optimal) return inner;

  res.status = LpStatus::Optimal;
  res.value = inner.value + shift;
  res.point = *y0;
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t j = 0; j < d; ++j) res.point[j] += inner.point[t] * kern[t][j];
  for (std::size_t i = 0; i < E.rows(); ++i) {
    Rat ey = 0;
    for (std::size_t j = 0; j < d; ++j) ey += E(i, j) * res.point[j];
    if (ey != f[i]) throw std::logic_error("lp: equality violated after back-substitution");
  }
  return res;
}

}  // namespace kummer
