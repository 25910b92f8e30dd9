// Copyright 2026 The bilred Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gauss.h"

#include <numeric>
#include <optional>
#include <utility>

#include "error.h"

namespace bilred {

namespace {

// Shared elimination engine. Reduces `r` (and `rhs`, when present) to upper
// trapezoidal form with pivots on the leading diagonal, tracking the column
// permutation. Rows below the pivot count end up all-zero.
struct GaussCore {
  Matrix r;
  Vector rhs;
  std::vector<int> sigma;  // position -> original column
  int rank = 0;
};

GaussCore run_gauss(const Matrix& a, const Vector* b) {
  const int m = a.rows();
  const int n = a.cols();
  GaussCore core;
  core.r = a;
  if (b != nullptr) core.rhs = *b;
  core.sigma.resize(n);
  std::iota(core.sigma.begin(), core.sigma.end(), 0);

  Matrix& r = core.r;
  int i = 0;
  while (i < m && i < n) {
    if (r(i, i).is_zero()) {
      // Smallest row below with a nonzero entry in column i.
      for (int rr = i + 1; rr < m; ++rr) {
        if (!r(rr, i).is_zero()) {
          r.swap_rows(i, rr);
          if (b != nullptr) std::swap(core.rhs[i], core.rhs[rr]);
          break;
        }
      }
    }
    if (r(i, i).is_zero()) {
      // Column i is zero from row i down; bring in the leftmost usable
      // column by scanning row i to the right.
      for (int cc = i + 1; cc < n; ++cc) {
        if (!r(i, cc).is_zero()) {
          r.swap_cols(i, cc);
          std::swap(core.sigma[i], core.sigma[cc]);
          break;
        }
      }
    }
    if (r(i, i).is_zero()) {
      // Row i is entirely zero in the remaining submatrix. Pull up the
      // first lower row that still has content; if none, elimination is
      // finished and the pivot count is the rank.
      int found = -1;
      for (int rr = i + 1; rr < m && found < 0; ++rr) {
        for (int cc = i; cc < n; ++cc) {
          if (!r(rr, cc).is_zero()) {
            found = rr;
            break;
          }
        }
      }
      if (found < 0) break;
      r.swap_rows(i, found);
      if (b != nullptr) std::swap(core.rhs[i], core.rhs[found]);
      continue;  // redo step i with the new row
    }
    for (int rr = i + 1; rr < m; ++rr) {
      if (r(rr, i).is_zero()) continue;
      const Rational factor = r(rr, i) / r(i, i);
      r(rr, i) = Rational(0);
      for (int cc = i + 1; cc < n; ++cc) {
        if (!r(i, cc).is_zero()) r(rr, cc) -= factor * r(i, cc);
      }
      if (b != nullptr) core.rhs[rr] -= factor * core.rhs[i];
    }
    ++i;
  }
  core.rank = i;
  return core;
}

// Back-substitution on the leading k x k block of `r` (pivots nonzero).
// Extra columns of `r` beyond `k` are ignored.
Vector back_substitute(const Matrix& r, const Vector& rhs, int k) {
  Vector u(k);
  for (int i = k - 1; i >= 0; --i) {
    Rational acc = rhs[i];
    for (int j = i + 1; j < k; ++j) {
      if (!r(i, j).is_zero()) acc -= r(i, j) * u[j];
    }
    u[i] = acc / r(i, i);
  }
  return u;
}

}  // namespace

EliminationResult eliminate(const Matrix& a, const Vector& b) {
  const int m = a.rows();
  const int n = a.cols();
  if (static_cast<int>(b.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "A has " + std::to_string(m) + " rows but b has length " +
                    std::to_string(b.size()));
  }
  GaussCore core = run_gauss(a, &b);
  if (core.rank < m) {
    throw Error(ErrorCode::RankDeficient,
                "rank(A) = " + std::to_string(core.rank) + " < m = " +
                    std::to_string(m))
        .with_int("rank", core.rank)
        .with_int("m", m);
  }
  EliminationResult res;
  res.sigma = std::move(core.sigma);
  res.rank = core.rank;
  res.a0 = Matrix(m, m);
  res.a1 = Matrix(m, n - m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) res.a0(i, j) = core.r(i, j);
    for (int j = m; j < n; ++j) res.a1(i, j - m) = core.r(i, j);
  }
  res.b_prime = std::move(core.rhs);
  return res;
}

int rank(const Matrix& a) {
  GaussCore core = run_gauss(a, nullptr);
  return core.rank;
}

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "determinant of a " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  const int k = m.rows();
  Matrix r = m;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    if (r(i, i).is_zero()) {
      int pivot_row = -1;
      for (int rr = i + 1; rr < k; ++rr) {
        if (!r(rr, i).is_zero()) {
          pivot_row = rr;
          break;
        }
      }
      if (pivot_row < 0) return Rational(0);
      r.swap_rows(i, pivot_row);
      sign = -sign;
    }
    for (int rr = i + 1; rr < k; ++rr) {
      if (r(rr, i).is_zero()) continue;
      const Rational factor = r(rr, i) / r(i, i);
      r(rr, i) = Rational(0);
      for (int cc = i + 1; cc < k; ++cc) {
        if (!r(i, cc).is_zero()) r(rr, cc) -= factor * r(i, cc);
      }
    }
  }
  Rational d(sign);
  for (int i = 0; i < k; ++i) d *= r(i, i);
  return d;
}

Vector solve_upper_triangular(const Matrix& a0, const Vector& rhs) {
  const int k = a0.rows();
  if (a0.cols() != k) {
    throw Error(ErrorCode::NotSquare, "triangular solve on a " +
                                          std::to_string(k) + "x" +
                                          std::to_string(a0.cols()) +
                                          " matrix");
  }
  if (static_cast<int>(rhs.size()) != k) {
    throw Error(ErrorCode::DimensionMismatch,
                "rhs length " + std::to_string(rhs.size()) +
                    " does not match matrix order " + std::to_string(k));
  }
  for (int i = 0; i < k; ++i) {
    if (a0(i, i).is_zero()) {
      throw Error(ErrorCode::SingularDiagonal,
                  "zero diagonal entry at position " + std::to_string(i + 1));
    }
  }
  return back_substitute(a0, rhs, k);
}

Vector solve_square(const Matrix& m, const Vector& rhs) {
  const int k = m.rows();
  if (m.cols() != k) {
    throw Error(ErrorCode::NotSquare, "square solve on a " +
                                          std::to_string(k) + "x" +
                                          std::to_string(m.cols()) +
                                          " matrix");
  }
  if (static_cast<int>(rhs.size()) != k) {
    throw Error(ErrorCode::DimensionMismatch,
                "rhs length " + std::to_string(rhs.size()) +
                    " does not match matrix order " + std::to_string(k));
  }
  GaussCore core = run_gauss(m, &rhs);
  if (core.rank < k) {
    throw Error(ErrorCode::SingularSystem,
                "matrix is singular (rank " + std::to_string(core.rank) + ")")
        .with_int("rank", core.rank);
  }
  Vector u = back_substitute(core.r, core.rhs, k);
  Vector x(k);
  for (int i = 0; i < k; ++i) x[core.sigma[i]] = u[i];
  return x;
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
  const int n = m.cols();
  GaussCore core = run_gauss(m, nullptr);
  const int r = core.rank;
  std::vector<Vector> basis;
  basis.reserve(n - r);
  for (int free = r; free < n; ++free) {
    Vector rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = -core.r(i, free);
    Vector u = r > 0 ? back_substitute(core.r, rhs, r) : Vector();
    Vector v(n);
    for (int i = 0; i < r; ++i) v[core.sigma[i]] = u[i];
    v[core.sigma[free]] = Rational(1);
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineParam affine_parametrize(const Matrix& a, const Vector& b) {
  const int m = a.rows();
  const int n = a.cols();
  EliminationResult elim = eliminate(a, b);  // throws RankDeficient
  AffineParam param;
  // Particular solution: every free position takes the value 1, the pivot
  // positions come from back-substituting the correspondingly adjusted
  // right-hand side.
  Vector rhs0 = elim.b_prime;
  for (int k = 0; k < n - m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (!elim.a1(i, k).is_zero()) rhs0[i] -= elim.a1(i, k);
    }
  }
  Vector u = back_substitute(elim.a0, rhs0, m);
  param.x0.assign(n, Rational(1));
  for (int i = 0; i < m; ++i) param.x0[elim.sigma[i]] = u[i];
  param.basis.reserve(n - m);
  for (int k = 0; k < n - m; ++k) {
    Vector rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = -elim.a1(i, k);
    Vector uk = back_substitute(elim.a0, rhs, m);
    Vector v(n);
    for (int i = 0; i < m; ++i) v[elim.sigma[i]] = uk[i];
    v[elim.sigma[m + k]] = Rational(1);
    param.basis.push_back(std::move(v));
  }
  return param;
}

}  // namespace bilred
