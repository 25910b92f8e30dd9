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

#ifndef BILRED_SRC_GAUSS_H_
#define BILRED_SRC_GAUSS_H_

#include <vector>

#include "matrix.h"

namespace bilred {

// Outcome of column-pivoted Gaussian elimination on (A | b).
//
// sigma maps new column positions to original indices (0-based): position i
// of the permuted matrix holds original column sigma[i], so a solution x of
// Ax = b satisfies (A0|A1) xs = b_prime with xs[i] = x[sigma[i]].
struct EliminationResult {
  std::vector<int> sigma;
  Matrix a0;       // m x m, upper triangular, nonzero diagonal
  Matrix a1;       // m x (n - m)
  Vector b_prime;  // length m
  int rank = 0;
};

// Particular solution plus nullspace basis: the solutions of Ax = b are
// exactly x0 + span(basis).
struct AffineParam {
  Vector x0;
  std::vector<Vector> basis;  // n - m linearly independent vectors
};

// Column-pivoted exact elimination. Pivot choice is deterministic: at step i
// the pivot is entry (i,i); a zero pivot is repaired first by the smallest
// row below with a nonzero in column i, then by swapping in the leftmost
// column to the right with a nonzero in row i. Throws Error(RankDeficient)
// carrying the computed rank when rank(A) < m.
EliminationResult eliminate(const Matrix& a, const Vector& b);

// Exact rank of any matrix.
int rank(const Matrix& a);

// Exact determinant of a square matrix; row-swap-only elimination, a code
// path independent of eliminate(). Throws Error(NotSquare).
Rational det(const Matrix& m);

// Unique solution of an upper-triangular system by back-substitution.
// Throws Error(SingularDiagonal) on a zero diagonal entry.
Vector solve_upper_triangular(const Matrix& a0, const Vector& rhs);

// Unique solution of a nonsingular square system. Throws
// Error(SingularSystem) when the matrix is singular, Error(NotSquare)
// otherwise ill-shaped.
Vector solve_square(const Matrix& m, const Vector& rhs);

// Basis of the nullspace of any matrix (empty when the kernel is trivial).
std::vector<Vector> nullspace_basis(const Matrix& m);

// Particular solution and nullspace basis for a full-row-rank system.
// Full row rank guarantees consistency for every b. Throws
// Error(RankDeficient) when rank(A) < m.
AffineParam affine_parametrize(const Matrix& a, const Vector& b);

}  // namespace bilred

#endif  // BILRED_SRC_GAUSS_H_
