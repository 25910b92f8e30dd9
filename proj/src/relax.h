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

#ifndef BILRED_SRC_RELAX_H_
#define BILRED_SRC_RELAX_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "system.h"

namespace bilred {

enum class Rel { Le, Eq, Ge };

// Provenance of an LP row; the mode comparison reports row counts by kind.
enum class RowKind { Linear, Reduction, Envelope };

struct LpRow {
  Vector coeffs;  // length 2n + 1, variable order x1..xn, w1..wn, y
  Rel rel = Rel::Eq;
  Rational rhs;
  RowKind kind = RowKind::Linear;
};

struct VarBound {
  std::optional<Rational> lo, hi;  // absent bound = unbounded on that side
};

// Dense LP over the variable block (x, w, y) of a bilinear system.
struct LinearProgram {
  Sense sense = Sense::Min;
  Vector objective;
  std::vector<LpRow> rows;
  std::vector<VarBound> var_bounds;
  int bilinear_n = 0;

  int num_vars() const { return 2 * bilinear_n + 1; }
  std::string var_name(int idx) const;
};

enum class RelaxMode { Full, Reduced };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // meaningful when Optimal
  Vector point;    // length num_vars when Optimal
};

const char* lp_status_name(LpStatus status);

// The four envelope inequalities of w_j = x_j * y over the box (j 0-based):
//   w_j >= xlo_j y + ylo x_j - xlo_j ylo
//   w_j >= xhi_j y + yhi x_j - xhi_j yhi
//   w_j <= xhi_j y + ylo x_j - xhi_j ylo
//   w_j <= xlo_j y + yhi x_j - xlo_j yhi
// Throws Error(BadBox) on an empty interval.
std::array<LpRow, 4> mccormick_rows(int j, const Box& box, int n);

// Full mode: rows Ax = b plus all 4n envelope rows. Reduced mode: rows
// Ax = b, the m reduction rows Aw - by = 0, and envelopes only for the
// retained indices J from compute_reduction. Box bounds are attached to x
// and y; w gets the interval spanned by the four corner products.
// Throws Error(MissingBounds) / Error(MissingObjective).
LinearProgram build_relaxation(const BilinearSystem& system, RelaxMode mode);

// Row counts and (optionally) the exact optimum for one mode.
struct ModeReport {
  int rows = 0;
  int linear_rows = 0;    // Linear + Reduction kinds
  int envelope_rows = 0;  // Envelope kind
  std::optional<LpSolution> solution;
};

// Side-by-side report for both modes; `solve` also computes both optima.
struct ComparisonReport {
  ModeReport full;
  ModeReport reduced;
  int bilinear_terms_replaced = 0;  // = m
};

ComparisonReport compare_relaxations(const BilinearSystem& system, bool solve);

}  // namespace bilred

#endif  // BILRED_SRC_RELAX_H_
