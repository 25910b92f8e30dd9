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

#include "relax.h"

#include <algorithm>

#include "error.h"
#include "reduction.h"
#include "simplex.h"

namespace bilred {

std::string LinearProgram::var_name(int idx) const {
  if (idx < 0 || idx >= num_vars()) {
    throw Error(ErrorCode::BadArgument, "variable index out of range")
        .with_int("index", idx);
  }
  if (idx < bilinear_n) return "x" + std::to_string(idx + 1);
  if (idx < 2 * bilinear_n) return "w" + std::to_string(idx - bilinear_n + 1);
  return "y";
}

const char* lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

std::array<LpRow, 4> mccormick_rows(int j, const Box& box, int n) {
  if (j < 0 || j >= n || n <= 0 || static_cast<int>(box.xlo.size()) != n ||
      static_cast<int>(box.xhi.size()) != n) {
    throw Error(ErrorCode::BadArgument, "bad envelope index or box shape")
        .with_int("index", j + 1);
  }
  const Rational& xl = box.xlo[j];
  const Rational& xh = box.xhi[j];
  const Rational& yl = box.ylo;
  const Rational& yh = box.yhi;
  if (xh < xl) {
    throw Error(ErrorCode::BadBox, "empty interval for x")
        .with_int("index", j + 1);
  }
  if (yh < yl) {
    throw Error(ErrorCode::BadBox, "empty interval for y");
  }

  const int nv = 2 * n + 1;
  const int xcol = j;
  const int wcol = n + j;
  const int ycol = 2 * n;
  std::array<LpRow, 4> rows;
  // Each inequality is stated with w_j on the left:
  //   w_j - y_corner * x_j - x_corner * y  (rel)  -x_corner * y_corner
  const Rational corners[4][2] = {
      {xl, yl}, {xh, yh}, {xh, yl}, {xl, yh}};
  const Rel rels[4] = {Rel::Ge, Rel::Ge, Rel::Le, Rel::Le};
  for (int k = 0; k < 4; ++k) {
    LpRow row;
    row.coeffs.assign(nv, Rational(0));
    row.coeffs[wcol] = Rational(1);
    row.coeffs[xcol] = Rational(0) - corners[k][1];
    row.coeffs[ycol] = Rational(0) - corners[k][0];
    row.rel = rels[k];
    row.rhs = Rational(0) - corners[k][0] * corners[k][1];
    row.kind = RowKind::Envelope;
    rows[k] = row;
  }
  return rows;
}

LinearProgram build_relaxation(const BilinearSystem& system, RelaxMode mode) {
  if (!system.bounds().has_value()) {
    throw Error(ErrorCode::MissingBounds,
                "relaxation requires box bounds on x and y");
  }
  if (!system.objective().has_value()) {
    throw Error(ErrorCode::MissingObjective,
                "relaxation requires a linear objective");
  }
  const Box& box = *system.bounds();
  const Objective& obj = *system.objective();
  const int m = system.m();
  const int n = system.n();
  const int nv = 2 * n + 1;

  LinearProgram lp;
  lp.bilinear_n = n;
  lp.sense = obj.sense;
  lp.objective.reserve(nv);
  lp.objective.insert(lp.objective.end(), obj.x.begin(), obj.x.end());
  lp.objective.insert(lp.objective.end(), obj.w.begin(), obj.w.end());
  lp.objective.push_back(obj.y);

  // Ax = b on the x block.
  for (int i = 0; i < m; ++i) {
    LpRow row;
    row.coeffs.assign(nv, Rational(0));
    for (int j = 0; j < n; ++j) row.coeffs[j] = system.a()(i, j);
    row.rel = Rel::Eq;
    row.rhs = system.b()[i];
    row.kind = RowKind::Linear;
    lp.rows.push_back(std::move(row));
  }

  std::vector<int> envelope_indices;
  if (mode == RelaxMode::Full) {
    envelope_indices.resize(n);
    for (int j = 0; j < n; ++j) envelope_indices[j] = j;
  } else {
    // Aw - by = 0 on the (w, y) block.
    for (int i = 0; i < m; ++i) {
      LpRow row;
      row.coeffs.assign(nv, Rational(0));
      for (int j = 0; j < n; ++j) row.coeffs[n + j] = system.a()(i, j);
      row.coeffs[2 * n] = Rational(0) - system.b()[i];
      row.rel = Rel::Eq;
      row.rhs = Rational(0);
      row.kind = RowKind::Reduction;
      lp.rows.push_back(std::move(row));
    }
    envelope_indices = compute_reduction(system).j_set;
  }

  for (int j : envelope_indices) {
    for (LpRow& row : mccormick_rows(j, box, n)) {
      lp.rows.push_back(std::move(row));
    }
  }

  // Variable bounds: x and y straight from the box, w from the extreme
  // corner products of its interval pair.
  lp.var_bounds.assign(nv, VarBound{});
  for (int j = 0; j < n; ++j) {
    lp.var_bounds[j] = VarBound{box.xlo[j], box.xhi[j]};
  }
  for (int j = 0; j < n; ++j) {
    const Rational products[4] = {box.xlo[j] * box.ylo, box.xlo[j] * box.yhi,
                                  box.xhi[j] * box.ylo, box.xhi[j] * box.yhi};
    Rational lo = products[0];
    Rational hi = products[0];
    for (int k = 1; k < 4; ++k) {
      if (products[k] < lo) lo = products[k];
      if (hi < products[k]) hi = products[k];
    }
    lp.var_bounds[n + j] = VarBound{lo, hi};
  }
  lp.var_bounds[2 * n] = VarBound{box.ylo, box.yhi};
  return lp;
}

namespace {

ModeReport report_for(const BilinearSystem& system, RelaxMode mode,
                      bool solve) {
  const LinearProgram lp = build_relaxation(system, mode);
  ModeReport report;
  report.rows = static_cast<int>(lp.rows.size());
  for (const LpRow& row : lp.rows) {
    if (row.kind == RowKind::Envelope) {
      ++report.envelope_rows;
    } else {
      ++report.linear_rows;
    }
  }
  if (solve) report.solution = solve_lp(lp);
  return report;
}

}  // namespace

ComparisonReport compare_relaxations(const BilinearSystem& system,
                                     bool solve) {
  ComparisonReport report;
  report.full = report_for(system, RelaxMode::Full, solve);
  report.reduced = report_for(system, RelaxMode::Reduced, solve);
  report.bilinear_terms_replaced = system.m();
  return report;
}

}  // namespace bilred
