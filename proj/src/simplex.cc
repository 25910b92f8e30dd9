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

#include "simplex.h"

#include <utility>
#include <vector>

#include "error.h"
#include "matrix.h"

namespace bilred {
namespace {

// One original variable expressed through nonnegative standard variables:
//   bounded below:        v = offset + s[pos]
//   bounded above only:   v = offset - s[pos]
//   free:                 v = s[pos] - s[neg]
struct VarMap {
  Rational offset;
  int sign = 1;
  int pos = -1;
  int neg = -1;  // second standard variable for free variables
};

struct StdRow {
  Vector coeffs;  // over standard variables
  Rel rel = Rel::Eq;
  Rational rhs;
};

struct Tableau {
  std::vector<Vector> rows;  // each of length `total`, rhs in the last column
  Vector cost;               // reduced costs; cost[rhs] = -objective value
  std::vector<int> basis;    // basis[r] = column basic in row r
  int total = 0;

  int rhs_col() const { return total - 1; }
};

void pivot(Tableau& t, int row, int col, bool update_cost) {
  Vector& prow = t.rows[row];
  const Rational piv = prow[col];
  for (Rational& v : prow) v = v / piv;
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
    if (r == row) continue;
    const Rational factor = t.rows[r][col];
    if (factor.is_zero()) continue;
    for (int c = 0; c < t.total; ++c) {
      t.rows[r][c] = t.rows[r][c] - factor * prow[c];
    }
  }
  if (update_cost) {
    const Rational factor = t.cost[col];
    if (!factor.is_zero()) {
      for (int c = 0; c < t.total; ++c) {
        t.cost[c] = t.cost[c] - factor * prow[c];
      }
    }
  }
  t.basis[row] = col;
}

// Bland's rule: entering column = smallest index with negative reduced cost
// among [0, allowed_end); leaving row = minimum ratio, ties broken by the
// smallest basic column index. Returns false when the program is unbounded
// in the entering direction.
bool run_simplex(Tableau& t, int allowed_end) {
  for (;;) {
    int enter = -1;
    for (int c = 0; c < allowed_end; ++c) {
      if (t.cost[c].sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;

    int leave = -1;
    Rational best;
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
      const Rational& a = t.rows[r][enter];
      if (a.sign() <= 0) continue;
      Rational ratio = t.rows[r][t.rhs_col()] / a;
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[r] < t.basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    pivot(t, leave, enter, /*update_cost=*/true);
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int nv = lp.num_vars();
  if (static_cast<int>(lp.objective.size()) != nv ||
      static_cast<int>(lp.var_bounds.size()) != nv) {
    throw Error(ErrorCode::DimensionMismatch,
                "objective and bounds must cover every variable");
  }
  for (const LpRow& row : lp.rows) {
    if (static_cast<int>(row.coeffs.size()) != nv) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row width does not match the variable count");
    }
  }
  for (const VarBound& vb : lp.var_bounds) {
    if (vb.lo && vb.hi && *vb.hi < *vb.lo) {
      return LpSolution{LpStatus::Infeasible, Rational(0), {}};
    }
  }

  // Map every variable onto nonnegative standard variables. Two-sided
  // bounds keep the lower bound in the shift and add an upper-bound row.
  std::vector<VarMap> vmap(nv);
  std::vector<std::pair<int, Rational>> upper_rows;
  int ns = 0;
  for (int i = 0; i < nv; ++i) {
    const VarBound& vb = lp.var_bounds[i];
    VarMap vm;
    if (vb.lo) {
      vm.offset = *vb.lo;
      vm.sign = 1;
      vm.pos = ns++;
      if (vb.hi) upper_rows.emplace_back(vm.pos, *vb.hi - *vb.lo);
    } else if (vb.hi) {
      vm.offset = *vb.hi;
      vm.sign = -1;
      vm.pos = ns++;
    } else {
      vm.offset = Rational(0);
      vm.sign = 1;
      vm.pos = ns++;
      vm.neg = ns++;
    }
    vmap[i] = vm;
  }

  std::vector<StdRow> srows;
  srows.reserve(lp.rows.size() + upper_rows.size());
  for (const LpRow& row : lp.rows) {
    StdRow sr;
    sr.coeffs.assign(ns, Rational(0));
    sr.rel = row.rel;
    sr.rhs = row.rhs;
    for (int i = 0; i < nv; ++i) {
      const Rational& a = row.coeffs[i];
      if (a.is_zero()) continue;
      sr.rhs = sr.rhs - a * vmap[i].offset;
      if (vmap[i].sign > 0) {
        sr.coeffs[vmap[i].pos] = sr.coeffs[vmap[i].pos] + a;
      } else {
        sr.coeffs[vmap[i].pos] = sr.coeffs[vmap[i].pos] - a;
      }
      if (vmap[i].neg >= 0) {
        sr.coeffs[vmap[i].neg] = sr.coeffs[vmap[i].neg] - a;
      }
    }
    srows.push_back(std::move(sr));
  }
  for (const auto& [pos, ub] : upper_rows) {
    StdRow sr;
    sr.coeffs.assign(ns, Rational(0));
    sr.coeffs[pos] = Rational(1);
    sr.rel = Rel::Le;
    sr.rhs = ub;
    srows.push_back(std::move(sr));
  }

  // Standard objective; maximization is solved as minimization of the
  // negated costs, the reported value is recomputed from the point.
  Vector cstd(ns, Rational(0));
  for (int i = 0; i < nv; ++i) {
    const Rational& c = lp.objective[i];
    if (c.is_zero()) continue;
    if (vmap[i].sign > 0) {
      cstd[vmap[i].pos] = cstd[vmap[i].pos] + c;
    } else {
      cstd[vmap[i].pos] = cstd[vmap[i].pos] - c;
    }
    if (vmap[i].neg >= 0) cstd[vmap[i].neg] = cstd[vmap[i].neg] - c;
  }
  if (lp.sense == Sense::Max) {
    for (Rational& c : cstd) c = Rational(0) - c;
  }

  // Normalize right-hand sides to be nonnegative.
  for (StdRow& sr : srows) {
    if (sr.rhs.sign() < 0) {
      for (Rational& c : sr.coeffs) c = Rational(0) - c;
      sr.rhs = Rational(0) - sr.rhs;
      if (sr.rel == Rel::Le) {
        sr.rel = Rel::Ge;
      } else if (sr.rel == Rel::Ge) {
        sr.rel = Rel::Le;
      }
    }
  }

  const int nrows = static_cast<int>(srows.size());
  int n_extra = 0;  // slack + surplus columns
  int n_art = 0;
  for (const StdRow& sr : srows) {
    if (sr.rel != Rel::Eq) ++n_extra;
    if (sr.rel != Rel::Le) ++n_art;
  }
  const int first_art = ns + n_extra;
  Tableau t;
  t.total = ns + n_extra + n_art + 1;
  t.rows.assign(nrows, Vector());
  t.basis.assign(nrows, -1);
  int next_extra = ns;
  int next_art = first_art;
  for (int r = 0; r < nrows; ++r) {
    Vector& row = t.rows[r];
    row.assign(t.total, Rational(0));
    for (int c = 0; c < ns; ++c) row[c] = srows[r].coeffs[c];
    row[t.rhs_col()] = srows[r].rhs;
    if (srows[r].rel == Rel::Le) {
      row[next_extra] = Rational(1);
      t.basis[r] = next_extra++;
    } else if (srows[r].rel == Rel::Ge) {
      row[next_extra] = Rational(-1);
      ++next_extra;
      row[next_art] = Rational(1);
      t.basis[r] = next_art++;
    } else {
      row[next_art] = Rational(1);
      t.basis[r] = next_art++;
    }
  }

  if (n_art > 0) {
    // Phase 1: minimize the sum of the artificial variables.
    t.cost.assign(t.total, Rational(0));
    for (int c = first_art; c < t.total - 1; ++c) t.cost[c] = Rational(1);
    for (int r = 0; r < nrows; ++r) {
      if (t.basis[r] < first_art) continue;
      for (int c = 0; c < t.total; ++c) {
        t.cost[c] = t.cost[c] - t.rows[r][c];
      }
    }
    if (!run_simplex(t, t.total - 1)) {
      throw Error(ErrorCode::Internal, "phase one reported unbounded");
    }
    // Remaining infeasibility = -cost[rhs].
    if (!t.cost[t.rhs_col()].is_zero()) {
      return LpSolution{LpStatus::Infeasible, Rational(0), {}};
    }
    // Drive artificial variables out of the basis; rows that cannot pivot
    // on any original column are redundant and get dropped.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
      if (t.basis[r] < first_art) continue;
      int col = -1;
      for (int c = 0; c < first_art; ++c) {
        if (!t.rows[r][c].is_zero()) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        pivot(t, r, col, /*update_cost=*/false);
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
  }

  // Phase 2 over the original costs, with artificial columns blocked.
  t.cost.assign(t.total, Rational(0));
  for (int c = 0; c < ns; ++c) t.cost[c] = cstd[c];
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
    const Rational factor = t.cost[t.basis[r]];
    if (factor.is_zero()) continue;
    for (int c = 0; c < t.total; ++c) {
      t.cost[c] = t.cost[c] - factor * t.rows[r][c];
    }
  }
  if (!run_simplex(t, first_art)) {
    return LpSolution{LpStatus::Unbounded, Rational(0), {}};
  }

  Vector xstd(static_cast<size_t>(t.total - 1), Rational(0));
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
    xstd[t.basis[r]] = t.rows[r][t.rhs_col()];
  }
  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.point.assign(nv, Rational(0));
  for (int i = 0; i < nv; ++i) {
    Rational v = xstd[vmap[i].pos];
    if (vmap[i].sign < 0) v = Rational(0) - v;
    if (vmap[i].neg >= 0) v = v - xstd[vmap[i].neg];
    solution.point[i] = vmap[i].offset + v;
  }
  solution.value = dot(lp.objective, solution.point);
  return solution;
}

}  // namespace bilred
