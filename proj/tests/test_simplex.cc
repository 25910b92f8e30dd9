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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "error.h"
#include "relax.h"
#include "test_helpers.h"

namespace bilred {
namespace {

using testing::mat;
using testing::rat;

// Hand-rolled LP over `vars` free variables (bilinear_n stays 0 only for
// single-variable programs; otherwise we size through it).
LinearProgram raw_lp(int vars, Sense sense, Vector objective) {
  LinearProgram lp;
  // num_vars() = 2 * bilinear_n + 1, so odd variable counts embed exactly.
  lp.bilinear_n = (vars - 1) / 2;
  REQUIRE(lp.num_vars() == vars);
  lp.sense = sense;
  lp.objective = std::move(objective);
  lp.var_bounds.assign(vars, VarBound{});
  return lp;
}

void add_row(LinearProgram& lp, Vector coeffs, Rel rel, Rational rhs) {
  LpRow row;
  row.coeffs = std::move(coeffs);
  row.rel = rel;
  row.rhs = std::move(rhs);
  lp.rows.push_back(row);
}

bool feasible_at(const LinearProgram& lp, const Vector& point) {
  for (const LpRow& row : lp.rows) {
    const Rational lhs = dot(row.coeffs, point);
    if (row.rel == Rel::Le && lhs > row.rhs) return false;
    if (row.rel == Rel::Ge && lhs < row.rhs) return false;
    if (row.rel == Rel::Eq && lhs != row.rhs) return false;
  }
  for (int v = 0; v < lp.num_vars(); ++v) {
    if (lp.var_bounds[v].lo && point[v] < *lp.var_bounds[v].lo) return false;
    if (lp.var_bounds[v].hi && point[v] > *lp.var_bounds[v].hi) return false;
  }
  return true;
}

TEST_SUITE("simplex") {

TEST_CASE("a one-row minimum lands on the constraint") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(1)});
  add_row(lp, {rat(1)}, Rel::Ge, rat(2));
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == rat(2));
  CHECK(sol.point == Vector{rat(2)});
}

TEST_CASE("contradictory rows are infeasible") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(1)});
  add_row(lp, {rat(1)}, Rel::Ge, rat(1));
  add_row(lp, {rat(1)}, Rel::Le, rat(0));
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("crossed variable bounds are infeasible") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(1)});
  lp.var_bounds[0].lo = rat(1);
  lp.var_bounds[0].hi = rat(0);
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("a missing bound in the improving direction is unbounded") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(-1)});
  add_row(lp, {rat(1)}, Rel::Ge, rat(0));
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("maximization negates cleanly") {
  LinearProgram lp = raw_lp(1, Sense::Max, {rat(1)});
  add_row(lp, {rat(1)}, Rel::Le, rat(5));
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == rat(5));

  LinearProgram square = raw_lp(3, Sense::Max, {rat(1), rat(0), rat(1)});
  for (int v = 0; v < 3; ++v) {
    square.var_bounds[v].lo = rat(0);
    square.var_bounds[v].hi = rat(1);
  }
  const LpSolution corner = solve_lp(square);
  REQUIRE(corner.status == LpStatus::Optimal);
  CHECK(corner.value == rat(2));
}

TEST_CASE("equality rows and two-sided bounds work together") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(1)});
  lp.var_bounds[0].lo = rat(-3);
  lp.var_bounds[0].hi = rat(7);
  add_row(lp, {rat(1)}, Rel::Eq, rat(2));
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == rat(2));
  CHECK(sol.point == Vector{rat(2)});
}

TEST_CASE("duplicated equality rows are tolerated") {
  LinearProgram lp = raw_lp(1, Sense::Min, {rat(1)});
  add_row(lp, {rat(1)}, Rel::Eq, rat(1));
  add_row(lp, {rat(1)}, Rel::Eq, rat(1));
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == rat(1));
}

TEST_CASE("fractional data stays exact end to end") {
  // min x + y subject to 2x + 3y >= 1, x >= 1/7, y >= 1/11: tight rows give
  // exact small fractions no float path would reproduce.
  LinearProgram lp = raw_lp(3, Sense::Min, {rat(1), rat(0), rat(1)});
  lp.objective = {rat(1), rat(0), rat(1)};
  add_row(lp, {rat(2), rat(0), rat(3)}, Rel::Ge, rat(1));
  lp.var_bounds[0].lo = rat(1, 7);
  lp.var_bounds[2].lo = rat(1, 11);
  lp.var_bounds[1].lo = rat(0);
  lp.var_bounds[1].hi = rat(0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(feasible_at(lp, sol.point));
  CHECK(sol.value == dot(lp.objective, sol.point));
  // Optimum: y at its bound once 2x + 3y reaches 1, or x at its bound --
  // the cheaper corner is x = 1/7, y = max(1/11, (1 - 2/7)/3 = 5/21).
  CHECK(sol.value == rat(1, 7) + rat(5, 21));
}

TEST_CASE("the relaxation golden: minimal w1 over the unit box is zero") {
  Box box;
  box.xlo = {rat(0), rat(0)};
  box.xhi = {rat(1), rat(1)};
  box.ylo = rat(0);
  box.yhi = rat(1);
  Objective obj;
  obj.x = {rat(0), rat(0)};
  obj.w = {rat(1), rat(0)};
  obj.y = rat(0);
  const BilinearSystem sys =
      BilinearSystem::create(mat({{1, 1}}), {rat(1)}, box, obj);
  for (RelaxMode mode : {RelaxMode::Full, RelaxMode::Reduced}) {
    const LinearProgram lp = build_relaxation(sys, mode);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == rat(0));
    CHECK(feasible_at(lp, sol.point));
  }
}

TEST_CASE("optimal points are feasible and reproduce the value") {
  for (uint64_t s = 0; s < 20; ++s) {
    const testing::BoxedInstance inst = testing::random_boxed_system(107, s);
    for (RelaxMode mode : {RelaxMode::Full, RelaxMode::Reduced}) {
      const LinearProgram lp = build_relaxation(inst.system, mode);
      const LpSolution sol = solve_lp(lp);
      REQUIRE(sol.status == LpStatus::Optimal);
      CHECK(feasible_at(lp, sol.point));
      CHECK(sol.value == dot(lp.objective, sol.point));
    }
  }
}

TEST_CASE("optima agree with the vertex-enumeration oracle") {
  // Single-coupling instances keep the enumeration tiny (3 variables).
  for (uint64_t s = 0; s < 16; ++s) {
    const testing::BoxedInstance inst =
        testing::random_boxed_system(109, s, /*max_n=*/1);
    for (RelaxMode mode : {RelaxMode::Full, RelaxMode::Reduced}) {
      const LinearProgram lp = build_relaxation(inst.system, mode);
      const LpSolution sol = solve_lp(lp);
      const std::optional<Rational> oracle =
          testing::vertex_oracle_optimum(lp);
      REQUIRE(sol.status == LpStatus::Optimal);
      REQUIRE(oracle.has_value());
      CHECK(sol.value == *oracle);
    }
  }
}

TEST_CASE("row order does not change the optimum") {
  for (uint64_t s = 0; s < 12; ++s) {
    const testing::BoxedInstance inst = testing::random_boxed_system(113, s);
    const LinearProgram lp = build_relaxation(inst.system, RelaxMode::Full);
    const LpSolution before = solve_lp(lp);
    LinearProgram shuffled = lp;
    std::reverse(shuffled.rows.begin(), shuffled.rows.end());
    const LpSolution after = solve_lp(shuffled);
    REQUIRE(before.status == LpStatus::Optimal);
    REQUIRE(after.status == LpStatus::Optimal);
    CHECK(before.value == after.value);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  LinearProgram lp = raw_lp(3, Sense::Min, {rat(1), rat(0)});
  CHECK_THROWS_AS(solve_lp(lp), Error);
  LinearProgram bad_row = raw_lp(1, Sense::Min, {rat(1)});
  add_row(bad_row, {rat(1), rat(2)}, Rel::Ge, rat(0));
  CHECK_THROWS_AS(solve_lp(bad_row), Error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace bilred
