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

#include "lp_writer.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "error.h"
#include "relax.h"
#include "test_helpers.h"

namespace bilred {
namespace {

using testing::mat;
using testing::rat;

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

int count_constraint_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.find(" c") == 0 && line.find(':') != std::string::npos) ++count;
  }
  return count;
}

BilinearSystem unit_box_system() {
  Box box;
  box.xlo = {rat(0), rat(0)};
  box.xhi = {rat(1), rat(1)};
  box.ylo = rat(0);
  box.yhi = rat(1);
  Objective obj;
  obj.x = {rat(0), rat(0)};
  obj.w = {rat(1), rat(0)};
  obj.y = rat(0);
  return BilinearSystem::create(mat({{1, 1}}), {rat(1)}, box, obj);
}

TEST_SUITE("lp_writer") {

TEST_CASE("decimal_string prints terminating expansions exactly") {
  CHECK(decimal_string(rat(7)) == "7");
  CHECK(decimal_string(rat(-7)) == "-7");
  CHECK(decimal_string(rat(1, 2)) == "0.5");
  CHECK(decimal_string(rat(-3, 2)) == "-1.5");
  CHECK(decimal_string(rat(1, 8)) == "0.125");
  CHECK(decimal_string(rat(0)) == "0");
}

TEST_CASE("decimal_string rounds repeating expansions at 17 digits") {
  CHECK(decimal_string(rat(1, 3)) == "0.33333333333333333");
  CHECK(decimal_string(rat(2, 3)) == "0.66666666666666667");
  CHECK(decimal_string(rat(1, 7)) == "0.14285714285714286");
  CHECK(decimal_string(rat(-1, 3)) == "-0.33333333333333333");
}

TEST_CASE("decimal_string carries rounding through the integer part") {
  const Rational nearly_one =
      Rational::parse("299999999999999999/300000000000000000", "t");
  CHECK(decimal_string(nearly_one) == "1");
}

TEST_CASE("render_lp emits the pinned skeleton") {
  LinearProgram lp;
  lp.bilinear_n = 0;  // a single variable: y
  lp.sense = Sense::Min;
  lp.objective = {rat(1)};
  LpRow row;
  row.coeffs = {rat(1)};
  row.rel = Rel::Ge;
  row.rhs = rat(2);
  lp.rows = {row};
  lp.var_bounds.assign(1, VarBound{});
  const std::string text = render_lp(lp);
  CHECK(contains(text, "Minimize"));
  CHECK(contains(text, "obj: y"));
  CHECK(contains(text, "Subject To"));
  CHECK(contains(text, "c1: y >= 2"));
  CHECK(contains(text, "End"));
}

TEST_CASE("full mode renders one constraint line per row") {
  const std::string full =
      render_lp(build_relaxation(unit_box_system(), RelaxMode::Full));
  CHECK(count_constraint_lines(full) == 9);
  const std::string reduced =
      render_lp(build_relaxation(unit_box_system(), RelaxMode::Reduced));
  CHECK(count_constraint_lines(reduced) == 6);
}

TEST_CASE("unit coefficients drop the scalar, others keep it") {
  const std::string text =
      render_lp(build_relaxation(unit_box_system(), RelaxMode::Full));
  CHECK(contains(text, "c1: x1 + x2 = 1"));
  // The unit-box envelope of w1: w1 - x1 - y >= -1.
  CHECK(contains(text, "- x1 + w1 - y >= -1"));
}

TEST_CASE("non-decimal rationals carry an exact-form comment") {
  LinearProgram lp;
  lp.bilinear_n = 0;
  lp.sense = Sense::Min;
  lp.objective = {rat(1)};
  LpRow row;
  row.coeffs = {rat(1, 3)};
  row.rel = Rel::Ge;
  row.rhs = rat(2, 3);
  lp.rows = {row};
  lp.var_bounds.assign(1, VarBound{});
  const std::string text = render_lp(lp);
  CHECK(contains(text, "0.33333333333333333 y >= 0.66666666666666667"));
  CHECK(contains(text, "\\ exact:"));
  CHECK(contains(text, "1/3"));
  CHECK(contains(text, "2/3"));

  // Terminating values stay comment-free.
  const std::string clean =
      render_lp(build_relaxation(unit_box_system(), RelaxMode::Full));
  CHECK_FALSE(contains(clean, "\\ exact:"));
}

TEST_CASE("bounds section covers every bound shape") {
  LinearProgram lp;
  lp.bilinear_n = 1;  // variables x1, w1, y
  lp.sense = Sense::Max;
  lp.objective = {rat(1), rat(0), rat(0)};
  LpRow row;
  row.coeffs = {rat(1), rat(1), rat(1)};
  row.rel = Rel::Le;
  row.rhs = rat(10);
  lp.rows = {row};
  lp.var_bounds.assign(3, VarBound{});
  lp.var_bounds[0].lo = rat(0);
  lp.var_bounds[0].hi = rat(1);
  lp.var_bounds[1].lo = rat(-2);
  lp.var_bounds[2].hi = rat(5);
  const std::string text = render_lp(lp);
  CHECK(contains(text, "Maximize"));
  CHECK(contains(text, "Bounds"));
  CHECK(contains(text, "0 <= x1 <= 1"));
  CHECK(contains(text, "w1 >= -2"));
  CHECK(contains(text, "y <= 5"));
}

TEST_CASE("rendering is deterministic") {
  const LinearProgram lp = build_relaxation(unit_box_system(), RelaxMode::Full);
  CHECK(render_lp(lp) == render_lp(lp));
}

TEST_CASE("emit_lp_file writes exactly the rendered bytes") {
  const LinearProgram lp = build_relaxation(unit_box_system(), RelaxMode::Full);
  const std::string path = "test_lp_writer_out.lp";
  emit_lp_file(lp, path);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == render_lp(lp));
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("emit_lp_file reports unwritable paths") {
  const LinearProgram lp = build_relaxation(unit_box_system(), RelaxMode::Full);
  try {
    emit_lp_file(lp, "no_such_directory/out.lp");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace bilred
