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

#include "system.h"

#include <functional>
#include <vector>

#include "doctest.h"
#include "error.h"
#include "rng.h"
#include "test_helpers.h"

namespace bilred {
namespace {

using testing::mat;
using testing::rat;

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a throw");
  return ErrorCode::Internal;
}

TEST_SUITE("model") {

TEST_CASE("create accepts a full-row-rank wide system") {
  const BilinearSystem sys =
      BilinearSystem::create(mat({{1, 1}}), {rat(1)});
  CHECK(sys.m() == 1);
  CHECK(sys.n() == 2);
  CHECK(sys.a() == mat({{1, 1}}));
  CHECK(sys.b() == Vector{rat(1)});
  CHECK_FALSE(sys.bounds().has_value());
  CHECK_FALSE(sys.objective().has_value());
}

TEST_CASE("create rejects bad shapes") {
  CHECK(code_of([] {
          BilinearSystem::create(Matrix(0, 0), {});
        }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] {
          BilinearSystem::create(mat({{1}, {1}}), {rat(1), rat(1)});
        }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] {
          BilinearSystem::create(mat({{1, 1}}), {rat(1), rat(2)});
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("create rejects rank-deficient rows with details") {
  try {
    BilinearSystem::create(mat({{1, 2, 3}, {2, 4, 6}}), {rat(0), rat(0)});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
    CHECK(e.int_detail("rank") == 1);
    CHECK(e.int_detail("m") == 2);
  }
}

TEST_CASE("rank-deficient input always fails, full-rank always succeeds") {
  for (uint64_t s = 0; s < 40; ++s) {
    // random_system already rejection-samples to full rank, so its result
    // constructs; duplicating a row makes construction fail.
    const BilinearSystem sys = testing::random_system(41, s);
    Matrix stacked(sys.m() + 1, sys.n());
    for (int i = 0; i < sys.m(); ++i) {
      for (int j = 0; j < sys.n(); ++j) stacked(i, j) = sys.a()(i, j);
    }
    for (int j = 0; j < sys.n(); ++j) stacked(sys.m(), j) = sys.a()(0, j);
    Vector b = sys.b();
    b.push_back(sys.b()[0]);
    if (sys.m() + 1 > sys.n()) {
      CHECK(code_of([&] { BilinearSystem::create(stacked, b); }) ==
            ErrorCode::DimensionMismatch);
    } else {
      CHECK(code_of([&] { BilinearSystem::create(stacked, b); }) ==
            ErrorCode::RankDeficient);
    }
  }
}

TEST_CASE("create validates bounds and objective lengths") {
  Box box;
  box.xlo = {rat(0)};
  box.xhi = {rat(1)};
  box.ylo = rat(0);
  box.yhi = rat(1);
  CHECK(code_of([&] {
          BilinearSystem::create(mat({{1, 1}}), {rat(1)}, box);
        }) == ErrorCode::DimensionMismatch);

  Box empty;
  empty.xlo = {rat(1), rat(0)};
  empty.xhi = {rat(0), rat(1)};
  empty.ylo = rat(0);
  empty.yhi = rat(1);
  CHECK(code_of([&] {
          BilinearSystem::create(mat({{1, 1}}), {rat(1)}, empty);
        }) == ErrorCode::BadBox);

  Box flipped_y;
  flipped_y.xlo = {rat(0), rat(0)};
  flipped_y.xhi = {rat(1), rat(1)};
  flipped_y.ylo = rat(2);
  flipped_y.yhi = rat(1);
  CHECK(code_of([&] {
          BilinearSystem::create(mat({{1, 1}}), {rat(1)}, flipped_y);
        }) == ErrorCode::BadBox);

  Objective obj;
  obj.x = {rat(1)};
  obj.w = {rat(0), rat(0)};
  obj.y = rat(0);
  CHECK(code_of([&] {
          BilinearSystem::create(mat({{1, 1}}), {rat(1)}, std::nullopt, obj);
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("a degenerate box with equal endpoints is accepted") {
  Box box;
  box.xlo = {rat(1, 2), rat(0)};
  box.xhi = {rat(1, 2), rat(1)};
  box.ylo = rat(3);
  box.yhi = rat(3);
  const BilinearSystem sys =
      BilinearSystem::create(mat({{1, 1}}), {rat(1)}, box);
  CHECK(sys.bounds()->xlo[0] == rat(1, 2));
  CHECK(sys.bounds()->yhi == rat(3));
}

}  // TEST_SUITE

}  // namespace
}  // namespace bilred
