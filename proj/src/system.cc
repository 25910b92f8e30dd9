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

#include "error.h"
#include "gauss.h"

namespace bilred {

BilinearSystem BilinearSystem::create(Matrix a, Vector b,
                                      std::optional<Box> bounds,
                                      std::optional<Objective> objective) {
  const int m = a.rows();
  const int n = a.cols();
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "A must be nonempty, got " + std::to_string(m) + "x" +
                    std::to_string(n));
  }
  if (m > n) {
    throw Error(ErrorCode::DimensionMismatch,
                "m = " + std::to_string(m) + " exceeds n = " +
                    std::to_string(n) + "; full row rank requires m <= n");
  }
  if (static_cast<int>(b.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "A has " + std::to_string(m) + " rows but b has length " +
                    std::to_string(b.size()));
  }
  const int r = rank(a);
  if (r < m) {
    throw Error(ErrorCode::RankDeficient,
                "rank(A) = " + std::to_string(r) + " < m = " +
                    std::to_string(m))
        .with_int("rank", r)
        .with_int("m", m);
  }
  if (bounds.has_value()) {
    const Box& box = *bounds;
    if (static_cast<int>(box.xlo.size()) != n ||
        static_cast<int>(box.xhi.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "bounds.x must list " + std::to_string(n) + " intervals");
    }
    for (int j = 0; j < n; ++j) {
      if (box.xhi[j] < box.xlo[j]) {
        throw Error(ErrorCode::BadBox, "empty interval for x" +
                                           std::to_string(j + 1) + ": [" +
                                           box.xlo[j].str() + ", " +
                                           box.xhi[j].str() + "]");
      }
    }
    if (box.yhi < box.ylo) {
      throw Error(ErrorCode::BadBox, "empty interval for y: [" +
                                         box.ylo.str() + ", " +
                                         box.yhi.str() + "]");
    }
  }
  if (objective.has_value()) {
    if (static_cast<int>(objective->x.size()) != n ||
        static_cast<int>(objective->w.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "objective.x and objective.w must have length " +
                      std::to_string(n));
    }
  }
  return BilinearSystem(std::move(a), std::move(b), std::move(bounds),
                        std::move(objective));
}

}  // namespace bilred
