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

#include "reduction.h"

#include <algorithm>

#include "error.h"
#include "gauss.h"

namespace bilred {

std::vector<int> complement_of(const std::vector<int>& j_set, int n) {
  std::vector<bool> in_j(n, false);
  for (int j : j_set) in_j[j] = true;
  std::vector<int> out;
  out.reserve(n - j_set.size());
  for (int j = 0; j < n; ++j) {
    if (!in_j[j]) out.push_back(j);
  }
  return out;
}

void validate_index_set(const BilinearSystem& system,
                        const std::vector<int>& j_set) {
  const int n = system.n();
  const int expected = n - system.m();
  if (static_cast<int>(j_set.size()) != expected) {
    throw Error(ErrorCode::BadIndexSet,
                "J must have size n - m = " + std::to_string(expected) +
                    ", got " + std::to_string(j_set.size()));
  }
  std::vector<bool> seen(n, false);
  for (int j : j_set) {
    if (j < 0 || j >= n) {
      throw Error(ErrorCode::BadIndexSet,
                  "index " + std::to_string(j + 1) + " outside 1..=" +
                      std::to_string(n));
    }
    if (seen[j]) {
      throw Error(ErrorCode::BadIndexSet,
                  "duplicate index " + std::to_string(j + 1));
    }
    seen[j] = true;
  }
}

ReducedSystem compute_reduction(const BilinearSystem& system) {
  const int m = system.m();
  const int n = system.n();
  EliminationResult elim = eliminate(system.a(), system.b());
  ReducedSystem reduced;
  reduced.j_set.assign(elim.sigma.begin() + m, elim.sigma.end());
  std::sort(reduced.j_set.begin(), reduced.j_set.end());
  reduced.basic = complement_of(reduced.j_set, n);
  reduced.reduction_a = system.a();
  reduced.reduction_b = system.b();
  return reduced;
}

bool is_valid_j(const BilinearSystem& system, const std::vector<int>& j_set) {
  validate_index_set(system, j_set);
  std::vector<int> sorted = j_set;
  std::sort(sorted.begin(), sorted.end());
  const Matrix block = system.a().select_cols(complement_of(sorted, system.n()));
  return !det(block).is_zero();
}

std::optional<SamplePoint> witness_nonequivalence(
    const BilinearSystem& system, const std::vector<int>& j_set) {
  if (is_valid_j(system, j_set)) return std::nullopt;
  std::vector<int> sorted = j_set;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<int> basic = complement_of(sorted, system.n());

  // The basic column block is singular, so it has a nonzero kernel vector;
  // embedding it with zeros on j_set gives z in null(A) with z_j = 0 on J.
  const std::vector<Vector> kernel =
      nullspace_basis(system.a().select_cols(basic));
  Vector z(system.n(), Rational(0));
  for (size_t k = 0; k < basic.size(); ++k) z[basic[k]] = kernel.front()[k];

  // Normalize so the first nonzero entry is 1.
  for (const Rational& entry : z) {
    if (!entry.is_zero()) {
      z = scale(z, Rational(1) / entry);
      break;
    }
  }

  const AffineParam param = affine_parametrize(system.a(), system.b());
  SamplePoint point;
  point.x = param.x0;
  point.y = Rational(1);
  point.w = add(param.x0, z);
  return point;
}

}  // namespace bilred
