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

#ifndef BILRED_SRC_REDUCTION_H_
#define BILRED_SRC_REDUCTION_H_

#include <optional>
#include <vector>

#include "system.h"

namespace bilred {

// Reformulated system: the m linear rows A w - b y = 0 replace the bilinear
// couplings on the `basic` indices, and only the n - m couplings indexed by
// `j_set` are retained. All index vectors are 0-based and sorted ascending.
struct ReducedSystem {
  std::vector<int> j_set;  // retained bilinear indices, size n - m
  std::vector<int> basic;  // complement, size m; its column block of A is
                           // nonsingular
  Matrix reduction_a;      // row i encodes sum_j A(i,j) w_j - b_i y = 0
  Vector reduction_b;
};

// Sorted complement of a (validated) index set within {0, ..., n-1}.
std::vector<int> complement_of(const std::vector<int>& j_set, int n);

// Throws Error(BadIndexSet) unless j_set has exactly n - m distinct indices
// inside {0, ..., n-1}.
void validate_index_set(const BilinearSystem& system,
                        const std::vector<int>& j_set);

// The index set induced by elimination: the original columns landing in the
// free positions m..n-1. Deterministic for a given system.
ReducedSystem compute_reduction(const BilinearSystem& system);

// True iff the m x m block of A on the complement of j_set is nonsingular,
// which is exactly the condition for R_J = C.
bool is_valid_j(const BilinearSystem& system, const std::vector<int>& j_set);

// For an invalid j_set, a point lying in R_J but not in C; nullopt when
// j_set is valid. The point is built from a particular solution x0 with
// y = 1 and w = x0 + z for a kernel vector z vanishing on j_set, scaled so
// its first nonzero entry is 1.
std::optional<SamplePoint> witness_nonequivalence(
    const BilinearSystem& system, const std::vector<int>& j_set);

}  // namespace bilred

#endif  // BILRED_SRC_REDUCTION_H_
