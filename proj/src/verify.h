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

#ifndef BILRED_SRC_VERIFY_H_
#define BILRED_SRC_VERIFY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "system.h"

namespace bilred {

// Result of the randomized refutation attempt of C = R_J. Deterministic
// given (system, J, trials, seed).
struct EquivalenceReport {
  long long trials = 0;
  long long forward_failures = 0;   // points of C that failed R_J
  long long backward_failures = 0;  // R_J-constructed points that failed C
  std::optional<SamplePoint> counterexample;
  uint64_t seed = 0;

  bool equivalent() const {
    return forward_failures == 0 && backward_failures == 0;
  }
};

// Membership in C: Ax = b and w_j = x_j y for every j. Exact.
bool in_c(const BilinearSystem& system, const SamplePoint& p);

// Membership in R_J: Ax = b, Aw - by = 0, and w_j = x_j y for j in J.
bool in_rj(const BilinearSystem& system, const std::vector<int>& j_set,
           const SamplePoint& p);

// Point of C from the affine parametrization of Ax = b: x = x0 + sum t_k
// basis_k and w = x * y. `t` must have length n - m.
SamplePoint sample_c(const BilinearSystem& system, const Rational& y,
                     const Vector& t);

// Unique w satisfying Aw = by and w_j = x_j y on J, which for a valid J
// equals x * y. Throws Error(InfeasibleX) when Ax != b and
// Error(SingularSystem) when the complement block of J is singular.
Vector solve_for_w(const BilinearSystem& system, const std::vector<int>& j_set,
                   const Vector& x, const Rational& y);

// `trials` independent sampled rounds, each testing the forward inclusion
// (sample of C lies in R_J) and the backward one (solve_for_w reproduces
// x * y). Trial k draws only from stream (seed, k).
EquivalenceReport check_equivalence(const BilinearSystem& system,
                                    const std::vector<int>& j_set,
                                    long long trials, uint64_t seed);

// All valid index sets by brute-force enumeration of the C(n, n-m) subsets
// with the determinant criterion. Lexicographically sorted, each set
// ascending. Throws Error(TooLarge) when n exceeds `cap`.
std::vector<std::vector<int>> oracle_all_valid_j(const BilinearSystem& system,
                                                 int cap = 14);

}  // namespace bilred

#endif  // BILRED_SRC_VERIFY_H_
