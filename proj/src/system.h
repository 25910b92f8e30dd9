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

#ifndef BILRED_SRC_SYSTEM_H_
#define BILRED_SRC_SYSTEM_H_

#include <optional>
#include <utility>
#include <vector>

#include "matrix.h"

namespace bilred {

enum class Sense { Min, Max };

// Rectangular domain for the relaxation: x_j in [xlo_j, xhi_j], y in
// [ylo, yhi].
struct Box {
  Vector xlo, xhi;
  Rational ylo, yhi;

  friend bool operator==(const Box& a, const Box& b) {
    return a.xlo == b.xlo && a.xhi == b.xhi && a.ylo == b.ylo && a.yhi == b.yhi;
  }
};

// Linear objective over (x, w, y).
struct Objective {
  Vector x, w;
  Rational y;
  Sense sense = Sense::Min;

  friend bool operator==(const Objective& a, const Objective& b) {
    return a.x == b.x && a.w == b.w && a.y == b.y && a.sense == b.sense;
  }
};

// Candidate point (x, w, y) tested for membership in C or R_J.
struct SamplePoint {
  Vector x, w;
  Rational y;

  friend bool operator==(const SamplePoint& a, const SamplePoint& b) {
    return a.x == b.x && a.w == b.w && a.y == b.y;
  }
};

// The linearly constrained bilinear system: Ax = b together with the n
// bilinear couplings w_j = x_j * y. Construction validates shape
// (1 <= m <= n, b of length m) and full row rank; instances are immutable.
class BilinearSystem {
 public:
  // Throws Error(DimensionMismatch) on shape violations (including m = 0 and
  // m > n), Error(RankDeficient) when rank(A) < m, Error(BadBox) on an empty
  // box, and Error(DimensionMismatch) when bounds/objective lengths differ
  // from n.
  static BilinearSystem create(Matrix a, Vector b,
                               std::optional<Box> bounds = std::nullopt,
                               std::optional<Objective> objective =
                                   std::nullopt);

  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }
  int m() const { return a_.rows(); }
  int n() const { return a_.cols(); }
  const std::optional<Box>& bounds() const { return bounds_; }
  const std::optional<Objective>& objective() const { return objective_; }

  friend bool operator==(const BilinearSystem& s, const BilinearSystem& t) {
    return s.a_ == t.a_ && s.b_ == t.b_ && s.bounds_ == t.bounds_ &&
           s.objective_ == t.objective_;
  }

 private:
  BilinearSystem(Matrix a, Vector b, std::optional<Box> bounds,
                 std::optional<Objective> objective)
      : a_(std::move(a)),
        b_(std::move(b)),
        bounds_(std::move(bounds)),
        objective_(std::move(objective)) {}

  Matrix a_;
  Vector b_;
  std::optional<Box> bounds_;
  std::optional<Objective> objective_;
};

}  // namespace bilred

#endif  // BILRED_SRC_SYSTEM_H_
