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

#ifndef BILRED_SRC_MATRIX_H_
#define BILRED_SRC_MATRIX_H_

#include <vector>

#include "rational.h"

namespace bilred {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  // Columns of *this selected by `cols` (0-based), in the given order.
  Matrix select_cols(const std::vector<int>& cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

Vector mat_vec(const Matrix& m, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& s);
bool is_zero_vector(const Vector& v);

}  // namespace bilred

#endif  // BILRED_SRC_MATRIX_H_
