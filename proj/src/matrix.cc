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

#include "matrix.h"

#include <algorithm>

#include "error.h"

namespace bilred {

Matrix Matrix::identity(int k) {
  Matrix m(k, k);
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void Matrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) {
    std::swap((*this)(i, a), (*this)(i, b));
  }
}

Matrix Matrix::select_cols(const std::vector<int>& cols) const {
  Matrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols.size(); ++k) {
      out(i, static_cast<int>(k)) = (*this)(i, cols[k]);
    }
  }
  return out;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (static_cast<int>(v.size()) != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(m.cols()) +
                    " columns but vector has length " +
                    std::to_string(v.size()));
  }
  Vector out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) acc += m(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dot of vectors with lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
  Rational acc;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch in add");
  }
  Vector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch in sub");
  }
  Vector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Vector& v, const Rational& s) {
  Vector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

}  // namespace bilred
