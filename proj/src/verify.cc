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

#include "verify.h"

#include <algorithm>
#include <string>

#include "error.h"
#include "gauss.h"
#include "reduction.h"
#include "rng.h"

namespace bilred {

namespace {

void check_point_dimensions(const BilinearSystem& system,
                            const SamplePoint& p) {
  const size_t n = static_cast<size_t>(system.n());
  if (p.x.size() != n || p.w.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "point has x length " + std::to_string(p.x.size()) +
                    ", w length " + std::to_string(p.w.size()) +
                    "; system has n = " + std::to_string(n));
  }
}

}  // namespace

bool in_c(const BilinearSystem& system, const SamplePoint& p) {
  check_point_dimensions(system, p);
  if (mat_vec(system.a(), p.x) != system.b()) return false;
  for (int j = 0; j < system.n(); ++j) {
    if (p.w[j] != p.x[j] * p.y) return false;
  }
  return true;
}

bool in_rj(const BilinearSystem& system, const std::vector<int>& j_set,
           const SamplePoint& p) {
  validate_index_set(system, j_set);
  check_point_dimensions(system, p);
  if (mat_vec(system.a(), p.x) != system.b()) return false;
  const Vector aw = mat_vec(system.a(), p.w);
  for (int i = 0; i < system.m(); ++i) {
    if (aw[i] != system.b()[i] * p.y) return false;
  }
  for (int j : j_set) {
    if (p.w[j] != p.x[j] * p.y) return false;
  }
  return true;
}

SamplePoint sample_c(const BilinearSystem& system, const Rational& y,
                     const Vector& t) {
  const int free = system.n() - system.m();
  if (static_cast<int>(t.size()) != free) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(free) +
                    " free parameters, got " + std::to_string(t.size()));
  }
  const AffineParam param = affine_parametrize(system.a(), system.b());
  SamplePoint p;
  p.x = param.x0;
  for (int k = 0; k < free; ++k) {
    if (t[k].is_zero()) continue;
    p.x = add(p.x, scale(param.basis[k], t[k]));
  }
  p.y = y;
  p.w = scale(p.x, y);
  return p;
}

Vector solve_for_w(const BilinearSystem& system, const std::vector<int>& j_set,
                   const Vector& x, const Rational& y) {
  validate_index_set(system, j_set);
  if (static_cast<int>(x.size()) != system.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "x has length " + std::to_string(x.size()) +
                    " but n = " + std::to_string(system.n()));
  }
  if (mat_vec(system.a(), x) != system.b()) {
    throw Error(ErrorCode::InfeasibleX, "A x != b for the supplied x");
  }
  std::vector<int> sorted = j_set;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<int> basic = complement_of(sorted, system.n());

  // Fix w_j = x_j y on J, move those columns to the right-hand side, and
  // solve the square system on the basic block.
  Vector w(system.n());
  for (int j : sorted) w[j] = x[j] * y;
  Vector rhs(system.m());
  for (int i = 0; i < system.m(); ++i) {
    Rational acc = system.b()[i] * y;
    for (int j : sorted) {
      if (!system.a()(i, j).is_zero()) acc -= system.a()(i, j) * w[j];
    }
    rhs[i] = acc;
  }
  const Vector wb = solve_square(system.a().select_cols(basic), rhs);
  for (size_t k = 0; k < basic.size(); ++k) w[basic[k]] = wb[k];
  return w;
}

EquivalenceReport check_equivalence(const BilinearSystem& system,
                                    const std::vector<int>& j_set,
                                    long long trials, uint64_t seed) {
  validate_index_set(system, j_set);
  if (trials < 1) {
    throw Error(ErrorCode::BadArgument,
                "trials must be >= 1, got " + std::to_string(trials));
  }
  EquivalenceReport report;
  report.trials = trials;
  report.seed = seed;
  const int free = system.n() - system.m();
  // One parametrization serves every trial; the per-trial points are the
  // same ones sample_c would produce.
  const AffineParam param = affine_parametrize(system.a(), system.b());
  for (long long k = 0; k < trials; ++k) {
    TrialRng rng(seed, static_cast<uint64_t>(k));
    const Rational y = rng.next_rational();
    Vector t(free);
    for (int i = 0; i < free; ++i) t[i] = rng.next_rational();
    SamplePoint p;
    p.x = param.x0;
    for (int i = 0; i < free; ++i) {
      if (!t[i].is_zero()) p.x = add(p.x, scale(param.basis[i], t[i]));
    }
    p.y = y;
    p.w = scale(p.x, y);

    if (!in_rj(system, j_set, p)) {
      ++report.forward_failures;
      if (!report.counterexample.has_value()) report.counterexample = p;
    }

    try {
      const Vector w = solve_for_w(system, j_set, p.x, y);
      if (w != p.w) {
        ++report.backward_failures;
        if (!report.counterexample.has_value()) {
          report.counterexample = SamplePoint{p.x, w, y};
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem) throw;
      ++report.backward_failures;
      if (!report.counterexample.has_value()) {
        report.counterexample = witness_nonequivalence(system, j_set);
      }
    }
  }
  return report;
}

std::vector<std::vector<int>> oracle_all_valid_j(const BilinearSystem& system,
                                                 int cap) {
  const int n = system.n();
  const int size = n - system.m();
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(cap))
        .with_int("cap", cap);
  }
  std::vector<std::vector<int>> valid;
  std::vector<int> subset(size);
  // Lexicographic enumeration of all size-(n-m) subsets of {0, ..., n-1}.
  for (int i = 0; i < size; ++i) subset[i] = i;
  while (true) {
    if (is_valid_j(system, subset)) valid.push_back(subset);
    int i = size - 1;
    while (i >= 0 && subset[i] == n - size + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int k = i + 1; k < size; ++k) subset[k] = subset[k - 1] + 1;
  }
  return valid;
}

}  // namespace bilred
