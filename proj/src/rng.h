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

#ifndef BILRED_SRC_RNG_H_
#define BILRED_SRC_RNG_H_

#include <cstdint>

#include "rational.h"

namespace bilred {

// splitmix64 step (Steele, Lea & Flood mixing constants).
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic stream of draws fully determined by (seed, stream).
// Stream k never touches stream k+1's state, so trials indexed by stream
// can be generated in any order with identical results.
class TrialRng {
 public:
  TrialRng(uint64_t seed, uint64_t stream) {
    state_ = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    splitmix64_next(state_);
    splitmix64_next(state_);
  }

  uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform in [lo, hi], inclusive, exact (mask rejection, no modulo bias).
  long long next_int(long long lo, long long hi) {
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t mask = range - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    uint64_t v;
    do {
      v = next_u64() & mask;
    } while (v >= range);
    return lo + static_cast<long long>(v);
  }

  // Small fraction: numerator in [-9, 9], denominator in [1, 9].
  Rational next_rational() {
    long long num = next_int(-9, 9);
    long long den = next_int(1, 9);
    return Rational(BigInt(num), BigInt(den));
  }

 private:
  uint64_t state_;
};

}  // namespace bilred

#endif  // BILRED_SRC_RNG_H_
