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

#ifndef BILRED_SRC_SIMPLEX_H_
#define BILRED_SRC_SIMPLEX_H_

#include "relax.h"

namespace bilred {

// Exact two-phase simplex over rationals. Bland's smallest-index rule for
// both the entering and the leaving tie-break, so the method terminates on
// every input (no cycling). Returns the exact optimum; when Optimal, the
// returned point satisfies every row and bound of the program exactly.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace bilred

#endif  // BILRED_SRC_SIMPLEX_H_
