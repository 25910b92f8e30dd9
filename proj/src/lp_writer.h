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

#ifndef BILRED_SRC_LP_WRITER_H_
#define BILRED_SRC_LP_WRITER_H_

#include <string>

#include "relax.h"

namespace bilred {

// Decimal form of a rational: exact when the denominator divides a power
// of ten, otherwise rounded to 17 significant digits (enough to round-trip
// an IEEE double). Trailing zeros are trimmed.
std::string decimal_string(const Rational& r);

// Renders the program in CPLEX LP format. Output is a pure function of the
// program: identical inputs produce identical bytes. Lines holding a value
// that is not exactly representable in decimal carry a trailing comment
// with the exact fractions.
std::string render_lp(const LinearProgram& lp);

// render_lp + write to `path`; throws Error(IoError) when the file cannot
// be written.
void emit_lp_file(const LinearProgram& lp, const std::string& path);

}  // namespace bilred

#endif  // BILRED_SRC_LP_WRITER_H_
