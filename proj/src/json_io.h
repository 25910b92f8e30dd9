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

#ifndef BILRED_SRC_JSON_IO_H_
#define BILRED_SRC_JSON_IO_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reduction.h"
#include "relax.h"
#include "system.h"
#include "verify.h"

namespace bilred {

using OrderedJson = nlohmann::ordered_json;

// Rationals cross the JSON boundary as integers when they fit an int64 and
// as "p/q" strings otherwise. Floats are rejected: they cannot name an
// exact value. `where` is the field path used in error messages.
Rational rational_from_json(const nlohmann::json& value,
                            const std::string& where);
OrderedJson rational_to_json(const Rational& r);

OrderedJson vector_to_json(const Vector& v);

// Input document: {"A": [[...]], "b": [...], "bounds"?: {...},
// "objective"?: {...}}. All shape/value violations surface as Error with
// 1-based positions in the message.
BilinearSystem parse_system(const std::string& text);
OrderedJson system_to_json(const BilinearSystem& system);
std::string serialize_system(const BilinearSystem& system);

// All index sets are serialized 1-based, matching every external surface.
OrderedJson reduced_to_json(const ReducedSystem& reduced);
OrderedJson report_to_json(const EquivalenceReport& report,
                           const std::vector<int>& j_set);
OrderedJson oracle_to_json(const BilinearSystem& system,
                           const std::vector<std::vector<int>>& valid_sets);
OrderedJson witness_to_json(const std::vector<int>& j_set,
                            const std::optional<SamplePoint>& witness);
OrderedJson comparison_to_json(const ComparisonReport& report);

}  // namespace bilred

#endif  // BILRED_SRC_JSON_IO_H_
