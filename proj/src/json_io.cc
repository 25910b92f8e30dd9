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

#include "json_io.h"

#include <limits>
#include <utility>

#include "error.h"

namespace bilred {
namespace {

using nlohmann::json;

std::string index_path(const std::string& base, int i) {
  return base + "[" + std::to_string(i + 1) + "]";
}

std::string entry_path(const std::string& base, int i, int j) {
  return base + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
         "]";
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw Error(ErrorCode::MalformedJson,
                  "unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const json& require_key(const json& obj, const char* key,
                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::MalformedJson,
                "missing key \"" + std::string(key) + "\" in " + where);
  }
  return *it;
}

Vector vector_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array()) {
    throw Error(ErrorCode::MalformedJson, where + " must be an array");
  }
  Vector out;
  out.reserve(arr.size());
  for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
    out.push_back(rational_from_json(arr[i], index_path(where, i)));
  }
  return out;
}

std::pair<Rational, Rational> interval_from_json(const json& value,
                                                 const std::string& where) {
  if (!value.is_array() || value.size() != 2) {
    throw Error(ErrorCode::MalformedJson, where + " must be [lo, hi]");
  }
  return {rational_from_json(value[0], where + ".lo"),
          rational_from_json(value[1], where + ".hi")};
}

OrderedJson indices_one_based(const std::vector<int>& indices) {
  OrderedJson arr = OrderedJson::array();
  for (int idx : indices) arr.push_back(idx + 1);
  return arr;
}

OrderedJson point_to_json(const SamplePoint& point) {
  OrderedJson doc;
  doc["x"] = vector_to_json(point.x);
  doc["w"] = vector_to_json(point.w);
  doc["y"] = rational_to_json(point.y);
  return doc;
}

OrderedJson mode_to_json(const ModeReport& mode) {
  OrderedJson doc;
  doc["rows"] = mode.rows;
  doc["linear_rows"] = mode.linear_rows;
  doc["envelope_rows"] = mode.envelope_rows;
  if (mode.solution.has_value()) {
    doc["status"] = lp_status_name(mode.solution->status);
    if (mode.solution->status == LpStatus::Optimal) {
      doc["value"] = rational_to_json(mode.solution->value);
    }
  }
  return doc;
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    return Rational::parse(value.get<std::string>(), where);
  }
  if (value.is_number_float()) {
    throw Error(ErrorCode::BadRational,
                where +
                    ": floating-point values are not accepted; use an "
                    "integer or a \"p/q\" string");
  }
  if (value.is_number_unsigned()) {
    const uint64_t u = value.get<uint64_t>();
    if (u > static_cast<uint64_t>(std::numeric_limits<long long>::max())) {
      return Rational(BigInt(std::to_string(u)), BigInt(1));
    }
    return Rational(static_cast<long long>(u));
  }
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  throw Error(ErrorCode::BadRational,
              where + ": expected a number or a \"p/q\" string");
}

OrderedJson rational_to_json(const Rational& r) {
  if (r.is_integer()) {
    static const BigInt kMin(std::numeric_limits<long long>::min());
    static const BigInt kMax(std::numeric_limits<long long>::max());
    if (r.num() >= kMin && r.num() <= kMax) {
      return OrderedJson(r.num().convert_to<long long>());
    }
  }
  return OrderedJson(r.str());
}

OrderedJson vector_to_json(const Vector& v) {
  OrderedJson arr = OrderedJson::array();
  for (const Rational& r : v) arr.push_back(rational_to_json(r));
  return arr;
}

BilinearSystem parse_system(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::MalformedJson, "input is not valid JSON");
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedJson, "top level must be an object");
  }
  reject_unknown_keys(doc, "the top-level object",
                      {"A", "b", "bounds", "objective"});

  const json& a_json = require_key(doc, "A", "the top-level object");
  if (!a_json.is_array() || a_json.empty()) {
    throw Error(ErrorCode::MalformedJson,
                "\"A\" must be a nonempty array of rows");
  }
  const int m = static_cast<int>(a_json.size());
  if (!a_json[0].is_array() || a_json[0].empty()) {
    throw Error(ErrorCode::MalformedJson,
                "A[1] must be a nonempty array of entries");
  }
  const int n = static_cast<int>(a_json[0].size());
  Matrix a(m, n);
  for (int i = 0; i < m; ++i) {
    const json& row = a_json[i];
    if (!row.is_array()) {
      throw Error(ErrorCode::MalformedJson,
                  index_path("A", i) + " must be an array");
    }
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  index_path("A", i) + " has " +
                      std::to_string(row.size()) + " entries, expected " +
                      std::to_string(n))
          .with_int("row", i + 1);
    }
    for (int j = 0; j < n; ++j) {
      a(i, j) = rational_from_json(row[j], entry_path("A", i, j));
    }
  }

  const Vector b =
      vector_from_json(require_key(doc, "b", "the top-level object"), "b");

  std::optional<Box> bounds;
  if (doc.contains("bounds")) {
    const json& bounds_json = doc["bounds"];
    if (!bounds_json.is_object()) {
      throw Error(ErrorCode::MalformedJson, "\"bounds\" must be an object");
    }
    reject_unknown_keys(bounds_json, "\"bounds\"", {"x", "y"});
    const json& x_json = require_key(bounds_json, "x", "\"bounds\"");
    if (!x_json.is_array()) {
      throw Error(ErrorCode::MalformedJson, "bounds.x must be an array");
    }
    Box box;
    for (int j = 0; j < static_cast<int>(x_json.size()); ++j) {
      auto [lo, hi] = interval_from_json(x_json[j], index_path("bounds.x", j));
      box.xlo.push_back(std::move(lo));
      box.xhi.push_back(std::move(hi));
    }
    auto [ylo, yhi] =
        interval_from_json(require_key(bounds_json, "y", "\"bounds\""),
                           "bounds.y");
    box.ylo = std::move(ylo);
    box.yhi = std::move(yhi);
    bounds = std::move(box);
  }

  std::optional<Objective> objective;
  if (doc.contains("objective")) {
    const json& obj_json = doc["objective"];
    if (!obj_json.is_object()) {
      throw Error(ErrorCode::MalformedJson, "\"objective\" must be an object");
    }
    reject_unknown_keys(obj_json, "\"objective\"", {"x", "w", "y", "sense"});
    Objective obj;
    obj.x = vector_from_json(require_key(obj_json, "x", "\"objective\""),
                             "objective.x");
    obj.w = vector_from_json(require_key(obj_json, "w", "\"objective\""),
                             "objective.w");
    obj.y = rational_from_json(require_key(obj_json, "y", "\"objective\""),
                               "objective.y");
    const json& sense = require_key(obj_json, "sense", "\"objective\"");
    if (sense.is_string() && sense.get<std::string>() == "min") {
      obj.sense = Sense::Min;
    } else if (sense.is_string() && sense.get<std::string>() == "max") {
      obj.sense = Sense::Max;
    } else {
      throw Error(ErrorCode::MalformedJson,
                  "objective.sense must be \"min\" or \"max\"");
    }
    objective = std::move(obj);
  }

  return BilinearSystem::create(std::move(a), b, std::move(bounds),
                                std::move(objective));
}

OrderedJson system_to_json(const BilinearSystem& system) {
  OrderedJson doc;
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < system.m(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < system.n(); ++j) {
      row.push_back(rational_to_json(system.a()(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  doc["b"] = vector_to_json(system.b());
  if (system.bounds().has_value()) {
    const Box& box = *system.bounds();
    OrderedJson x = OrderedJson::array();
    for (size_t j = 0; j < box.xlo.size(); ++j) {
      x.push_back(OrderedJson::array(
          {rational_to_json(box.xlo[j]), rational_to_json(box.xhi[j])}));
    }
    doc["bounds"]["x"] = std::move(x);
    doc["bounds"]["y"] = OrderedJson::array(
        {rational_to_json(box.ylo), rational_to_json(box.yhi)});
  }
  if (system.objective().has_value()) {
    const Objective& obj = *system.objective();
    doc["objective"]["x"] = vector_to_json(obj.x);
    doc["objective"]["w"] = vector_to_json(obj.w);
    doc["objective"]["y"] = rational_to_json(obj.y);
    doc["objective"]["sense"] = obj.sense == Sense::Min ? "min" : "max";
  }
  return doc;
}

std::string serialize_system(const BilinearSystem& system) {
  return system_to_json(system).dump();
}

OrderedJson reduced_to_json(const ReducedSystem& reduced) {
  OrderedJson doc;
  doc["J"] = indices_one_based(reduced.j_set);
  doc["basic"] = indices_one_based(reduced.basic);
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < reduced.reduction_a.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < reduced.reduction_a.cols(); ++j) {
      row.push_back(rational_to_json(reduced.reduction_a(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["reduction_rows"] = std::move(rows);
  doc["rhs_coeff_y"] = vector_to_json(reduced.reduction_b);
  doc["retained_bilinear"] = indices_one_based(reduced.j_set);
  return doc;
}

OrderedJson report_to_json(const EquivalenceReport& report,
                           const std::vector<int>& j_set) {
  OrderedJson doc;
  doc["trials"] = report.trials;
  doc["forward_failures"] = report.forward_failures;
  doc["backward_failures"] = report.backward_failures;
  if (report.counterexample.has_value()) {
    doc["counterexample"] = point_to_json(*report.counterexample);
  }
  doc["seed"] = report.seed;
  doc["equivalent"] = report.equivalent();
  doc["J"] = indices_one_based(j_set);
  return doc;
}

OrderedJson oracle_to_json(const BilinearSystem& system,
                           const std::vector<std::vector<int>>& valid_sets) {
  OrderedJson doc;
  doc["n"] = system.n();
  doc["m"] = system.m();
  doc["count"] = static_cast<int>(valid_sets.size());
  OrderedJson sets = OrderedJson::array();
  for (const std::vector<int>& j_set : valid_sets) {
    sets.push_back(indices_one_based(j_set));
  }
  doc["valid_J"] = std::move(sets);
  return doc;
}

OrderedJson witness_to_json(const std::vector<int>& j_set,
                            const std::optional<SamplePoint>& witness) {
  OrderedJson doc;
  doc["J"] = indices_one_based(j_set);
  doc["valid"] = !witness.has_value();
  if (witness.has_value()) {
    doc["witness"] = point_to_json(*witness);
  }
  return doc;
}

OrderedJson comparison_to_json(const ComparisonReport& report) {
  OrderedJson doc;
  doc["full"] = mode_to_json(report.full);
  doc["reduced"] = mode_to_json(report.reduced);
  doc["bilinear_terms_replaced"] = report.bilinear_terms_replaced;
  return doc;
}

}  // namespace bilred
