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

// Exercises the shared library strictly through its public C header, the
// way an external binding would.

#include "bilred/bilred.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

extern "C" int bilred_c_smoke(void);

namespace {

using nlohmann::json;

// RAII wrapper so failing CHECKs cannot leak handles.
struct SystemHandle {
  bilred_system* ptr = nullptr;
  ~SystemHandle() { bilred_system_free(ptr); }
};

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { bilred_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

json last_error() {
  StringOut err;
  err.ptr = bilred_last_error_json();
  return json::parse(err.str());
}

constexpr const char* kSumSystem = R"({"A": [[1, 1]], "b": [1]})";
constexpr const char* kPinnedSystem = R"({"A": [[1, 0]], "b": [0]})";
constexpr const char* kBoxedSystem = R"({
  "A": [[1, 1]], "b": [1],
  "bounds": {"x": [[0, 1], [0, 1]], "y": [0, 1]},
  "objective": {"x": [0, 0], "w": [1, 0], "y": 0, "sense": "min"}
})";

TEST_SUITE("capi") {

TEST_CASE("the pure-C round trip compiles and passes") {
  CHECK(bilred_c_smoke() == 0);
}

TEST_CASE("version and status names are stable strings") {
  CHECK(std::string(bilred_version()) == "1.0.0");
  CHECK(std::string(bilred_status_name(BILRED_OK)) == "ok");
  CHECK(std::string(bilred_status_name(BILRED_ERROR_RANK_DEFICIENT)) ==
        "rank_deficient");
  CHECK(std::string(bilred_status_name(BILRED_ERROR_IO)) == "io_error");
}

TEST_CASE("parse, inspect, serialize") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(kSumSystem, &sys.ptr) == BILRED_OK);
  CHECK(bilred_system_rows(sys.ptr) == 1);
  CHECK(bilred_system_cols(sys.ptr) == 2);
  StringOut out;
  REQUIRE(bilred_system_to_json(sys.ptr, &out.ptr) == BILRED_OK);
  const json doc = json::parse(out.str());
  CHECK(doc["A"] == json::parse("[[1, 1]]"));
  CHECK(doc["b"] == json::parse("[1]"));

  CHECK(bilred_system_rows(nullptr) == -1);
  CHECK(bilred_system_cols(nullptr) == -1);
}

TEST_CASE("parse failures set the thread-local error document") {
  SystemHandle sys;
  CHECK(bilred_system_parse(R"({"A": [[1, 2, 3], [2, 4, 6]], "b": [0, 0]})",
                            &sys.ptr) == BILRED_ERROR_RANK_DEFICIENT);
  const json err = last_error();
  CHECK(err["error"] == "RankDeficient");
  CHECK(err["rank"] == 1);
  CHECK(err["m"] == 2);
  CHECK(err.contains("message"));

  CHECK(bilred_system_parse(kSumSystem, nullptr) ==
        BILRED_ERROR_BAD_ARGUMENT);
}

TEST_CASE("reduce reports the derived index set") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(kSumSystem, &sys.ptr) == BILRED_OK);
  StringOut out;
  REQUIRE(bilred_reduce(sys.ptr, &out.ptr) == BILRED_OK);
  const json doc = json::parse(out.str());
  CHECK(doc["J"] == json::parse("[2]"));
  CHECK(doc["basic"] == json::parse("[1]"));
  CHECK(doc["retained_bilinear"] == json::parse("[2]"));
  CHECK(doc["reduction_rows"] == json::parse("[[1, 1]]"));
  CHECK(doc["rhs_coeff_y"] == json::parse("[1]"));
}

TEST_CASE("verify defaults to the derived set and accepts explicit ones") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(kPinnedSystem, &sys.ptr) == BILRED_OK);

  StringOut derived;
  REQUIRE(bilred_verify(sys.ptr, nullptr, 0, 50, 7, &derived.ptr) ==
          BILRED_OK);
  const json ok = json::parse(derived.str());
  CHECK(ok["equivalent"] == true);
  CHECK(ok["J"] == json::parse("[2]"));
  CHECK(ok["trials"] == 50);
  CHECK(ok["seed"] == 7);

  const int invalid[] = {1};
  StringOut refuted;
  REQUIRE(bilred_verify(sys.ptr, invalid, 1, 50, 7, &refuted.ptr) ==
          BILRED_OK);
  const json bad = json::parse(refuted.str());
  CHECK(bad["equivalent"] == false);
  REQUIRE(bad.contains("counterexample"));
  CHECK(bad["counterexample"]["x"] == json::parse("[0, 1]"));
  CHECK(bad["counterexample"]["w"] == json::parse("[0, 2]"));
  CHECK(bad["counterexample"]["y"] == 1);

  StringOut rejected;
  CHECK(bilred_verify(sys.ptr, nullptr, 0, 0, 7, &rejected.ptr) ==
        BILRED_ERROR_BAD_ARGUMENT);
  const int out_of_range[] = {5};
  CHECK(bilred_verify(sys.ptr, out_of_range, 1, 10, 7, &rejected.ptr) ==
        BILRED_ERROR_BAD_INDEX_SET);
}

TEST_CASE("witness classifies index sets") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(kPinnedSystem, &sys.ptr) == BILRED_OK);
  const int invalid[] = {1};
  StringOut out;
  REQUIRE(bilred_witness(sys.ptr, invalid, 1, &out.ptr) == BILRED_OK);
  const json doc = json::parse(out.str());
  CHECK(doc["valid"] == false);
  CHECK(doc["witness"]["x"] == json::parse("[0, 1]"));
  CHECK(doc["witness"]["w"] == json::parse("[0, 2]"));
  CHECK(doc["witness"]["y"] == 1);

  StringOut valid;
  REQUIRE(bilred_witness(sys.ptr, nullptr, 0, &valid.ptr) == BILRED_OK);
  CHECK(json::parse(valid.str())["valid"] == true);
}

TEST_CASE("oracle enumerates and enforces its cap") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(R"({"A": [[1, 0, 1], [0, 1, 1]],
                                  "b": [1, 1]})",
                              &sys.ptr) == BILRED_OK);
  StringOut out;
  REQUIRE(bilred_oracle(sys.ptr, 0, &out.ptr) == BILRED_OK);
  const json doc = json::parse(out.str());
  CHECK(doc["n"] == 3);
  CHECK(doc["m"] == 2);
  CHECK(doc["count"] == 3);
  CHECK(doc["valid_J"] == json::parse("[[1], [2], [3]]"));

  StringOut refused;
  CHECK(bilred_oracle(sys.ptr, 2, &refused.ptr) == BILRED_ERROR_TOO_LARGE);
  CHECK(last_error()["cap"] == 2);
}

TEST_CASE("relaxation report requires bounds") {
  SystemHandle bare;
  REQUIRE(bilred_system_parse(kSumSystem, &bare.ptr) == BILRED_OK);
  StringOut refused;
  CHECK(bilred_relax_report(bare.ptr, 0, &refused.ptr) ==
        BILRED_ERROR_MISSING_BOUNDS);

  SystemHandle sys;
  REQUIRE(bilred_system_parse(kBoxedSystem, &sys.ptr) == BILRED_OK);
  StringOut out;
  REQUIRE(bilred_relax_report(sys.ptr, 1, &out.ptr) == BILRED_OK);
  const json doc = json::parse(out.str());
  CHECK(doc["full"]["rows"] == 9);
  CHECK(doc["reduced"]["rows"] == 6);
  CHECK(doc["full"]["value"] == 0);
  CHECK(doc["reduced"]["value"] == 0);
  CHECK(doc["bilinear_terms_replaced"] == 1);
}

TEST_CASE("LP rendering is deterministic and writable") {
  SystemHandle sys;
  REQUIRE(bilred_system_parse(kBoxedSystem, &sys.ptr) == BILRED_OK);
  StringOut first;
  StringOut second;
  REQUIRE(bilred_relax_render_lp(sys.ptr, BILRED_RELAX_FULL, &first.ptr) ==
          BILRED_OK);
  REQUIRE(bilred_relax_render_lp(sys.ptr, BILRED_RELAX_FULL, &second.ptr) ==
          BILRED_OK);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("Minimize") != std::string::npos);

  const std::string path = "test_capi_out.lp";
  REQUIRE(bilred_relax_write_lp(sys.ptr, BILRED_RELAX_FULL, path.c_str()) ==
          BILRED_OK);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  CHECK(bytes == first.str());
  in.close();
  std::remove(path.c_str());

  CHECK(bilred_relax_write_lp(sys.ptr, BILRED_RELAX_FULL,
                              "no_such_directory/out.lp") ==
        BILRED_ERROR_IO);
}

TEST_CASE("load reads a document from disk") {
  const std::string path = "test_capi_system.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << kSumSystem;
  }
  SystemHandle sys;
  REQUIRE(bilred_system_load(path.c_str(), &sys.ptr) == BILRED_OK);
  CHECK(bilred_system_cols(sys.ptr) == 2);
  std::remove(path.c_str());

  SystemHandle missing;
  CHECK(bilred_system_load("no_such_file.json", &missing.ptr) ==
        BILRED_ERROR_IO);
  CHECK(last_error()["error"] == "IoError");
}

}  // TEST_SUITE

}  // namespace
