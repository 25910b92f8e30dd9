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

#include "bilred/bilred.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.h"
#include "json_io.h"
#include "lp_writer.h"
#include "reduction.h"
#include "relax.h"
#include "system.h"
#include "verify.h"

// The opaque handle: a parsed, validated system.
struct bilred_system {
  bilred::BilinearSystem impl;
};

namespace {

thread_local std::string g_last_error = "{}";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bilred_status status_from_code(bilred::ErrorCode code) {
  using bilred::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedJson:
      return BILRED_ERROR_MALFORMED_JSON;
    case ErrorCode::DimensionMismatch:
      return BILRED_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::RankDeficient:
      return BILRED_ERROR_RANK_DEFICIENT;
    case ErrorCode::BadRational:
      return BILRED_ERROR_BAD_RATIONAL;
    case ErrorCode::SingularDiagonal:
      return BILRED_ERROR_SINGULAR_DIAGONAL;
    case ErrorCode::NotSquare:
      return BILRED_ERROR_NOT_SQUARE;
    case ErrorCode::BadIndexSet:
      return BILRED_ERROR_BAD_INDEX_SET;
    case ErrorCode::SingularSystem:
      return BILRED_ERROR_SINGULAR_SYSTEM;
    case ErrorCode::InfeasibleX:
      return BILRED_ERROR_INFEASIBLE_X;
    case ErrorCode::TooLarge:
      return BILRED_ERROR_TOO_LARGE;
    case ErrorCode::BadArgument:
      return BILRED_ERROR_BAD_ARGUMENT;
    case ErrorCode::MissingBounds:
      return BILRED_ERROR_MISSING_BOUNDS;
    case ErrorCode::MissingObjective:
      return BILRED_ERROR_MISSING_OBJECTIVE;
    case ErrorCode::BadBox:
      return BILRED_ERROR_BAD_BOX;
    case ErrorCode::IoError:
      return BILRED_ERROR_IO;
    case ErrorCode::Internal:
      return BILRED_ERROR_INTERNAL;
  }
  return BILRED_ERROR_INTERNAL;
}

bilred_status record_error(const bilred::Error& e) {
  bilred::OrderedJson doc;
  doc["error"] = bilred::error_code_name(e.code());
  doc["message"] = e.message();
  for (const auto& [key, value] : e.int_details()) {
    doc[key] = value;
  }
  g_last_error = doc.dump();
  return status_from_code(e.code());
}

bilred_status record_plain(bilred_status status, const char* name,
                           const std::string& message) {
  bilred::OrderedJson doc;
  doc["error"] = name;
  doc["message"] = message;
  g_last_error = doc.dump();
  return status;
}

bilred_status bad_argument(const std::string& message) {
  return record_plain(BILRED_ERROR_BAD_ARGUMENT, "BadArgument", message);
}

template <typename Fn>
bilred_status guarded(Fn&& fn) {
  try {
    fn();
    return BILRED_OK;
  } catch (const bilred::Error& e) {
    return record_error(e);
  } catch (const std::exception& e) {
    return record_plain(BILRED_ERROR_INTERNAL, "Internal", e.what());
  } catch (...) {
    return record_plain(BILRED_ERROR_INTERNAL, "Internal", "unknown failure");
  }
}

// 1-based caller indices to the 0-based internal form; NULL means "use the
// derived set". Downstream validation owns range/size/duplicate checks.
std::vector<int> resolve_j(const bilred::BilinearSystem& system, const int* j,
                           size_t j_len) {
  if (j == nullptr || j_len == 0) {
    return bilred::compute_reduction(system).j_set;
  }
  std::vector<int> out(j, j + j_len);
  for (int& v : out) --v;
  return out;
}

void emit(char** out_json, const bilred::OrderedJson& doc) {
  *out_json = dup_string(doc.dump(2));
  if (*out_json == nullptr) {
    throw bilred::Error(bilred::ErrorCode::Internal, "allocation failed");
  }
}

bilred::RelaxMode mode_from_c(bilred_relax_mode mode) {
  if (mode != BILRED_RELAX_FULL && mode != BILRED_RELAX_REDUCED) {
    throw bilred::Error(bilred::ErrorCode::BadArgument,
                        "mode must be full or reduced")
        .with_int("mode", mode);
  }
  return mode == BILRED_RELAX_FULL ? bilred::RelaxMode::Full
                                   : bilred::RelaxMode::Reduced;
}

}  // namespace

extern "C" {

const char* bilred_version(void) { return "1.0.0"; }

const char* bilred_status_name(bilred_status status) {
  switch (status) {
    case BILRED_OK:
      return "ok";
    case BILRED_ERROR_MALFORMED_JSON:
      return "malformed_json";
    case BILRED_ERROR_DIMENSION_MISMATCH:
      return "dimension_mismatch";
    case BILRED_ERROR_RANK_DEFICIENT:
      return "rank_deficient";
    case BILRED_ERROR_BAD_RATIONAL:
      return "bad_rational";
    case BILRED_ERROR_SINGULAR_DIAGONAL:
      return "singular_diagonal";
    case BILRED_ERROR_NOT_SQUARE:
      return "not_square";
    case BILRED_ERROR_BAD_INDEX_SET:
      return "bad_index_set";
    case BILRED_ERROR_SINGULAR_SYSTEM:
      return "singular_system";
    case BILRED_ERROR_INFEASIBLE_X:
      return "infeasible_x";
    case BILRED_ERROR_TOO_LARGE:
      return "too_large";
    case BILRED_ERROR_BAD_ARGUMENT:
      return "bad_argument";
    case BILRED_ERROR_MISSING_BOUNDS:
      return "missing_bounds";
    case BILRED_ERROR_MISSING_OBJECTIVE:
      return "missing_objective";
    case BILRED_ERROR_BAD_BOX:
      return "bad_box";
    case BILRED_ERROR_IO:
      return "io_error";
    case BILRED_ERROR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

bilred_status bilred_system_parse(const char* json_text, bilred_system** out) {
  if (out == nullptr) return bad_argument("out must not be NULL");
  *out = nullptr;
  if (json_text == nullptr) return bad_argument("json_text must not be NULL");
  return guarded([&] {
    *out = new bilred_system{bilred::parse_system(json_text)};
  });
}

bilred_status bilred_system_load(const char* path, bilred_system** out) {
  if (out == nullptr) return bad_argument("out must not be NULL");
  *out = nullptr;
  if (path == nullptr) return bad_argument("path must not be NULL");
  return guarded([&] {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw bilred::Error(bilred::ErrorCode::IoError,
                          "cannot open \"" + std::string(path) +
                              "\" for reading");
    }
    std::ostringstream text;
    text << file.rdbuf();
    if (file.bad()) {
      throw bilred::Error(bilred::ErrorCode::IoError,
                          "failed while reading \"" + std::string(path) +
                              "\"");
    }
    *out = new bilred_system{bilred::parse_system(text.str())};
  });
}

void bilred_system_free(bilred_system* system) { delete system; }

int bilred_system_rows(const bilred_system* system) {
  return system == nullptr ? -1 : system->impl.m();
}

int bilred_system_cols(const bilred_system* system) {
  return system == nullptr ? -1 : system->impl.n();
}

bilred_status bilred_system_to_json(const bilred_system* system,
                                    char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    emit(out_json, bilred::system_to_json(system->impl));
  });
}

bilred_status bilred_reduce(const bilred_system* system, char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    emit(out_json, bilred::reduced_to_json(
                       bilred::compute_reduction(system->impl)));
  });
}

bilred_status bilred_verify(const bilred_system* system, const int* j,
                            size_t j_len, long long trials, uint64_t seed,
                            char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    std::vector<int> j_set = resolve_j(system->impl, j, j_len);
    const bilred::EquivalenceReport report =
        bilred::check_equivalence(system->impl, j_set, trials, seed);
    std::sort(j_set.begin(), j_set.end());
    emit(out_json, bilred::report_to_json(report, j_set));
  });
}

bilred_status bilred_witness(const bilred_system* system, const int* j,
                             size_t j_len, char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    std::vector<int> j_set = resolve_j(system->impl, j, j_len);
    const std::optional<bilred::SamplePoint> witness =
        bilred::witness_nonequivalence(system->impl, j_set);
    std::sort(j_set.begin(), j_set.end());
    emit(out_json, bilred::witness_to_json(j_set, witness));
  });
}

bilred_status bilred_oracle(const bilred_system* system, int max_cols,
                            char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    const std::vector<std::vector<int>> valid_sets =
        max_cols <= 0 ? bilred::oracle_all_valid_j(system->impl)
                      : bilred::oracle_all_valid_j(system->impl, max_cols);
    emit(out_json, bilred::oracle_to_json(system->impl, valid_sets));
  });
}

bilred_status bilred_relax_report(const bilred_system* system, int solve,
                                  char** out_json) {
  if (out_json == nullptr) return bad_argument("out_json must not be NULL");
  *out_json = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    emit(out_json, bilred::comparison_to_json(
                       bilred::compare_relaxations(system->impl, solve != 0)));
  });
}

bilred_status bilred_relax_render_lp(const bilred_system* system,
                                     bilred_relax_mode mode,
                                     char** out_text) {
  if (out_text == nullptr) return bad_argument("out_text must not be NULL");
  *out_text = nullptr;
  if (system == nullptr) return bad_argument("system must not be NULL");
  return guarded([&] {
    const std::string text = bilred::render_lp(
        bilred::build_relaxation(system->impl, mode_from_c(mode)));
    *out_text = dup_string(text);
    if (*out_text == nullptr) {
      throw bilred::Error(bilred::ErrorCode::Internal, "allocation failed");
    }
  });
}

bilred_status bilred_relax_write_lp(const bilred_system* system,
                                    bilred_relax_mode mode, const char* path) {
  if (system == nullptr) return bad_argument("system must not be NULL");
  if (path == nullptr) return bad_argument("path must not be NULL");
  return guarded([&] {
    bilred::emit_lp_file(
        bilred::build_relaxation(system->impl, mode_from_c(mode)), path);
  });
}

char* bilred_last_error_json(void) { return dup_string(g_last_error); }

void bilred_free(void* ptr) { std::free(ptr); }

}  // extern "C"
