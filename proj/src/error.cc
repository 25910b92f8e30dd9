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

#include "error.h"

namespace bilred {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedJson:
      return "MalformedJson";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::RankDeficient:
      return "RankDeficient";
    case ErrorCode::BadRational:
      return "BadRational";
    case ErrorCode::SingularDiagonal:
      return "SingularDiagonal";
    case ErrorCode::NotSquare:
      return "NotSquare";
    case ErrorCode::BadIndexSet:
      return "BadIndexSet";
    case ErrorCode::SingularSystem:
      return "SingularSystem";
    case ErrorCode::InfeasibleX:
      return "InfeasibleX";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::BadArgument:
      return "BadArgument";
    case ErrorCode::MissingBounds:
      return "MissingBounds";
    case ErrorCode::MissingObjective:
      return "MissingObjective";
    case ErrorCode::BadBox:
      return "BadBox";
    case ErrorCode::IoError:
      return "IoError";
    case ErrorCode::Internal:
      return "Internal";
  }
  return "Internal";
}

Error::Error(ErrorCode code, std::string message)
    : code_(code), message_(std::move(message)) {
  what_ = std::string(error_code_name(code_)) + ": " + message_;
}

Error& Error::with_int(const std::string& key, long long value) {
  int_details_.emplace_back(key, value);
  return *this;
}

long long Error::int_detail(const std::string& key, long long fallback) const {
  for (const auto& [k, v] : int_details_) {
    if (k == key) return v;
  }
  return fallback;
}

}  // namespace bilred
