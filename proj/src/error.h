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

#ifndef BILRED_SRC_ERROR_H_
#define BILRED_SRC_ERROR_H_

#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace bilred {

// Every failure the library can report. The names double as the "error"
// discriminant in JSON error payloads, so they are stable API.
enum class ErrorCode {
  MalformedJson,
  DimensionMismatch,
  RankDeficient,
  BadRational,
  SingularDiagonal,
  NotSquare,
  BadIndexSet,
  SingularSystem,
  InfeasibleX,
  TooLarge,
  BadArgument,
  MissingBounds,
  MissingObjective,
  BadBox,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Exception carrying a code, a human-readable message (indices are 1-based
// in messages), and optional integer details such as the computed rank.
class Error : public std::exception {
 public:
  Error(ErrorCode code, std::string message);

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const char* what() const noexcept override { return what_.c_str(); }

  Error& with_int(const std::string& key, long long value);
  // Returns the detail stored under `key`, or `fallback` if absent.
  long long int_detail(const std::string& key, long long fallback = -1) const;
  const std::vector<std::pair<std::string, long long>>& int_details() const {
    return int_details_;
  }

 private:
  ErrorCode code_;
  std::string message_;
  std::string what_;
  std::vector<std::pair<std::string, long long>> int_details_;
};

}  // namespace bilred

#endif  // BILRED_SRC_ERROR_H_
