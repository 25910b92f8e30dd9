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

// Command-line front end for the bilred shared library. Exit codes:
//   0  success (including verify runs that report "equivalent": false)
//   1  domain errors, reported as one-line JSON on stderr
//   2  usage errors
// Results are JSON on stdout (or --output); identical invocations produce
// byte-identical output.

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bilred/bilred.h"

namespace {

// Prints the library's thread-local error JSON as a single line on stderr.
int fail_domain() {
  char* err = bilred_last_error_json();
  std::fputs(err != nullptr ? err : R"({"error":"Internal"})", stderr);
  std::fputc('\n', stderr);
  bilred_free(err);
  return 1;
}

int fail_output_io() {
  std::fputs(
      R"({"error":"IoError","message":"cannot write the output file"})",
      stderr);
  std::fputc('\n', stderr);
  return 1;
}

int write_result(const char* text, const std::string& output_path) {
  if (output_path.empty()) {
    std::fputs(text, stdout);
    std::fputc('\n', stdout);
    return 0;
  }
  std::FILE* file = std::fopen(output_path.c_str(), "wb");
  if (file == nullptr) return fail_output_io();
  const bool ok = std::fputs(text, file) >= 0 && std::fputc('\n', file) != EOF;
  if (std::fclose(file) != 0 || !ok) return fail_output_io();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Reformulation toolkit for linearly constrained bilinear systems: "
      "replaces bilinear equations w_j = x_j*y by linear rows Aw = by, "
      "keeping an index set J that preserves the solution set exactly."};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::vector<int> j_values;
  long long trials = 100;
  uint64_t seed = 0;
  int max_cols = 0;
  std::string mode;
  std::string emit_lp;
  bool solve = false;

  const auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Path to the problem JSON document")
        ->required();
    cmd->add_option("--output", output,
                    "Write the result here instead of stdout");
  };
  const auto add_j = [&](CLI::App* cmd) {
    cmd->add_option("--J", j_values,
                    "Comma-separated 1-based index set (default: the "
                    "derived set)")
        ->delimiter(',');
  };

  CLI::App* reduce = app.add_subcommand(
      "reduce",
      "Derive the retained index set J and the linear reduction rows");
  add_io(reduce);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Randomized equivalence check between the system and its reduction");
  add_io(verify);
  add_j(verify);
  verify->add_option("--trials", trials, "Number of randomized trials")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for the deterministic trial stream")
      ->capture_default_str();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Enumerate every valid index set (exhaustive, small n)");
  add_io(oracle);
  oracle->add_option("--max-cols", max_cols,
                     "Enumeration cap on the column count (default 14)");

  CLI::App* witness = app.add_subcommand(
      "witness",
      "Validity check and counterexample construction for an index set");
  add_io(witness);
  add_j(witness);

  CLI::App* relax = app.add_subcommand(
      "relax", "Compare the LP relaxations of both formulations");
  add_io(relax);
  relax->add_option("--mode", mode, "Which relaxation --emit-lp renders")
      ->required()
      ->check(CLI::IsMember({"full", "reduced"}));
  relax->add_option("--emit-lp", emit_lp,
                    "Write the selected mode's LP file to this path");
  relax->add_flag("--solve", solve, "Also compute both exact optima");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bilred_system* system = nullptr;
  if (bilred_system_load(input.c_str(), &system) != BILRED_OK) {
    return fail_domain();
  }

  const int* j_data = j_values.empty() ? nullptr : j_values.data();
  const size_t j_len = j_values.size();
  char* result = nullptr;
  bilred_status status = BILRED_OK;
  if (reduce->parsed()) {
    status = bilred_reduce(system, &result);
  } else if (verify->parsed()) {
    status = bilred_verify(system, j_data, j_len, trials, seed, &result);
  } else if (oracle->parsed()) {
    status = bilred_oracle(system, max_cols, &result);
  } else if (witness->parsed()) {
    status = bilred_witness(system, j_data, j_len, &result);
  } else if (relax->parsed()) {
    const bilred_relax_mode relax_mode =
        mode == "full" ? BILRED_RELAX_FULL : BILRED_RELAX_REDUCED;
    if (!emit_lp.empty()) {
      status = bilred_relax_write_lp(system, relax_mode, emit_lp.c_str());
    }
    if (status == BILRED_OK) {
      status = bilred_relax_report(system, solve ? 1 : 0, &result);
    }
  }

  int rc;
  if (status != BILRED_OK) {
    rc = fail_domain();
  } else {
    rc = write_result(result, output);
  }
  bilred_free(result);
  bilred_system_free(system);
  return rc;
}
