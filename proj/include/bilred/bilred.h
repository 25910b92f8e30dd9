/* Copyright 2026 The bilred Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the bilred shared library.
 *
 * bilred reformulates linearly constrained bilinear systems: for a system
 *   Ax = b,  w_j = x_j * y  (j = 1..n)
 * with A of full row rank m <= n, it derives the linear rows Aw - by = 0
 * and an index set J of size n - m such that keeping only the bilinear
 * equations indexed by J yields the same solution set. The library exposes
 * the reduction itself, validity checks and witnesses for caller-chosen
 * index sets, randomized equivalence verification, an exhaustive oracle
 * for small systems, and LP relaxations of both formulations.
 *
 * Conventions:
 *  - All index sets crossing this interface are 1-based.
 *  - Every function that can fail returns a bilred_status; BILRED_OK is 0.
 *    After a failure, bilred_last_error_json() describes the error.
 *  - Strings returned through char** out parameters are heap-allocated;
 *    release them with bilred_free().
 */

#ifndef BILRED_INCLUDE_BILRED_BILRED_H_
#define BILRED_INCLUDE_BILRED_BILRED_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BILRED_API __declspec(dllexport)
#else
#define BILRED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bilred_status {
  BILRED_OK = 0,
  BILRED_ERROR_MALFORMED_JSON = 1,
  BILRED_ERROR_DIMENSION_MISMATCH = 2,
  BILRED_ERROR_RANK_DEFICIENT = 3,
  BILRED_ERROR_BAD_RATIONAL = 4,
  BILRED_ERROR_SINGULAR_DIAGONAL = 5,
  BILRED_ERROR_NOT_SQUARE = 6,
  BILRED_ERROR_BAD_INDEX_SET = 7,
  BILRED_ERROR_SINGULAR_SYSTEM = 8,
  BILRED_ERROR_INFEASIBLE_X = 9,
  BILRED_ERROR_TOO_LARGE = 10,
  BILRED_ERROR_BAD_ARGUMENT = 11,
  BILRED_ERROR_MISSING_BOUNDS = 12,
  BILRED_ERROR_MISSING_OBJECTIVE = 13,
  BILRED_ERROR_BAD_BOX = 14,
  BILRED_ERROR_IO = 15,
  BILRED_ERROR_INTERNAL = 16
} bilred_status;

typedef enum bilred_relax_mode {
  BILRED_RELAX_FULL = 0,
  BILRED_RELAX_REDUCED = 1
} bilred_relax_mode;

/* Opaque handle for a parsed system. */
typedef struct bilred_system bilred_system;

/* Library version as "major.minor.patch". Static storage; do not free. */
BILRED_API const char* bilred_version(void);

/* Stable lower_snake name of a status. Static storage; do not free. */
BILRED_API const char* bilred_status_name(bilred_status status);

/* Parses a problem document:
 *   {"A": [[rational, ...], ...], "b": [rational, ...],
 *    "bounds"?: {"x": [[lo, hi], ...], "y": [lo, hi]},
 *    "objective"?: {"x": [...], "w": [...], "y": rational,
 *                   "sense": "min"|"max"}}
 * Rationals are JSON integers or "p/q" strings; floats are rejected.
 * On success stores a new handle in *out; free it with bilred_system_free.
 */
BILRED_API bilred_status bilred_system_parse(const char* json_text,
                                             bilred_system** out);

/* Reads the file at `path` and parses it like bilred_system_parse. */
BILRED_API bilred_status bilred_system_load(const char* path,
                                            bilred_system** out);

BILRED_API void bilred_system_free(bilred_system* system);

/* Row count m / column count n; -1 if `system` is NULL. */
BILRED_API int bilred_system_rows(const bilred_system* system);
BILRED_API int bilred_system_cols(const bilred_system* system);

/* Serializes the system back to its document form. */
BILRED_API bilred_status bilred_system_to_json(const bilred_system* system,
                                               char** out_json);

/* Derives the reduction: the retained index set J, its complement, and the
 * added linear rows Aw = by. Output keys: "J", "basic", "reduction_rows",
 * "rhs_coeff_y", "retained_bilinear".
 */
BILRED_API bilred_status bilred_reduce(const bilred_system* system,
                                       char** out_json);

/* Randomized equivalence check between the original system and the
 * reduction that keeps only the bilinear rows indexed by `j` (1-based,
 * `j_len` = n - m). Pass j = NULL, j_len = 0 to test the derived set.
 * `trials` must be >= 1. The check is deterministic in (system, j, trials,
 * seed). Output keys: "trials", "forward_failures", "backward_failures",
 * "counterexample"?, "seed", "equivalent", "J".
 */
BILRED_API bilred_status bilred_verify(const bilred_system* system,
                                       const int* j, size_t j_len,
                                       long long trials, uint64_t seed,
                                       char** out_json);

/* Decides validity of an index set and, when invalid, constructs a point
 * that satisfies the reduced system but not the original one. Pass
 * j = NULL, j_len = 0 for the derived set (always valid). Output keys:
 * "J", "valid", "witness"?.
 */
BILRED_API bilred_status bilred_witness(const bilred_system* system,
                                        const int* j, size_t j_len,
                                        char** out_json);

/* Enumerates every valid index set by exhaustive search. Refuses systems
 * with n > max_cols (BILRED_ERROR_TOO_LARGE); max_cols <= 0 selects the
 * default cap of 14. Output keys: "n", "m", "count", "valid_J".
 */
BILRED_API bilred_status bilred_oracle(const bilred_system* system,
                                       int max_cols, char** out_json);

/* Reports both LP relaxations side by side: row counts by kind, and when
 * `solve` is nonzero also the exact optimum of each. Requires bounds and
 * an objective. Output keys: "full", "reduced", "bilinear_terms_replaced".
 */
BILRED_API bilred_status bilred_relax_report(const bilred_system* system,
                                             int solve, char** out_json);

/* Renders the relaxation for one mode in CPLEX LP format. The text is a
 * pure function of the system and mode (byte-identical across runs).
 */
BILRED_API bilred_status bilred_relax_render_lp(const bilred_system* system,
                                                bilred_relax_mode mode,
                                                char** out_text);

/* Like bilred_relax_render_lp, but writes the text to the file at `path`. */
BILRED_API bilred_status bilred_relax_write_lp(const bilred_system* system,
                                               bilred_relax_mode mode,
                                               const char* path);

/* JSON description of this thread's most recent failure:
 *   {"error": "...", "message": "...", ...integer details}
 * Heap-allocated; free with bilred_free. Meaningful after a call returned
 * a nonzero status on the same thread.
 */
BILRED_API char* bilred_last_error_json(void);

/* Releases any string allocated by this library. NULL is a no-op. */
BILRED_API void bilred_free(void* ptr);

#ifdef __cplusplus
}
#endif

#endif /* BILRED_INCLUDE_BILRED_BILRED_H_ */
