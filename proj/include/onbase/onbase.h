// Copyright 2026 The onbase Authors.
//
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

#ifndef ONBASE_ONBASE_H_
#define ONBASE_ONBASE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ONBASE_API __declspec(dllexport)
#else
#define ONBASE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum onbase_status {
  ONBASE_OK = 0,
  ONBASE_ERR_INVALID_ARGUMENT = 1,
  ONBASE_ERR_CONFIG = 2,
  ONBASE_ERR_INVALID_ALLOCATION = 3,
  ONBASE_ERR_UNSUPPORTED_SHAPE = 4,
  ONBASE_ERR_TOO_LARGE = 5,
  ONBASE_ERR_CONTRACT_VIOLATION = 6,
  ONBASE_ERR_PARAM = 7,
  ONBASE_ERR_IO = 8,
  ONBASE_ERR_INTERNAL = 9,
} onbase_status;

// Opaque handles. Every handle returned through an out-parameter is owned by
// the caller and released with the matching _free function.
typedef struct onbase_matrix onbase_matrix;
typedef struct onbase_string onbase_string;

// Message of the last failure on the calling thread ("" if none).
ONBASE_API const char* onbase_last_error(void);
ONBASE_API const char* onbase_status_name(onbase_status status);
ONBASE_API const char* onbase_version(void);

ONBASE_API const char* onbase_string_data(const onbase_string* s);
ONBASE_API size_t onbase_string_size(const onbase_string* s);
ONBASE_API void onbase_string_free(onbase_string* s);

// Weight matrices. `values` is row-major, n rows (users) by m columns.
ONBASE_API onbase_status onbase_matrix_create(size_t n, size_t m, const double* values,
                                              onbase_matrix** out);
// CSV or {"n","m","w"} JSON, detected from the text.
ONBASE_API onbase_status onbase_matrix_parse(const char* text, onbase_matrix** out);
ONBASE_API onbase_status onbase_matrix_load(const char* path, onbase_matrix** out);
ONBASE_API void onbase_matrix_free(onbase_matrix* w);
ONBASE_API size_t onbase_matrix_users(const onbase_matrix* w);
ONBASE_API size_t onbase_matrix_bs(const onbase_matrix* w);
// Borrowed pointer to the n*m row-major entries, valid while `w` lives.
ONBASE_API const double* onbase_matrix_data(const onbase_matrix* w);
ONBASE_API onbase_status onbase_matrix_to_csv(const onbase_matrix* w, onbase_string** out);
ONBASE_API onbase_status onbase_matrix_to_json(const onbase_matrix* w, onbase_string** out);

// Basestation indices in `assign` arrays are 1-based; 0 marks an unassigned
// user.
ONBASE_API onbase_status onbase_ts_utility(const onbase_matrix* w, const int* assign,
                                           double* out);

// Offline optima. `assign_out` may be NULL, else it receives n entries.
ONBASE_API onbase_status onbase_optimal_identical(const double* weights, size_t n,
                                                  size_t m, double* value,
                                                  int* assign_out);
ONBASE_API onbase_status onbase_brute_force(const onbase_matrix* w, double* value,
                                            int* assign_out);
// Matchings come back as JSON edge lists.
ONBASE_API onbase_status onbase_max_weight_matching(const onbase_matrix* w,
                                                    onbase_string** json_out);
ONBASE_API onbase_status onbase_greedy_matching(const onbase_matrix* w,
                                                onbase_string** json_out);

// Online runs. `params_json` (may be NULL) holds any of "r", "alpha", "p"
// and the 1-based "hidden_bs". `order` (may be NULL) lists the 1-based user
// revealed at each arrival.
ONBASE_API onbase_status onbase_run_online(const onbase_matrix* w, const char* algorithm,
                                           const char* params_json, uint64_t seed,
                                           const size_t* order, int* assign_out,
                                           double* utility_out);
// Same, returning the allocation and the decision trace as JSON.
ONBASE_API onbase_status onbase_run_online_json(const onbase_matrix* w,
                                                const char* algorithm,
                                                const char* params_json, uint64_t seed,
                                                const size_t* order,
                                                onbase_string** json_out);
ONBASE_API onbase_status onbase_run_matching(const onbase_matrix* w, const char* algorithm,
                                             const char* params_json, uint64_t seed,
                                             const size_t* order,
                                             onbase_string** json_out);

// Inputs. An adversary spec such as "identical-geometric:beta=10,n=5,m=2,l=5"
// yields member l (the last member when l is absent).
ONBASE_API onbase_status onbase_generate(const char* adversary, onbase_matrix** out);
ONBASE_API onbase_status onbase_sample_model(const char* model, size_t n, size_t m,
                                             uint64_t seed, onbase_matrix** out);

// {"formula": .., "n": .., "r": .., "m": .., "d": .., "dmax": .., "t": ..,
//  "alpha": ..}; the result is JSON.
ONBASE_API onbase_status onbase_analytic(const char* query_json, onbase_string** out);

// Experiment config as JSON. Only validates.
ONBASE_API onbase_status onbase_check_config(const char* config_json);
// Either output may be NULL.
ONBASE_API onbase_status onbase_run_experiment(const char* config_json,
                                               onbase_string** csv_out,
                                               onbase_string** manifest_out);
ONBASE_API onbase_status onbase_worst_case(const char* algorithm, const char* params_json,
                                           const char* adversary, uint64_t seed,
                                           onbase_string** csv_out,
                                           onbase_string** json_out);
// `options_json` (may be NULL) holds any of "n", "m", "trials", "seed",
// "threads", "alphas", "correlated".
ONBASE_API onbase_status onbase_figure(const char* which, const char* options_json,
                                       onbase_string** csv_out);

// Comma-separated names: "algorithms", "families", "analytics", "baselines",
// "figures" or "models".
ONBASE_API onbase_status onbase_list(const char* what, onbase_string** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ONBASE_ONBASE_H_
