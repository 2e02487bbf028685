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

#include "onbase/onbase.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "onbase/adversaries.h"
#include "onbase/analytics.h"
#include "onbase/error.h"
#include "onbase/harness.h"
#include "onbase/io.h"
#include "onbase/offline.h"
#include "onbase/registry.h"

struct onbase_matrix {
  onbase::WeightMatrix w;
};

struct onbase_string {
  std::string text;
};

namespace {

using nlohmann::json;
using onbase::Error;
using onbase::ErrorCode;

thread_local std::string last_error;

onbase_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return ONBASE_ERR_INVALID_ARGUMENT;
    case ErrorCode::kConfig: return ONBASE_ERR_CONFIG;
    case ErrorCode::kInvalidAllocation: return ONBASE_ERR_INVALID_ALLOCATION;
    case ErrorCode::kUnsupportedShape: return ONBASE_ERR_UNSUPPORTED_SHAPE;
    case ErrorCode::kTooLarge: return ONBASE_ERR_TOO_LARGE;
    case ErrorCode::kContractViolation: return ONBASE_ERR_CONTRACT_VIOLATION;
    case ErrorCode::kParam: return ONBASE_ERR_PARAM;
    case ErrorCode::kIo: return ONBASE_ERR_IO;
  }
  return ONBASE_ERR_INTERNAL;
}

// Runs `body`, converting exceptions into a status and the thread's last
// error message.
template <typename Body>
onbase_status Guard(Body body) {
  try {
    last_error.clear();
    body();
    return ONBASE_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON argument: ") + e.what();
    return ONBASE_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ONBASE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ONBASE_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

const onbase::WeightMatrix& M(const onbase_matrix* w) {
  Require(w != nullptr, "matrix handle is NULL");
  return w->w;
}

void Emit(onbase_string** out, std::string text) {
  if (out) *out = new onbase_string{std::move(text)};
}

onbase::AlgorithmParams ParseParams(const char* text) {
  onbase::AlgorithmParams p;
  if (!text || !*text) return p;
  const json doc = json::parse(text);
  Require(doc.is_object(), "params must be a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (v.is_null()) continue;
    if (key == "r") p.r = v.get<size_t>();
    else if (key == "alpha") p.alpha = v.get<double>();
    else if (key == "p") p.p = v.get<double>();
    else if (key == "hidden_bs") p.hidden_bs = v.get<int>() - 1;
    else throw Error(ErrorCode::kConfig, "unknown algorithm parameter '" + key + "'");
  }
  return p;
}

std::optional<onbase::ArrivalOrder> ParseOrder(const size_t* order, size_t n) {
  if (!order) return std::nullopt;
  std::vector<size_t> perm(n);
  for (size_t k = 0; k < n; ++k) {
    Require(order[k] >= 1, "order entries are 1-based");
    perm[k] = order[k] - 1;
  }
  return onbase::ArrivalOrder(std::move(perm));
}

void CopyAssign(const onbase::Allocation& a, int* out) {
  if (!out) return;
  for (size_t i = 0; i < a.num_users(); ++i) out[i] = a.bs_of(i) + 1;
}

onbase::WeightMatrix ParseMatrixText(std::string_view text) {
  return text.find('{') != std::string_view::npos ? onbase::WeightMatrixFromJson(text)
                                                  : onbase::WeightMatrixFromCsv(text);
}

}  // namespace

extern "C" {

const char* onbase_last_error(void) { return last_error.c_str(); }

const char* onbase_status_name(onbase_status status) {
  switch (status) {
    case ONBASE_OK: return "ok";
    case ONBASE_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case ONBASE_ERR_CONFIG: return "config";
    case ONBASE_ERR_INVALID_ALLOCATION: return "invalid-allocation";
    case ONBASE_ERR_UNSUPPORTED_SHAPE: return "unsupported-shape";
    case ONBASE_ERR_TOO_LARGE: return "too-large";
    case ONBASE_ERR_CONTRACT_VIOLATION: return "contract-violation";
    case ONBASE_ERR_PARAM: return "param";
    case ONBASE_ERR_IO: return "io";
    case ONBASE_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* onbase_version(void) { return onbase::kVersion.data(); }

const char* onbase_string_data(const onbase_string* s) { return s ? s->text.c_str() : ""; }
size_t onbase_string_size(const onbase_string* s) { return s ? s->text.size() : 0; }
void onbase_string_free(onbase_string* s) { delete s; }

onbase_status onbase_matrix_create(size_t n, size_t m, const double* values,
                                   onbase_matrix** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    Require(values != nullptr || n * m == 0, "values is NULL");
    std::vector<double> v(values, values + n * m);
    *out = new onbase_matrix{onbase::WeightMatrix(n, m, std::move(v))};
  });
}

onbase_status onbase_matrix_parse(const char* text, onbase_matrix** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "NULL argument");
    *out = new onbase_matrix{ParseMatrixText(text)};
  });
}

onbase_status onbase_matrix_load(const char* path, onbase_matrix** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "NULL argument");
    *out = new onbase_matrix{ParseMatrixText(onbase::ReadTextFile(path))};
  });
}

void onbase_matrix_free(onbase_matrix* w) { delete w; }
size_t onbase_matrix_users(const onbase_matrix* w) { return w ? w->w.num_users() : 0; }
size_t onbase_matrix_bs(const onbase_matrix* w) { return w ? w->w.num_bs() : 0; }
const double* onbase_matrix_data(const onbase_matrix* w) {
  return w ? w->w.values().data() : nullptr;
}

onbase_status onbase_matrix_to_csv(const onbase_matrix* w, onbase_string** out) {
  return Guard([&] { Emit(out, onbase::WeightMatrixToCsv(M(w))); });
}

onbase_status onbase_matrix_to_json(const onbase_matrix* w, onbase_string** out) {
  return Guard([&] { Emit(out, onbase::WeightMatrixToJson(M(w))); });
}

onbase_status onbase_ts_utility(const onbase_matrix* w, const int* assign, double* out) {
  return Guard([&] {
    const auto& mat = M(w);
    Require(assign != nullptr && out != nullptr, "NULL argument");
    std::vector<int> a(assign, assign + mat.num_users());
    for (int& bs : a) {
      if (bs < 0 || static_cast<size_t>(bs) > mat.num_bs()) {
        throw Error(ErrorCode::kInvalidAllocation,
                    "basestation index " + std::to_string(bs) + " out of range");
      }
      --bs;
    }
    *out = onbase::TsUtility(onbase::Allocation::FromVector(a, mat.num_bs()), mat);
  });
}

onbase_status onbase_optimal_identical(const double* weights, size_t n, size_t m,
                                       double* value, int* assign_out) {
  return Guard([&] {
    Require(weights != nullptr || n == 0, "weights is NULL");
    const auto sol = onbase::OptimalIdenticalOffline({weights, n}, m);
    if (value) *value = sol.value;
    CopyAssign(sol.allocation, assign_out);
  });
}

onbase_status onbase_brute_force(const onbase_matrix* w, double* value, int* assign_out) {
  return Guard([&] {
    const auto sol = onbase::BruteForceOptimal(M(w));
    if (value) *value = sol.value;
    CopyAssign(sol.allocation, assign_out);
  });
}

onbase_status onbase_max_weight_matching(const onbase_matrix* w, onbase_string** json_out) {
  return Guard([&] { Emit(json_out, onbase::MatchingToJson(onbase::MaxWeightMatching(M(w)))); });
}

onbase_status onbase_greedy_matching(const onbase_matrix* w, onbase_string** json_out) {
  return Guard([&] { Emit(json_out, onbase::MatchingToJson(onbase::GreedyMatching(M(w)))); });
}

onbase_status onbase_run_online(const onbase_matrix* w, const char* algorithm,
                                const char* params_json, uint64_t seed, const size_t* order,
                                int* assign_out, double* utility_out) {
  return Guard([&] {
    const auto& mat = M(w);
    Require(algorithm != nullptr, "algorithm is NULL");
    auto alg = onbase::MakeAlgorithm(algorithm, ParseParams(params_json));
    const auto res = onbase::RunOnline(*alg, mat, seed, ParseOrder(order, mat.num_users()));
    CopyAssign(res.allocation, assign_out);
    if (utility_out) *utility_out = onbase::TsUtility(res.allocation, mat);
  });
}

onbase_status onbase_run_online_json(const onbase_matrix* w, const char* algorithm,
                                     const char* params_json, uint64_t seed,
                                     const size_t* order, onbase_string** json_out) {
  return Guard([&] {
    const auto& mat = M(w);
    Require(algorithm != nullptr, "algorithm is NULL");
    auto alg = onbase::MakeAlgorithm(algorithm, ParseParams(params_json));
    const auto res = onbase::RunOnline(*alg, mat, seed, ParseOrder(order, mat.num_users()));
    json trace = json::array();
    for (const auto& e : res.trace) {
      json entry{{"position", e.position + 1}, {"user", e.user + 1}, {"bs", e.bs + 1}};
      if (e.move) {
        entry["move"] = {{"user", e.move->user + 1},
                         {"from", e.move->from + 1},
                         {"to", e.move->to == onbase::Move::kDeleted
                                    ? json("deleted")
                                    : json(e.move->to + 1)}};
      }
      trace.push_back(entry);
    }
    json doc = json::parse(onbase::AllocationToJson(res.allocation, mat));
    doc["algorithm"] = algorithm;
    doc["trace"] = trace;
    Emit(json_out, doc.dump());
  });
}

onbase_status onbase_run_matching(const onbase_matrix* w, const char* algorithm,
                                  const char* params_json, uint64_t seed, const size_t* order,
                                  onbase_string** json_out) {
  return Guard([&] {
    const auto& mat = M(w);
    Require(algorithm != nullptr, "algorithm is NULL");
    const auto mt = onbase::RunMatchingAlgorithm(algorithm, ParseParams(params_json), mat,
                                                 seed, ParseOrder(order, mat.num_users()));
    Emit(json_out, onbase::MatchingToJson(mt));
  });
}

onbase_status onbase_generate(const char* adversary, onbase_matrix** out) {
  return Guard([&] {
    Require(adversary != nullptr && out != nullptr, "NULL argument");
    onbase::FamilySpec spec = onbase::ParseFamilySpec(adversary);
    onbase::ValidateFamily(spec);
    const size_t l = spec.l.value_or(onbase::FamilySize(spec));
    *out = new onbase_matrix{onbase::FamilyMember(spec, l)};
  });
}

onbase_status onbase_sample_model(const char* model, size_t n, size_t m, uint64_t seed,
                                  onbase_matrix** out) {
  return Guard([&] {
    Require(model != nullptr && out != nullptr, "NULL argument");
    onbase::Rng rng(seed);
    *out = new onbase_matrix{onbase::SampleRandomModel(onbase::ParseModel(model), n, m, rng)};
  });
}

onbase_status onbase_analytic(const char* query_json, onbase_string** out) {
  return Guard([&] {
    Require(query_json != nullptr, "query is NULL");
    const json doc = json::parse(query_json);
    onbase::AnalyticQuery q;
    for (const auto& [key, v] : doc.items()) {
      if (v.is_null()) continue;
      if (key == "formula") q.formula = v.get<std::string>();
      else if (key == "n") q.n = v.get<size_t>();
      else if (key == "r") q.r = v.get<size_t>();
      else if (key == "m") q.m = v.get<size_t>();
      else if (key == "d") q.d = v.get<size_t>();
      else if (key == "dmax") q.dmax = v.get<size_t>();
      else if (key == "t") q.t = v.get<long>();
      else if (key == "alpha") q.alpha = v.get<double>();
      else throw Error(ErrorCode::kConfig, "unknown analytic parameter '" + key + "'");
    }
    Emit(out, onbase::EvaluateAnalytic(q));
  });
}

onbase_status onbase_check_config(const char* config_json) {
  return Guard([&] {
    Require(config_json != nullptr, "config is NULL");
    onbase::ValidateConfig(onbase::ConfigFromJson(config_json));
  });
}

onbase_status onbase_run_experiment(const char* config_json, onbase_string** csv_out,
                                    onbase_string** manifest_out) {
  return Guard([&] {
    Require(config_json != nullptr, "config is NULL");
    const auto cfg = onbase::ConfigFromJson(config_json);
    const auto rows = onbase::RunAverageCase(cfg);
    Emit(csv_out, onbase::EstimatesToCsv(rows, onbase::RunId(cfg)));
    Emit(manifest_out, onbase::ManifestJson(cfg, rows));
  });
}

onbase_status onbase_worst_case(const char* algorithm, const char* params_json,
                                const char* adversary, uint64_t seed, onbase_string** csv_out,
                                onbase_string** json_out) {
  return Guard([&] {
    Require(algorithm != nullptr && adversary != nullptr, "NULL argument");
    const auto rep = onbase::RunWorstCaseFamily(algorithm, ParseParams(params_json),
                                                onbase::ParseFamilySpec(adversary), seed);
    Emit(csv_out, onbase::WorstCaseToCsv(rep));
    Emit(json_out, onbase::WorstCaseToJson(rep));
  });
}

onbase_status onbase_figure(const char* which, const char* options_json,
                            onbase_string** csv_out) {
  return Guard([&] {
    Require(which != nullptr, "figure name is NULL");
    const onbase::Figure fig = onbase::ParseFigure(which);
    onbase::FigureOptions opt;
    if (options_json && *options_json) {
      const json doc = json::parse(options_json);
      for (const auto& [key, v] : doc.items()) {
        if (v.is_null()) continue;
        if (key == "n") opt.n_values = v.get<std::vector<size_t>>();
        else if (key == "m") opt.m = v.get<size_t>();
        else if (key == "trials") opt.trials = v.get<size_t>();
        else if (key == "seed") opt.seed = v.get<uint64_t>();
        else if (key == "threads") opt.threads = v.get<size_t>();
        else if (key == "alphas") opt.alphas = v.get<std::vector<double>>();
        else if (key == "correlated") opt.correlated = onbase::ParseModel(v.get<std::string>());
        else throw Error(ErrorCode::kConfig, "unknown figure option '" + key + "'");
      }
    }
    for (const auto& cfg : onbase::FigureConfigs(fig, opt)) onbase::ValidateConfig(cfg);
    const auto rows = onbase::ReproduceFigure(fig, opt);
    Emit(csv_out, onbase::EstimatesToCsv(rows, std::string("figure-") +
                                                   std::string(onbase::FigureName(fig))));
  });
}

onbase_status onbase_list(const char* what, onbase_string** out) {
  return Guard([&] {
    const std::string w = what ? what : "algorithms";
    if (w == "algorithms") Emit(out, onbase::AlgorithmNames());
    else if (w == "families") Emit(out, onbase::FamilyNames());
    else if (w == "analytics") Emit(out, onbase::AnalyticNames());
    else if (w == "baselines") Emit(out, "brute-force, prop1, mwm-upper");
    else if (w == "figures") Emit(out, "ksec, arbweights, reassign");
    else if (w == "models") Emit(out, "iid, correlated");
    else throw Error(ErrorCode::kConfig, "unknown list '" + w + "'");
  });
}

}  // extern "C"
