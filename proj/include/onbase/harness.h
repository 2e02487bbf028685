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

#ifndef ONBASE_HARNESS_H_
#define ONBASE_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onbase/adversaries.h"
#include "onbase/model.h"
#include "onbase/registry.h"

namespace onbase {

inline constexpr std::string_view kVersion = "1.0.0";

// What a trial's utility is divided by.
enum class Baseline {
  kBruteForce,  // exact optimum by enumeration
  kProp1,       // exact optimum for identical basestations
  kMwmUpper,    // max-weight matching; an upper bound, not an optimum
};

std::string_view BaselineName(Baseline b);
Baseline ParseBaseline(std::string_view name);

struct ExperimentConfig {
  std::vector<std::string> algorithms;
  // Exactly one input source is set.
  std::optional<RandomModel> model;
  std::optional<FamilySpec> adversary;
  std::optional<std::string> matrix_path;

  std::vector<size_t> n_values;  // ignored for matrix input
  size_t m = 2;
  size_t trials = 1000;
  uint64_t seed = 1;
  // Unset: prop1 for identical-basestation inputs, mwm-upper otherwise.
  std::optional<Baseline> baseline;
  AlgorithmParams params;
  size_t threads = 0;  // 0: all hardware threads
  std::string out;     // empty or "-": stdout
};

std::string ConfigToJson(const ExperimentConfig& cfg);
ExperimentConfig ConfigFromJson(std::string_view text);
// Throws ErrorCode::kConfig on any inconsistency, before work starts.
void ValidateConfig(const ExperimentConfig& cfg);
Baseline ResolveBaseline(const ExperimentConfig& cfg);
std::string InputName(const ExperimentConfig& cfg);

struct RatioEstimate {
  std::string algorithm;
  std::string model;
  size_t n = 0;
  size_t m = 0;
  std::optional<double> r_or_p;
  size_t trials = 0;
  uint64_t seed = 0;
  Baseline baseline = Baseline::kProp1;
  double rho_mean = 0.0;
  double rho_se = 0.0;
  double eta_mean = 0.0;
  double eta_se = 0.0;
  // mean(OPT) / mean(ALG)
  double eta_of_means = 0.0;
  double alg_mean = 0.0;
  double opt_mean = 0.0;
  // Trials where the algorithm earned nothing against a positive baseline;
  // their eta is infinite.
  size_t zero_utility_trials = 0;

  bool baseline_is_bound() const { return baseline == Baseline::kMwmUpper; }
};

struct TrialOutcome {
  double alg = 0.0;
  double opt = 0.0;
};

// One trial of one algorithm. The input matrix and arrival order depend only
// on (seed, n, trial), so every algorithm sees the same instances.
TrialOutcome RunTrial(const ExperimentConfig& cfg, std::string_view algorithm,
                      size_t n, size_t trial);

// One estimate per (algorithm, n), algorithms outermost.
std::vector<RatioEstimate> RunAverageCase(const ExperimentConfig& cfg);

// CSV with a header row; rows in the given order.
std::string EstimatesToCsv(const std::vector<RatioEstimate>& rows,
                           std::string_view run_id);
std::string RunId(const ExperimentConfig& cfg);
std::string ManifestJson(const ExperimentConfig& cfg,
                         const std::vector<RatioEstimate>& rows);

// ---------------------------------------------------------------------------
// Worst case: the adversary also fixes the arrival order (row order).

struct WorstCaseRow {
  size_t l = 0;
  double log_opt = 0.0;
  double log_alg = 0.0;
  double eta = 0.0;  // exp(log_opt - log_alg)
  double rho = 0.0;
  bool opt_exact = true;
  // The algorithm ran on an order-preserving stand-in because the weights
  // overflow doubles.
  bool surrogate = false;
};

struct WorstCaseReport {
  std::string algorithm;
  std::string family;
  std::vector<WorstCaseRow> rows;
  double max_eta = 0.0;
  size_t argmax_l = 0;
};

// Evaluates every member (or only spec.l when set).
WorstCaseReport RunWorstCaseFamily(std::string_view algorithm,
                                   const AlgorithmParams& params,
                                   const FamilySpec& spec, uint64_t seed);
std::string WorstCaseToCsv(const WorstCaseReport& report);
std::string WorstCaseToJson(const WorstCaseReport& report);

// ---------------------------------------------------------------------------
// Figure datasets.

enum class Figure { kKsec, kArbWeights, kReassign };

std::string_view FigureName(Figure f);
Figure ParseFigure(std::string_view name);

struct FigureOptions {
  std::vector<size_t> n_values = {100, 200, 500, 1000};
  size_t m = 10;
  size_t trials = 200;
  uint64_t seed = 1;
  size_t threads = 0;
  // Test-user fractions swept for the k-secretary figure.
  std::vector<double> alphas = {0.1, 0.22, 0.37};
  RandomModel correlated = ParseModel("correlated:dist=uniform,means=10/5");
};

// The experiment configurations behind a figure, in output order.
std::vector<ExperimentConfig> FigureConfigs(Figure f, const FigureOptions& opt);
std::vector<RatioEstimate> ReproduceFigure(Figure f, const FigureOptions& opt);

}  // namespace onbase

#endif  // ONBASE_HARNESS_H_
