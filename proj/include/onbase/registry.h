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

#ifndef ONBASE_REGISTRY_H_
#define ONBASE_REGISTRY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "onbase/model.h"
#include "onbase/offline.h"

namespace onbase {

// Tunables shared by the registry entries. Unset test-user counts fall back
// to a per-algorithm default fraction of n.
struct AlgorithmParams {
  std::optional<size_t> r;
  std::optional<double> alpha;
  double p = 0.5;
  std::optional<int> hidden_bs;
};

enum class AlgorithmKind {
  kAllocation,  // produces a total user -> basestation allocation
  kMatching,    // produces a matching; scored by matched weight
};

struct AlgorithmInfo {
  std::string_view name;
  AlgorithmKind kind;
  bool identical_basestations;  // analysed for identical basestations
  bool randomized;
  std::string_view summary;
};

std::span<const AlgorithmInfo> Algorithms();
std::string AlgorithmNames();
// Throws ErrorCode::kConfig naming the valid choices.
const AlgorithmInfo& FindAlgorithm(std::string_view name);

std::unique_ptr<OnlineAlgorithm> MakeAlgorithm(std::string_view name,
                                               const AlgorithmParams& params);

Matching RunMatchingAlgorithm(std::string_view name,
                              const AlgorithmParams& params,
                              const WeightMatrix& w, uint64_t seed,
                              const std::optional<ArrivalOrder>& order);

// Test-user parameter as reported in result tables (r for the secretary
// family, p for sampling, empty otherwise).
std::optional<double> ReportedParam(std::string_view name,
                                    const AlgorithmParams& params,
                                    size_t num_users);

}  // namespace onbase

#endif  // ONBASE_REGISTRY_H_
