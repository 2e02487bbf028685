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

#include "onbase/registry.h"

#include <array>
#include <cmath>
#include <numbers>

#include "onbase/error.h"
#include "onbase/online.h"

namespace onbase {

namespace {

constexpr std::array kAlgorithms = {
    AlgorithmInfo{"round-robin", AlgorithmKind::kAllocation, true, false,
                  "arrival i to basestation 1 + (i mod m)"},
    AlgorithmInfo{"max-weight", AlgorithmKind::kAllocation, false, false,
                  "largest-rate basestation, ties to lowest index"},
    AlgorithmInfo{"max-weight-balanced", AlgorithmKind::kAllocation, false, false,
                  "largest-rate basestation, ties to least loaded"},
    AlgorithmInfo{"secretary", AlgorithmKind::kAllocation, true, false,
                  "single-stop secretary rule, two basestations"},
    AlgorithmInfo{"secretary-modified", AlgorithmKind::kAllocation, true, false,
                  "running-maximum secretary rule, two basestations"},
    AlgorithmInfo{"k-secretary", AlgorithmKind::kAllocation, true, false,
                  "(m-1)-th best threshold, selected users round-robin"},
    AlgorithmInfo{"hide-and-seek", AlgorithmKind::kAllocation, false, true,
                  "hidden overflow basestation + sample-and-price matching"},
    AlgorithmInfo{"hide-and-seek-reassign", AlgorithmKind::kAllocation, false, true,
                  "hidden overflow basestation + evicting greedy matching"},
    AlgorithmInfo{"reassign-identical", AlgorithmKind::kAllocation, true, false,
                  "keeps m-1 heaviest users alone, one move per arrival"},
    AlgorithmInfo{"last-user-reassign", AlgorithmKind::kAllocation, true, false,
                  "utility-greedy, may move only the previous arrival"},
    AlgorithmInfo{"sample-and-price", AlgorithmKind::kMatching, false, true,
                  "online matching: sample, price, then accept"},
    AlgorithmInfo{"greedy-reassign", AlgorithmKind::kMatching, false, false,
                  "online greedy matching with one eviction per arrival"},
};

TestUsers ResolveTestUsers(const AlgorithmParams& params, double default_alpha) {
  if (params.r) return TestUsers::Count(*params.r);
  return TestUsers::Fraction(params.alpha.value_or(default_alpha));
}

constexpr double kSecretaryAlpha = 1.0 / std::numbers::e;
constexpr double kRepeatedAlpha = 0.22;

}  // namespace

std::span<const AlgorithmInfo> Algorithms() { return kAlgorithms; }

std::string AlgorithmNames() {
  std::string out;
  for (const auto& a : kAlgorithms) {
    if (!out.empty()) out += ", ";
    out += a.name;
  }
  return out;
}

const AlgorithmInfo& FindAlgorithm(std::string_view name) {
  for (const auto& a : kAlgorithms) {
    if (a.name == name) return a;
  }
  throw Error(ErrorCode::kConfig, "unknown algorithm '" + std::string(name) +
                                      "'; valid names: " + AlgorithmNames());
}

std::unique_ptr<OnlineAlgorithm> MakeAlgorithm(std::string_view name,
                                               const AlgorithmParams& params) {
  const AlgorithmInfo& info = FindAlgorithm(name);
  if (info.kind != AlgorithmKind::kAllocation) {
    throw Error(ErrorCode::kConfig,
                "'" + std::string(name) + "' is a matching algorithm, not an allocation");
  }
  if (name == "round-robin") return std::make_unique<RoundRobin>();
  if (name == "max-weight") return std::make_unique<MaxWeightAssoc>();
  if (name == "max-weight-balanced") {
    return std::make_unique<MaxWeightAssoc>(MaxWeightAssoc::TieBreak::kLeastLoaded);
  }
  if (name == "secretary") {
    return std::make_unique<SecretaryTwo>(ResolveTestUsers(params, kSecretaryAlpha));
  }
  if (name == "secretary-modified") {
    return std::make_unique<SecretaryModified>(ResolveTestUsers(params, kRepeatedAlpha));
  }
  if (name == "k-secretary") {
    return std::make_unique<KSecretary>(ResolveTestUsers(params, kRepeatedAlpha));
  }
  if (name == "hide-and-seek") {
    return std::make_unique<HideAndSeek>(params.p, params.hidden_bs);
  }
  if (name == "hide-and-seek-reassign") {
    return std::make_unique<HideAndSeekReassign>(params.hidden_bs);
  }
  if (name == "reassign-identical") return std::make_unique<ReassignIdentical>();
  return std::make_unique<LastUserReassign>();
}

Matching RunMatchingAlgorithm(std::string_view name,
                              const AlgorithmParams& params,
                              const WeightMatrix& w, uint64_t seed,
                              const std::optional<ArrivalOrder>& order) {
  const AlgorithmInfo& info = FindAlgorithm(name);
  if (info.kind != AlgorithmKind::kMatching) {
    throw Error(ErrorCode::kConfig,
                "'" + std::string(name) + "' is an allocation algorithm, not a matching");
  }
  if (name == "sample-and-price") return SampleAndPrice(w, params.p, seed, order).matching;
  return OnlineGreedyReassign(w, order).matching;
}

std::optional<double> ReportedParam(std::string_view name,
                                    const AlgorithmParams& params,
                                    size_t num_users) {
  if (name == "secretary") {
    return static_cast<double>(ResolveTestUsers(params, kSecretaryAlpha).Resolve(num_users));
  }
  if (name == "secretary-modified" || name == "k-secretary") {
    return static_cast<double>(ResolveTestUsers(params, kRepeatedAlpha).Resolve(num_users));
  }
  if (name == "hide-and-seek" || name == "sample-and-price") return params.p;
  return std::nullopt;
}

}  // namespace onbase
