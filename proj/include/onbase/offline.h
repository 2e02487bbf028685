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

#ifndef ONBASE_OFFLINE_H_
#define ONBASE_OFFLINE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "onbase/model.h"

namespace onbase {

struct OfflineSolution {
  double value = 0.0;
  Allocation allocation;
};

// Closed-form optimum for identical basestations: the m-1 heaviest users sit
// alone and everyone else shares the last basestation. Requires m < n.
OfflineSolution OptimalIdenticalOffline(std::span<const double> weights,
                                        size_t num_bs);

// Exhaustive search over all m^n assignments. Ties resolve to the
// lexicographically smallest assignment vector.
inline constexpr double kBruteForceLimit = 1e7;
OfflineSolution BruteForceOptimal(const WeightMatrix& w);

struct MatchedEdge {
  size_t user;
  int bs;
  double weight;
  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

// A set of user-basestation pairs, no endpoint repeated.
class Matching {
 public:
  Matching() = default;
  Matching(size_t num_users, size_t num_bs);

  // Throws if either endpoint is already matched.
  void Add(size_t user, int bs, double weight);
  void RemoveUser(size_t user);

  bool user_matched(size_t user) const { return bs_of_[user] >= 0; }
  bool bs_matched(int bs) const { return user_of_[static_cast<size_t>(bs)] >= 0; }
  int bs_of(size_t user) const { return bs_of_[user]; }
  long user_of(int bs) const { return user_of_[static_cast<size_t>(bs)]; }

  size_t size() const;
  double weight() const;
  std::vector<MatchedEdge> edges() const;
  size_t num_users() const { return bs_of_.size(); }
  size_t num_bs() const { return user_of_.size(); }

 private:
  std::vector<int> bs_of_;
  std::vector<long> user_of_;
  std::vector<double> edge_weight_;  // indexed by basestation
};

// Exact maximum weight matching of the complete bipartite graph (Hungarian
// method on the smaller side). Zero-weight edges are dropped from the result.
Matching MaxWeightMatching(const WeightMatrix& w);

// Edges sorted by decreasing weight, ties by (user, basestation); each edge is
// kept if both endpoints are free.
Matching GreedyMatching(const WeightMatrix& w);

}  // namespace onbase

#endif  // ONBASE_OFFLINE_H_
