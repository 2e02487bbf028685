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

#ifndef ONBASE_MODEL_H_
#define ONBASE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "onbase/random.h"

namespace onbase {

// Rates of n users (rows) to m basestations (columns). Entries are finite and
// nonnegative. Stored row-major.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(size_t num_users, size_t num_bs);
  WeightMatrix(size_t num_users, size_t num_bs, std::vector<double> values);

  // Every user has the same rate to all basestations.
  static WeightMatrix Identical(std::span<const double> weights, size_t num_bs);

  size_t num_users() const { return num_users_; }
  size_t num_bs() const { return num_bs_; }

  double operator()(size_t user, int bs) const {
    return values_[user * num_bs_ + static_cast<size_t>(bs)];
  }
  void Set(size_t user, int bs, double value);

  std::span<const double> row(size_t user) const {
    return {values_.data() + user * num_bs_, num_bs_};
  }
  std::vector<double> Column(int bs) const;
  const std::vector<double>& values() const { return values_; }

  bool HasIdenticalBasestations() const;
  WeightMatrix Scaled(double factor) const;
  // Matrix with column `bs` removed.
  WeightMatrix WithoutColumn(int bs) const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  size_t num_users_ = 0;
  size_t num_bs_ = 0;
  std::vector<double> values_;
};

// A permutation of user rows; position i of the arrival sequence reveals user
// perm()[i].
class ArrivalOrder {
 public:
  explicit ArrivalOrder(std::vector<size_t> perm);

  static ArrivalOrder Identity(size_t n);
  static ArrivalOrder Random(size_t n, Rng& rng);

  size_t size() const { return perm_.size(); }
  size_t operator[](size_t position) const { return perm_[position]; }
  const std::vector<size_t>& perm() const { return perm_; }

 private:
  std::vector<size_t> perm_;
};

// Map user -> basestation with degree bookkeeping. Users may be unassigned
// while an online run is in progress.
class Allocation {
 public:
  static constexpr int kUnassigned = -1;

  Allocation() = default;
  Allocation(size_t num_users, size_t num_bs);
  // 0-based basestation per user; kUnassigned allowed.
  static Allocation FromVector(std::span<const int> assign, size_t num_bs);

  void Assign(size_t user, int bs);
  void Unassign(size_t user);

  int bs_of(size_t user) const { return assign_[user]; }
  size_t degree(int bs) const { return degrees_[static_cast<size_t>(bs)]; }
  size_t num_users() const { return assign_.size(); }
  size_t num_bs() const { return degrees_.size(); }
  size_t num_assigned() const { return num_assigned_; }
  bool complete() const { return num_assigned_ == assign_.size(); }

  const std::vector<int>& assignment() const { return assign_; }
  const std::vector<size_t>& degrees() const { return degrees_; }
  std::vector<size_t> UsersOn(int bs) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<int> assign_;
  std::vector<size_t> degrees_;
  size_t num_assigned_ = 0;
};

// Sum over basestations of the mean rate of the users sharing it. An empty
// basestation contributes 0.
double TsUtility(const Allocation& alloc, const WeightMatrix& w);

// Row i of the result is row order[i] of `w`.
WeightMatrix PermuteRows(const WeightMatrix& w, const ArrivalOrder& order);

// ---------------------------------------------------------------------------
// Online execution contract.

struct Move {
  static constexpr int kDeleted = -1;
  size_t user = 0;
  int from = Allocation::kUnassigned;
  int to = kDeleted;
};

struct TraceEntry {
  size_t position = 0;
  size_t user = 0;
  int bs = Allocation::kUnassigned;
  std::optional<Move> move;
};

using DecisionTrace = std::vector<TraceEntry>;

// What an algorithm answers at one arrival. `move` refers to an earlier
// arrival position, never to a user id.
struct Decision {
  int bs = 0;
  struct Reassign {
    size_t position;
    int to;
  };
  std::optional<Reassign> reassign;
};

// Read-only view handed to an algorithm at arrival `position`. Only rows of
// positions 0..position are reachable.
class ArrivalView {
 public:
  ArrivalView(size_t position, size_t num_bs, std::span<const double> revealed,
              const std::vector<int>& placement)
      : position_(position),
        num_bs_(num_bs),
        revealed_(revealed),
        placement_(placement) {}

  size_t position() const { return position_; }
  size_t num_bs() const { return num_bs_; }
  std::span<const double> row() const { return Row(position_); }
  std::span<const double> Row(size_t position) const;
  // Basestation currently holding an earlier arrival.
  int PlacementOf(size_t position) const;

 private:
  size_t position_;
  size_t num_bs_;
  std::span<const double> revealed_;
  const std::vector<int>& placement_;
};

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual std::string_view name() const = 0;
  // How many earlier arrivals may be moved per arrival (0 or 1).
  virtual int max_reassignments() const { return 0; }
  // The sequence length is known up front; row contents are not.
  virtual void Start(size_t num_users, size_t num_bs, uint64_t seed) = 0;
  virtual Decision OnArrival(const ArrivalView& view) = 0;
};

struct OnlineResult {
  Allocation allocation;
  DecisionTrace trace;
  // Utility maintained incrementally during the run.
  double utility = 0.0;
};

// Runs `alg` over the rows of `w` revealed in `order` (identity if absent).
// The allocation is indexed by original user id.
OnlineResult RunOnline(OnlineAlgorithm& alg, const WeightMatrix& w,
                       uint64_t seed,
                       const std::optional<ArrivalOrder>& order = std::nullopt);

}  // namespace onbase

#endif  // ONBASE_MODEL_H_
