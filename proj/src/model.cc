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

#include "onbase/model.h"

#include <cmath>
#include <string>

#include "onbase/error.h"

namespace onbase {

namespace {

void CheckEntry(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight entries must be finite and nonnegative, got " +
                    std::to_string(v));
  }
}

}  // namespace

WeightMatrix::WeightMatrix(size_t num_users, size_t num_bs)
    : WeightMatrix(num_users, num_bs,
                   std::vector<double>(num_users * num_bs, 0.0)) {}

WeightMatrix::WeightMatrix(size_t num_users, size_t num_bs,
                           std::vector<double> values)
    : num_users_(num_users), num_bs_(num_bs), values_(std::move(values)) {
  if (num_users == 0 || num_bs == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight matrix needs at least one user and one basestation");
  }
  if (values_.size() != num_users * num_bs) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight matrix has " + std::to_string(values_.size()) +
                    " entries, expected " +
                    std::to_string(num_users * num_bs));
  }
  for (double v : values_) CheckEntry(v);
}

WeightMatrix WeightMatrix::Identical(std::span<const double> weights,
                                     size_t num_bs) {
  std::vector<double> values;
  values.reserve(weights.size() * num_bs);
  for (double w : weights) values.insert(values.end(), num_bs, w);
  return WeightMatrix(weights.size(), num_bs, std::move(values));
}

void WeightMatrix::Set(size_t user, int bs, double value) {
  CheckEntry(value);
  values_[user * num_bs_ + static_cast<size_t>(bs)] = value;
}

std::vector<double> WeightMatrix::Column(int bs) const {
  std::vector<double> col(num_users_);
  for (size_t i = 0; i < num_users_; ++i) col[i] = (*this)(i, bs);
  return col;
}

bool WeightMatrix::HasIdenticalBasestations() const {
  for (size_t i = 0; i < num_users_; ++i) {
    auto r = row(i);
    for (double v : r) {
      if (v != r[0]) return false;
    }
  }
  return true;
}

WeightMatrix WeightMatrix::Scaled(double factor) const {
  std::vector<double> values = values_;
  for (double& v : values) v *= factor;
  return WeightMatrix(num_users_, num_bs_, std::move(values));
}

WeightMatrix WeightMatrix::WithoutColumn(int bs) const {
  if (num_bs_ < 2) {
    throw Error(ErrorCode::kUnsupportedShape,
                "cannot remove the only basestation");
  }
  std::vector<double> values;
  values.reserve(num_users_ * (num_bs_ - 1));
  for (size_t i = 0; i < num_users_; ++i) {
    for (size_t j = 0; j < num_bs_; ++j) {
      if (static_cast<int>(j) != bs) values.push_back((*this)(i, j));
    }
  }
  return WeightMatrix(num_users_, num_bs_ - 1, std::move(values));
}

ArrivalOrder::ArrivalOrder(std::vector<size_t> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "arrival order is not a permutation");
    }
    seen[p] = true;
  }
}

ArrivalOrder ArrivalOrder::Identity(size_t n) {
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  return ArrivalOrder(std::move(perm));
}

ArrivalOrder ArrivalOrder::Random(size_t n, Rng& rng) {
  return ArrivalOrder(RandomPermutation(n, rng));
}

Allocation::Allocation(size_t num_users, size_t num_bs)
    : assign_(num_users, kUnassigned), degrees_(num_bs, 0) {}

Allocation Allocation::FromVector(std::span<const int> assign,
                                  size_t num_bs) {
  Allocation alloc(assign.size(), num_bs);
  for (size_t i = 0; i < assign.size(); ++i) {
    if (assign[i] != kUnassigned) alloc.Assign(i, assign[i]);
  }
  return alloc;
}

void Allocation::Assign(size_t user, int bs) {
  if (user >= assign_.size()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "user index " + std::to_string(user) + " out of range");
  }
  if (bs < 0 || static_cast<size_t>(bs) >= degrees_.size()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "basestation index " + std::to_string(bs) + " out of range");
  }
  if (assign_[user] == kUnassigned) {
    ++num_assigned_;
  } else {
    --degrees_[static_cast<size_t>(assign_[user])];
  }
  assign_[user] = bs;
  ++degrees_[static_cast<size_t>(bs)];
}

void Allocation::Unassign(size_t user) {
  if (user >= assign_.size()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "user index " + std::to_string(user) + " out of range");
  }
  if (assign_[user] == kUnassigned) return;
  --degrees_[static_cast<size_t>(assign_[user])];
  assign_[user] = kUnassigned;
  --num_assigned_;
}

std::vector<size_t> Allocation::UsersOn(int bs) const {
  std::vector<size_t> users;
  for (size_t i = 0; i < assign_.size(); ++i) {
    if (assign_[i] == bs) users.push_back(i);
  }
  return users;
}

double TsUtility(const Allocation& alloc, const WeightMatrix& w) {
  if (alloc.num_users() != w.num_users() || alloc.num_bs() != w.num_bs()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "allocation shape does not match the weight matrix");
  }
  std::vector<double> sums(w.num_bs(), 0.0);
  for (size_t i = 0; i < alloc.num_users(); ++i) {
    const int bs = alloc.bs_of(i);
    if (bs != Allocation::kUnassigned) sums[static_cast<size_t>(bs)] += w(i, bs);
  }
  double total = 0.0;
  for (size_t j = 0; j < sums.size(); ++j) {
    const size_t d = alloc.degree(static_cast<int>(j));
    if (d > 0) total += sums[j] / static_cast<double>(d);
  }
  return total;
}

WeightMatrix PermuteRows(const WeightMatrix& w, const ArrivalOrder& order) {
  if (order.size() != w.num_users()) {
    throw Error(ErrorCode::kInvalidArgument,
                "arrival order length does not match user count");
  }
  std::vector<double> values;
  values.reserve(w.values().size());
  for (size_t i = 0; i < order.size(); ++i) {
    auto r = w.row(order[i]);
    values.insert(values.end(), r.begin(), r.end());
  }
  return WeightMatrix(w.num_users(), w.num_bs(), std::move(values));
}

std::span<const double> ArrivalView::Row(size_t position) const {
  if (position > position_) {
    throw Error(ErrorCode::kContractViolation,
                "algorithm asked for a row that has not arrived yet");
  }
  return revealed_.subspan(position * num_bs_, num_bs_);
}

int ArrivalView::PlacementOf(size_t position) const {
  if (position >= position_) {
    throw Error(ErrorCode::kContractViolation,
                "placement query for a position that is not yet placed");
  }
  return placement_[position];
}

namespace {

// Per-basestation running sums used for the incremental utility.
class UtilityTracker {
 public:
  explicit UtilityTracker(size_t num_bs) : sums_(num_bs, 0.0), deg_(num_bs, 0) {}

  void Add(int bs, double w) {
    sums_[static_cast<size_t>(bs)] += w;
    ++deg_[static_cast<size_t>(bs)];
  }
  void Remove(int bs, double w) {
    sums_[static_cast<size_t>(bs)] -= w;
    --deg_[static_cast<size_t>(bs)];
  }
  double Value() const {
    double total = 0.0;
    for (size_t j = 0; j < sums_.size(); ++j) {
      if (deg_[j] > 0) total += sums_[j] / static_cast<double>(deg_[j]);
    }
    return total;
  }

 private:
  std::vector<double> sums_;
  std::vector<size_t> deg_;
};

}  // namespace

OnlineResult RunOnline(OnlineAlgorithm& alg, const WeightMatrix& w,
                       uint64_t seed, const std::optional<ArrivalOrder>& order) {
  const size_t n = w.num_users();
  const size_t m = w.num_bs();
  if (order && order->size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "arrival order length does not match user count");
  }
  auto user_at = [&](size_t pos) { return order ? (*order)[pos] : pos; };

  std::vector<double> revealed;
  revealed.reserve(n * m);
  std::vector<int> placement;
  placement.reserve(n);
  UtilityTracker tracker(m);

  OnlineResult result;
  result.allocation = Allocation(n, m);
  result.trace.reserve(n);

  alg.Start(n, m, seed);
  for (size_t pos = 0; pos < n; ++pos) {
    auto r = w.row(user_at(pos));
    revealed.insert(revealed.end(), r.begin(), r.end());
    const ArrivalView view(pos, m, revealed, placement);
    const Decision d = alg.OnArrival(view);

    if (d.bs < 0 || static_cast<size_t>(d.bs) >= m) {
      throw Error(ErrorCode::kContractViolation,
                  std::string(alg.name()) + " chose basestation " +
                      std::to_string(d.bs) + " at arrival " +
                      std::to_string(pos));
    }
    TraceEntry entry{pos, user_at(pos), d.bs, std::nullopt};
    if (d.reassign) {
      if (alg.max_reassignments() < 1) {
        throw Error(ErrorCode::kContractViolation,
                    std::string(alg.name()) +
                        " is not allowed to reassign earlier users");
      }
      const size_t from_pos = d.reassign->position;
      const int to = d.reassign->to;
      if (from_pos >= pos || to < 0 || static_cast<size_t>(to) >= m) {
        throw Error(ErrorCode::kContractViolation,
                    std::string(alg.name()) + " issued an invalid reassignment");
      }
      const size_t moved = user_at(from_pos);
      const int from = placement[from_pos];
      if (from != to) {
        tracker.Remove(from, w(moved, from));
        tracker.Add(to, w(moved, to));
        placement[from_pos] = to;
        result.allocation.Assign(moved, to);
      }
      entry.move = Move{moved, from, to};
    }
    placement.push_back(d.bs);
    tracker.Add(d.bs, w(user_at(pos), d.bs));
    result.allocation.Assign(user_at(pos), d.bs);
    result.trace.push_back(entry);
  }
  result.utility = tracker.Value();
  return result;
}

}  // namespace onbase
