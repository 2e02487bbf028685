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

#ifndef ONBASE_ONLINE_H_
#define ONBASE_ONLINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string_view>
#include <vector>

#include "onbase/model.h"
#include "onbase/offline.h"

namespace onbase {

// Number of leading "test" arrivals, given either as an absolute count or as
// a fraction of the (publicly known) sequence length.
struct TestUsers {
  static TestUsers Count(size_t r) { return {r, std::nullopt}; }
  static TestUsers Fraction(double alpha) { return {0, alpha}; }

  size_t Resolve(size_t num_users) const;

  size_t count = 0;
  std::optional<double> fraction;
};

// Algorithms written for identical basestations read a user's weight from
// the first column of its row.
inline double IdenticalWeight(std::span<const double> row) { return row[0]; }

// User at arrival position i (1-based) goes to basestation 1 + (i mod m).
class RoundRobin : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "round-robin"; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

 private:
  size_t num_bs_ = 1;
};

// Each user joins the basestation with its largest rate.
class MaxWeightAssoc : public OnlineAlgorithm {
 public:
  enum class TieBreak {
    kLowestIndex,
    // Among tied maxima pick the least loaded basestation (then lowest
    // index). On identical basestations this is the usual "join the least
    // loaded cell" rule.
    kLeastLoaded,
  };

  explicit MaxWeightAssoc(TieBreak tie = TieBreak::kLowestIndex) : tie_(tie) {}

  std::string_view name() const override {
    return tie_ == TieBreak::kLowestIndex ? "max-weight" : "max-weight-balanced";
  }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

 private:
  TieBreak tie_;
  std::vector<size_t> load_;
};

// Single-stop secretary rule for two basestations. The first r arrivals go
// to basestation 1 and set the threshold T to their maximum; the first later
// arrival with weight >= T goes to basestation 2. If none qualified, the last
// arrival goes to basestation 2.
class SecretaryTwo : public OnlineAlgorithm {
 public:
  explicit SecretaryTwo(TestUsers r) : test_(r) {}

  std::string_view name() const override { return "secretary"; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  bool selected() const { return selected_; }

 private:
  TestUsers test_;
  size_t r_ = 0;
  size_t num_users_ = 0;
  double threshold_ = 0.0;
  bool selected_ = false;
};

// Repeated-selection variant: every post-sample arrival strictly above the
// running maximum goes to basestation 2. No fallback, so basestation 2 may
// stay empty.
class SecretaryModified : public OnlineAlgorithm {
 public:
  explicit SecretaryModified(TestUsers r) : test_(r) {}

  std::string_view name() const override { return "secretary-modified"; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  size_t num_selected() const { return selected_; }

 private:
  TestUsers test_;
  size_t r_ = 0;
  double threshold_ = 0.0;
  size_t selected_ = 0;
};

// k-secretary rule for m basestations. T is the (m-1)-th best weight seen so
// far; post-sample arrivals strictly above T are dealt round-robin to
// basestations 2..m, everyone else joins basestation 1.
class KSecretary : public OnlineAlgorithm {
 public:
  explicit KSecretary(TestUsers r) : test_(r) {}

  std::string_view name() const override { return "k-secretary"; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  size_t num_selected() const { return selected_; }

 private:
  double Threshold() const;
  void Observe(double w);

  TestUsers test_;
  size_t r_ = 0;
  size_t keep_ = 0;  // m - 1
  int next_bs_ = 1;
  size_t selected_ = 0;
  // Min-heap of the keep_ largest weights seen.
  std::priority_queue<double, std::vector<double>, std::greater<double>> top_;
};

// ---------------------------------------------------------------------------
// Online matchers. They see one row at a time and answer with a basestation
// index into the columns they were given.

// Sample-then-price online max-weight matching. The first k ~ Bin(n, p)
// arrivals are only observed; a greedy matching on them prices each column
// (0 if unmatched). Each later arrival takes its heaviest still-free column
// whose weight reaches the price.
class SampleAndPriceMatcher {
 public:
  void Start(size_t num_users, size_t num_bs, double p, Rng& rng);
  // Same, with the sample size fixed.
  void StartWithSample(size_t num_bs, size_t sample_size);
  std::optional<int> Offer(std::span<const double> row);

  size_t sample_size() const { return sample_size_; }
  const std::vector<double>& prices() const { return prices_; }

 private:
  void SetPrices();

  size_t num_bs_ = 0;
  size_t sample_size_ = 0;
  size_t seen_ = 0;
  std::vector<double> sample_;
  std::vector<double> prices_;
  std::vector<char> taken_;
};

// Greedy online matching with one eviction per arrival: the arrival takes
// the heaviest column whose weight strictly exceeds what that column holds
// (ties to the lowest column), evicting the previous holder.
class GreedyReassignMatcher {
 public:
  struct Outcome {
    std::optional<int> bs;
    std::optional<size_t> evicted;  // arrival position of the evicted holder
  };

  void Start(size_t num_bs);
  Outcome Offer(size_t position, std::span<const double> row);

  const std::vector<double>& held() const { return held_; }
  const std::vector<long>& holders() const { return holder_; }

 private:
  std::vector<double> held_;
  std::vector<long> holder_;
};

struct SampleAndPriceResult {
  Matching matching;  // indexed by original user
  size_t sample_size = 0;
  std::vector<double> prices;
};

SampleAndPriceResult SampleAndPrice(const WeightMatrix& w, double p,
                                    uint64_t seed,
                                    const std::optional<ArrivalOrder>& order = std::nullopt);

struct GreedyReassignResult {
  Matching matching;  // indexed by original user
  DecisionTrace trace;  // bs = kUnassigned when the arrival is not matched
  // held weight per basestation after each arrival (row-major n x m)
  std::vector<double> held_history;
};

GreedyReassignResult OnlineGreedyReassign(
    const WeightMatrix& w, const std::optional<ArrivalOrder>& order = std::nullopt);

// ---------------------------------------------------------------------------
// Randomized allocation on top of an online matcher: a uniformly chosen
// basestation j0 is hidden, the matcher runs on the others, and every user it
// leaves unmatched goes to j0.

class HideAndSeek : public OnlineAlgorithm {
 public:
  explicit HideAndSeek(double p = 0.5, std::optional<int> hidden = std::nullopt)
      : p_(p), forced_hidden_(hidden) {}

  std::string_view name() const override { return "hide-and-seek"; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  int hidden_bs() const { return hidden_; }
  const SampleAndPriceMatcher& matcher() const { return matcher_; }

 private:
  double p_;
  std::optional<int> forced_hidden_;
  int hidden_ = 0;
  std::vector<double> reduced_;
  SampleAndPriceMatcher matcher_;
};

// Same scheme with the evicting greedy matcher; evicted users are moved to
// the hidden basestation.
class HideAndSeekReassign : public OnlineAlgorithm {
 public:
  explicit HideAndSeekReassign(std::optional<int> hidden = std::nullopt)
      : forced_hidden_(hidden) {}

  std::string_view name() const override { return "hide-and-seek-reassign"; }
  int max_reassignments() const override { return 1; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  int hidden_bs() const { return hidden_; }
  // Weight of the matching currently held on the visible basestations.
  double matched_weight() const;

 private:
  std::optional<int> forced_hidden_;
  int hidden_ = 0;
  std::vector<double> reduced_;
  GreedyReassignMatcher matcher_;
};

// ---------------------------------------------------------------------------
// Reassigning policies for identical basestations.

// Keeps the m-1 heaviest users seen so far alone on basestations 1..m-1 and
// everyone else on basestation m. A newcomer that beats the weakest solo user
// takes its seat and the displaced user moves to basestation m.
class ReassignIdentical : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "reassign-identical"; }
  int max_reassignments() const override { return 1; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

  // Set when a row with unequal entries was seen; the column-0 value is used.
  bool saw_nonidentical_row() const { return nonidentical_; }

 private:
  size_t num_bs_ = 1;
  std::vector<long> seat_holder_;
  std::vector<double> seat_weight_;
  bool nonidentical_ = false;
};

// Utility-greedy placement where only the previous arrival may be moved:
// each arrival picks the (placement, optional move of arrival i-1) pair that
// maximizes the current utility, preferring no move on ties.
class LastUserReassign : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "last-user-reassign"; }
  int max_reassignments() const override { return 1; }
  void Start(size_t num_users, size_t num_bs, uint64_t seed) override;
  Decision OnArrival(const ArrivalView& view) override;

 private:
  std::vector<double> sums_;
  std::vector<size_t> deg_;
  int prev_bs_ = -1;
};

}  // namespace onbase

#endif  // ONBASE_ONLINE_H_
