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

#include <string>

#include "onbase/error.h"
#include "onbase/online.h"

namespace onbase {

void SampleAndPriceMatcher::Start(size_t num_users, size_t num_bs, double p,
                                  Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kConfig, "sampling probability must lie in [0, 1]");
  }
  StartWithSample(num_bs, rng.Binomial(num_users, p));
}

void SampleAndPriceMatcher::StartWithSample(size_t num_bs, size_t sample_size) {
  num_bs_ = num_bs;
  sample_size_ = sample_size;
  seen_ = 0;
  sample_.clear();
  prices_.assign(num_bs, 0.0);
  taken_.assign(num_bs, 0);
}

void SampleAndPriceMatcher::SetPrices() {
  const Matching m1 = GreedyMatching(WeightMatrix(sample_size_, num_bs_, sample_));
  for (const auto& e : m1.edges()) prices_[static_cast<size_t>(e.bs)] = e.weight;
}

std::optional<int> SampleAndPriceMatcher::Offer(std::span<const double> row) {
  const size_t pos = seen_++;
  if (pos < sample_size_) {
    sample_.insert(sample_.end(), row.begin(), row.end());
    if (pos + 1 == sample_size_) SetPrices();
    return std::nullopt;
  }
  int best = -1;
  for (size_t j = 0; j < num_bs_; ++j) {
    if (taken_[j] || row[j] < prices_[j]) continue;
    if (best < 0 || row[j] > row[static_cast<size_t>(best)]) best = static_cast<int>(j);
  }
  if (best >= 0) taken_[static_cast<size_t>(best)] = 1;
  return best >= 0 ? std::optional<int>(best) : std::nullopt;
}

void GreedyReassignMatcher::Start(size_t num_bs) {
  held_.assign(num_bs, 0.0);
  holder_.assign(num_bs, -1);
}

GreedyReassignMatcher::Outcome GreedyReassignMatcher::Offer(
    size_t position, std::span<const double> row) {
  int best = -1;
  for (size_t k = 0; k < held_.size(); ++k) {
    if (row[k] <= held_[k]) continue;
    if (best < 0 || row[k] > row[static_cast<size_t>(best)]) best = static_cast<int>(k);
  }
  Outcome out;
  if (best < 0) return out;
  const size_t b = static_cast<size_t>(best);
  out.bs = best;
  if (holder_[b] >= 0) out.evicted = static_cast<size_t>(holder_[b]);
  held_[b] = row[b];
  holder_[b] = static_cast<long>(position);
  return out;
}

SampleAndPriceResult SampleAndPrice(const WeightMatrix& w, double p,
                                    uint64_t seed,
                                    const std::optional<ArrivalOrder>& order) {
  const size_t n = w.num_users();
  Rng rng(seed);
  SampleAndPriceMatcher matcher;
  matcher.Start(n, w.num_bs(), p, rng);
  SampleAndPriceResult result;
  result.matching = Matching(n, w.num_bs());
  for (size_t pos = 0; pos < n; ++pos) {
    const size_t user = order ? (*order)[pos] : pos;
    if (auto bs = matcher.Offer(w.row(user))) {
      result.matching.Add(user, *bs, w(user, *bs));
    }
  }
  result.sample_size = matcher.sample_size();
  result.prices = matcher.prices();
  return result;
}

GreedyReassignResult OnlineGreedyReassign(const WeightMatrix& w,
                                          const std::optional<ArrivalOrder>& order) {
  const size_t n = w.num_users();
  const size_t m = w.num_bs();
  GreedyReassignMatcher matcher;
  matcher.Start(m);
  GreedyReassignResult result;
  result.matching = Matching(n, m);
  result.held_history.reserve(n * m);
  auto user_at = [&](size_t pos) { return order ? (*order)[pos] : pos; };
  for (size_t pos = 0; pos < n; ++pos) {
    const size_t user = user_at(pos);
    const auto out = matcher.Offer(pos, w.row(user));
    TraceEntry entry{pos, user, Allocation::kUnassigned, std::nullopt};
    if (out.bs) {
      if (out.evicted) {
        const size_t gone = user_at(*out.evicted);
        result.matching.RemoveUser(gone);
        entry.move = Move{gone, *out.bs, Move::kDeleted};
      }
      result.matching.Add(user, *out.bs, w(user, *out.bs));
      entry.bs = *out.bs;
    }
    result.trace.push_back(entry);
    result.held_history.insert(result.held_history.end(), matcher.held().begin(),
                               matcher.held().end());
  }
  return result;
}

namespace {

int PickHidden(const std::optional<int>& forced, size_t num_bs, Rng& rng) {
  if (num_bs < 2) {
    throw Error(ErrorCode::kConfig,
                "hiding a basestation needs at least two basestations");
  }
  if (forced) {
    if (*forced < 0 || static_cast<size_t>(*forced) >= num_bs) {
      throw Error(ErrorCode::kConfig, "hidden basestation index out of range");
    }
    return *forced;
  }
  return static_cast<int>(rng.UniformIndex(num_bs));
}

void ReduceRow(std::span<const double> row, int hidden, std::vector<double>& out) {
  out.clear();
  for (size_t j = 0; j < row.size(); ++j) {
    if (static_cast<int>(j) != hidden) out.push_back(row[j]);
  }
}

int Expand(int reduced_bs, int hidden) {
  return reduced_bs < hidden ? reduced_bs : reduced_bs + 1;
}

}  // namespace

void HideAndSeek::Start(size_t num_users, size_t num_bs, uint64_t seed) {
  Rng rng(seed);
  hidden_ = PickHidden(forced_hidden_, num_bs, rng);
  matcher_.Start(num_users, num_bs - 1, p_, rng);
}

Decision HideAndSeek::OnArrival(const ArrivalView& view) {
  ReduceRow(view.row(), hidden_, reduced_);
  if (auto bs = matcher_.Offer(reduced_)) return {Expand(*bs, hidden_), std::nullopt};
  return {hidden_, std::nullopt};
}

void HideAndSeekReassign::Start(size_t, size_t num_bs, uint64_t seed) {
  Rng rng(seed);
  hidden_ = PickHidden(forced_hidden_, num_bs, rng);
  matcher_.Start(num_bs - 1);
}

Decision HideAndSeekReassign::OnArrival(const ArrivalView& view) {
  ReduceRow(view.row(), hidden_, reduced_);
  const auto out = matcher_.Offer(view.position(), reduced_);
  if (!out.bs) return {hidden_, std::nullopt};
  Decision d{Expand(*out.bs, hidden_), std::nullopt};
  if (out.evicted) d.reassign = Decision::Reassign{*out.evicted, hidden_};
  return d;
}

double HideAndSeekReassign::matched_weight() const {
  double total = 0.0;
  for (size_t k = 0; k < matcher_.held().size(); ++k) {
    if (matcher_.holders()[k] >= 0) total += matcher_.held()[k];
  }
  return total;
}

}  // namespace onbase
