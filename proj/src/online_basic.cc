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

#include <cmath>
#include <limits>
#include <string>

#include "onbase/error.h"
#include "onbase/online.h"

namespace onbase {

namespace {

constexpr double kNoThreshold = -std::numeric_limits<double>::infinity();

}  // namespace

size_t TestUsers::Resolve(size_t num_users) const {
  if (!fraction) return count;
  if (!(*fraction >= 0.0 && *fraction <= 1.0)) {
    throw Error(ErrorCode::kConfig, "test-user fraction must lie in [0, 1]");
  }
  return static_cast<size_t>(std::llround(*fraction * static_cast<double>(num_users)));
}

void RoundRobin::Start(size_t, size_t num_bs, uint64_t) { num_bs_ = num_bs; }

Decision RoundRobin::OnArrival(const ArrivalView& view) {
  return {static_cast<int>((view.position() + 1) % num_bs_), std::nullopt};
}

void MaxWeightAssoc::Start(size_t, size_t num_bs, uint64_t) {
  load_.assign(num_bs, 0);
}

Decision MaxWeightAssoc::OnArrival(const ArrivalView& view) {
  auto row = view.row();
  int best = 0;
  for (size_t j = 1; j < row.size(); ++j) {
    const size_t b = static_cast<size_t>(best);
    if (row[j] > row[b] ||
        (tie_ == TieBreak::kLeastLoaded && row[j] == row[b] && load_[j] < load_[b])) {
      best = static_cast<int>(j);
    }
  }
  ++load_[static_cast<size_t>(best)];
  return {best, std::nullopt};
}

void SecretaryTwo::Start(size_t num_users, size_t num_bs, uint64_t) {
  if (num_bs < 2) {
    throw Error(ErrorCode::kConfig, "secretary needs at least two basestations");
  }
  r_ = test_.Resolve(num_users);
  if (r_ >= num_users) {
    throw Error(ErrorCode::kConfig, "secretary needs r < n (r=" +
                                        std::to_string(r_) +
                                        ", n=" + std::to_string(num_users) + ")");
  }
  num_users_ = num_users;
  threshold_ = kNoThreshold;
  selected_ = false;
}

Decision SecretaryTwo::OnArrival(const ArrivalView& view) {
  const double w = IdenticalWeight(view.row());
  const size_t pos = view.position();
  if (pos < r_) {
    threshold_ = std::max(threshold_, w);
    return {0, std::nullopt};
  }
  if (!selected_ && (w >= threshold_ || pos + 1 == num_users_)) {
    selected_ = true;
    return {1, std::nullopt};
  }
  return {0, std::nullopt};
}

void SecretaryModified::Start(size_t num_users, size_t num_bs, uint64_t) {
  if (num_bs < 2) {
    throw Error(ErrorCode::kConfig,
                "secretary-modified needs at least two basestations");
  }
  r_ = test_.Resolve(num_users);
  if (r_ >= num_users) {
    throw Error(ErrorCode::kConfig, "secretary-modified needs r < n (r=" +
                                        std::to_string(r_) +
                                        ", n=" + std::to_string(num_users) + ")");
  }
  threshold_ = kNoThreshold;
  selected_ = 0;
}

Decision SecretaryModified::OnArrival(const ArrivalView& view) {
  const double w = IdenticalWeight(view.row());
  if (view.position() < r_) {
    threshold_ = std::max(threshold_, w);
    return {0, std::nullopt};
  }
  if (w > threshold_) {
    threshold_ = w;
    ++selected_;
    return {1, std::nullopt};
  }
  return {0, std::nullopt};
}

void KSecretary::Start(size_t num_users, size_t num_bs, uint64_t) {
  r_ = test_.Resolve(num_users);
  keep_ = num_bs - 1;
  if (r_ < keep_) {
    throw Error(ErrorCode::kConfig, "k-secretary needs r >= m-1 (r=" +
                                        std::to_string(r_) +
                                        ", m=" + std::to_string(num_bs) + ")");
  }
  if (r_ > num_users) {
    throw Error(ErrorCode::kConfig, "k-secretary needs r <= n");
  }
  next_bs_ = 1;
  selected_ = 0;
  top_ = {};
}

double KSecretary::Threshold() const {
  if (keep_ == 0 || top_.size() < keep_) return kNoThreshold;
  return top_.top();
}

void KSecretary::Observe(double w) {
  if (keep_ == 0) return;
  if (top_.size() < keep_) {
    top_.push(w);
  } else if (w > top_.top()) {
    top_.pop();
    top_.push(w);
  }
}

Decision KSecretary::OnArrival(const ArrivalView& view) {
  const double w = IdenticalWeight(view.row());
  if (keep_ == 0) return {0, std::nullopt};
  const bool select = view.position() >= r_ && w > Threshold();
  Observe(w);
  if (!select) return {0, std::nullopt};
  const int bs = next_bs_;
  next_bs_ = next_bs_ + 1 > static_cast<int>(keep_) ? 1 : next_bs_ + 1;
  ++selected_;
  return {bs, std::nullopt};
}

}  // namespace onbase
