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

#include <algorithm>

#include "onbase/online.h"

namespace onbase {

void ReassignIdentical::Start(size_t, size_t num_bs, uint64_t) {
  num_bs_ = num_bs;
  seat_holder_.assign(num_bs - 1, -1);
  seat_weight_.assign(num_bs - 1, 0.0);
  nonidentical_ = false;
}

Decision ReassignIdentical::OnArrival(const ArrivalView& view) {
  auto row = view.row();
  if (std::any_of(row.begin(), row.end(), [&](double v) { return v != row[0]; })) {
    nonidentical_ = true;
  }
  const double w = IdenticalWeight(row);
  const int shared = static_cast<int>(num_bs_) - 1;
  const long pos = static_cast<long>(view.position());
  if (seat_holder_.empty()) return {shared, std::nullopt};

  int weakest = 0;
  for (size_t k = 0; k < seat_holder_.size(); ++k) {
    if (seat_holder_[k] < 0) {
      seat_holder_[k] = pos;
      seat_weight_[k] = w;
      return {static_cast<int>(k), std::nullopt};
    }
    if (seat_weight_[k] < seat_weight_[static_cast<size_t>(weakest)]) {
      weakest = static_cast<int>(k);
    }
  }
  const size_t s = static_cast<size_t>(weakest);
  if (w <= seat_weight_[s]) return {shared, std::nullopt};
  Decision d{weakest, Decision::Reassign{static_cast<size_t>(seat_holder_[s]), shared}};
  seat_holder_[s] = pos;
  seat_weight_[s] = w;
  return d;
}

void LastUserReassign::Start(size_t, size_t num_bs, uint64_t) {
  sums_.assign(num_bs, 0.0);
  deg_.assign(num_bs, 0);
  prev_bs_ = -1;
}

Decision LastUserReassign::OnArrival(const ArrivalView& view) {
  const size_t m = sums_.size();
  auto row = view.row();
  auto contrib = [](double s, size_t d) { return d > 0 ? s / static_cast<double>(d) : 0.0; };

  // Gain of placing the newcomer on j, optionally after moving the previous
  // arrival from f to t. Only the touched basestations change.
  std::span<const double> prev_row;
  if (prev_bs_ >= 0) prev_row = view.Row(view.position() - 1);
  auto gain = [&](size_t j, int t) {
    size_t touched[3] = {j, j, j};
    size_t count = 1;
    if (t >= 0) {
      touched[count++] = static_cast<size_t>(prev_bs_);
      touched[count++] = static_cast<size_t>(t);
    }
    double before = 0.0, after = 0.0;
    for (size_t a = 0; a < count; ++a) {
      const size_t b = touched[a];
      if (std::find(touched, touched + a, b) != touched + a) continue;
      double s = sums_[b];
      size_t d = deg_[b];
      before += contrib(s, d);
      if (b == j) s += row[b], ++d;
      if (t >= 0 && b == static_cast<size_t>(prev_bs_)) s -= prev_row[b], --d;
      if (t >= 0 && b == static_cast<size_t>(t)) s += prev_row[b], ++d;
      after += contrib(s, d);
    }
    return after - before;
  };

  size_t best_j = 0;
  int best_t = -1;
  double best = gain(0, -1);
  for (size_t j = 1; j < m; ++j) {
    const double g = gain(j, -1);
    if (g > best) best = g, best_j = j;
  }
  if (prev_bs_ >= 0) {
    for (size_t j = 0; j < m; ++j) {
      for (size_t t = 0; t < m; ++t) {
        if (static_cast<int>(t) == prev_bs_) continue;
        const double g = gain(j, static_cast<int>(t));
        if (g > best) best = g, best_j = j, best_t = static_cast<int>(t);
      }
    }
  }

  Decision d{static_cast<int>(best_j), std::nullopt};
  if (best_t >= 0) {
    const size_t f = static_cast<size_t>(prev_bs_);
    const size_t t = static_cast<size_t>(best_t);
    sums_[f] -= prev_row[f];
    --deg_[f];
    sums_[t] += prev_row[t];
    ++deg_[t];
    d.reassign = Decision::Reassign{view.position() - 1, best_t};
  }
  sums_[best_j] += row[best_j];
  ++deg_[best_j];
  prev_bs_ = static_cast<int>(best_j);
  return d;
}

}  // namespace onbase
