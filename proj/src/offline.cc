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

#include "onbase/offline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "onbase/error.h"

namespace onbase {

OfflineSolution OptimalIdenticalOffline(std::span<const double> weights,
                                        size_t num_bs) {
  const size_t n = weights.size();
  if (num_bs == 0 || num_bs >= n) {
    throw Error(ErrorCode::kUnsupportedShape,
                "closed-form optimum needs 1 <= m < n (m=" +
                    std::to_string(num_bs) + ", n=" + std::to_string(n) + ")");
  }
  for (double v : weights) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "weights must be nonnegative");
    }
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return weights[a] > weights[b];
  });

  OfflineSolution sol;
  sol.allocation = Allocation(n, num_bs);
  const int shared = static_cast<int>(num_bs) - 1;
  for (size_t k = 0; k < n; ++k) {
    sol.allocation.Assign(order[k], k < num_bs - 1 ? static_cast<int>(k) : shared);
  }
  sol.value = TsUtility(sol.allocation, WeightMatrix::Identical(weights, num_bs));
  return sol;
}

OfflineSolution BruteForceOptimal(const WeightMatrix& w) {
  const size_t n = w.num_users();
  const size_t m = w.num_bs();
  if (std::pow(static_cast<double>(m), static_cast<double>(n)) >
      kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge,
                "brute force over " + std::to_string(m) + "^" +
                    std::to_string(n) + " assignments exceeds the guard");
  }
  std::vector<int> assign(n, 0);
  std::vector<int> best = assign;
  double best_value = -1.0;
  std::vector<double> sums(m);
  std::vector<size_t> deg(m);
  while (true) {
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(deg.begin(), deg.end(), size_t{0});
    for (size_t i = 0; i < n; ++i) {
      sums[static_cast<size_t>(assign[i])] += w(i, assign[i]);
      ++deg[static_cast<size_t>(assign[i])];
    }
    double value = 0.0;
    for (size_t j = 0; j < m; ++j) {
      if (deg[j] > 0) value += sums[j] / static_cast<double>(deg[j]);
    }
    if (value > best_value) {
      best_value = value;
      best = assign;
    }
    // Odometer with the last user as the fastest digit keeps lexicographic
    // order, so strict improvement retains the smallest maximizer.
    size_t k = n;
    while (k > 0) {
      --k;
      if (++assign[k] < static_cast<int>(m)) break;
      assign[k] = 0;
      if (k == 0) {
        k = n + 1;
        break;
      }
    }
    if (k == n + 1) break;
  }
  OfflineSolution sol;
  sol.allocation = Allocation::FromVector(best, m);
  sol.value = TsUtility(sol.allocation, w);
  return sol;
}

Matching::Matching(size_t num_users, size_t num_bs)
    : bs_of_(num_users, -1), user_of_(num_bs, -1), edge_weight_(num_bs, 0.0) {}

void Matching::Add(size_t user, int bs, double weight) {
  if (user >= bs_of_.size() || bs < 0 ||
      static_cast<size_t>(bs) >= user_of_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "matching edge out of range");
  }
  if (bs_of_[user] >= 0 || user_of_[static_cast<size_t>(bs)] >= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge (" + std::to_string(user) + "," + std::to_string(bs) +
                    ") reuses a matched endpoint");
  }
  bs_of_[user] = bs;
  user_of_[static_cast<size_t>(bs)] = static_cast<long>(user);
  edge_weight_[static_cast<size_t>(bs)] = weight;
}

void Matching::RemoveUser(size_t user) {
  const int bs = bs_of_[user];
  if (bs < 0) return;
  bs_of_[user] = -1;
  user_of_[static_cast<size_t>(bs)] = -1;
  edge_weight_[static_cast<size_t>(bs)] = 0.0;
}

size_t Matching::size() const {
  return static_cast<size_t>(
      std::count_if(user_of_.begin(), user_of_.end(), [](long u) { return u >= 0; }));
}

double Matching::weight() const {
  double total = 0.0;
  for (size_t j = 0; j < user_of_.size(); ++j) {
    if (user_of_[j] >= 0) total += edge_weight_[j];
  }
  return total;
}

std::vector<MatchedEdge> Matching::edges() const {
  std::vector<MatchedEdge> out;
  for (size_t i = 0; i < bs_of_.size(); ++i) {
    if (bs_of_[i] >= 0) {
      out.push_back({i, bs_of_[i], edge_weight_[static_cast<size_t>(bs_of_[i])]});
    }
  }
  return out;
}

namespace {

// Minimum-cost assignment of every row to a distinct column, rows <= cols.
// Returns col_of_row. O(rows^2 * cols).
std::vector<size_t> Hungarian(size_t rows, size_t cols,
                              const std::vector<double>& cost) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0);
  std::vector<size_t> p(cols + 1, 0), way(cols + 1, 0);
  for (size_t i = 1; i <= rows; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const size_t i0 = p[j0];
      double delta = kInf;
      size_t j1 = 0;
      for (size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<size_t> col_of_row(rows, 0);
  for (size_t j = 1; j <= cols; ++j) {
    if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
  }
  return col_of_row;
}

}  // namespace

Matching MaxWeightMatching(const WeightMatrix& w) {
  const size_t n = w.num_users();
  const size_t m = w.num_bs();
  Matching result(n, m);
  // With nonnegative weights on a complete bipartite graph, a maximum weight
  // matching saturates the smaller side.
  const bool bs_rows = m <= n;
  const size_t rows = bs_rows ? m : n;
  const size_t cols = bs_rows ? n : m;
  std::vector<double> cost(rows * cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      cost[r * cols + c] = bs_rows ? -w(c, static_cast<int>(r))
                                   : -w(r, static_cast<int>(c));
    }
  }
  const auto col_of_row = Hungarian(rows, cols, cost);
  for (size_t r = 0; r < rows; ++r) {
    const size_t user = bs_rows ? col_of_row[r] : r;
    const int bs = static_cast<int>(bs_rows ? r : col_of_row[r]);
    const double weight = w(user, bs);
    if (weight > 0.0) result.Add(user, bs, weight);
  }
  return result;
}

Matching GreedyMatching(const WeightMatrix& w) {
  const size_t n = w.num_users();
  const size_t m = w.num_bs();
  std::vector<std::tuple<double, size_t, int>> edges;
  edges.reserve(n * m);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      edges.emplace_back(w(i, static_cast<int>(j)), i, static_cast<int>(j));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  Matching result(n, m);
  const size_t cap = std::min(n, m);
  size_t matched = 0;
  for (const auto& [weight, user, bs] : edges) {
    if (matched == cap) break;
    if (!result.user_matched(user) && !result.bs_matched(bs)) {
      result.Add(user, bs, weight);
      ++matched;
    }
  }
  return result;
}

}  // namespace onbase
