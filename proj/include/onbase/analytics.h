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

#ifndef ONBASE_ANALYTICS_H_
#define ONBASE_ANALYTICS_H_

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace onbase {

// Compensated summation (Neumaier's variant of Kahan).
class NeumaierSum {
 public:
  void Add(double x);
  double value() const {
    return nonfinite_ != 0.0 || std::isnan(nonfinite_) ? nonfinite_
                                                        : sum_ + compensation_;
  }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double nonfinite_ = 0.0;  // infinities and NaNs, kept out of the compensation
};

// Probabilities for the outcomes 0, 1, ..., probs.size() - 1.
struct DistributionTable {
  std::vector<double> probs;
  // True when every outcome with nonzero probability is listed.
  bool complete = false;

  double Total() const;
  double at(size_t d) const { return d < probs.size() ? probs[d] : 0.0; }
};

// Probability that the single-stop secretary rule with r test users sends
// the heaviest of n distinct users to basestation 2. r = 0 gives 1/n.
double SecretarySuccessExact(size_t n, size_t r);

// Law of the number of running maxima strictly after position r, i.e. the
// final degree of basestation 2 under the repeated secretary rule. Position
// i is a record with probability 1/i independently of the others.
DistributionTable DegreeDistributionExact(size_t n, size_t r, size_t dmax);

// Law of the number of users selected by the k-secretary rule: position
// i > r is selected with probability min(1, (m-1)/i), independently.
DistributionTable SelectedDistributionExact(size_t n, size_t r, size_t m,
                                            size_t dmax);

// Limits of the two laws above for r proportional to n and fixed d.
double DegreeAsymptote(size_t n, size_t r, size_t d);
double SelectedAsymptote(size_t n, size_t r, size_t m, size_t d);

struct BoundReport {
  double alpha = 0.0;
  size_t m = 2;
  size_t dmax = 0;
  std::optional<size_t> n;  // empty: no n(1 - alpha) cap
  double value = 0.0;
};

// sum_{d=1}^{min(dmax, n(1-alpha))} alpha (ln 1/alpha)^d / (d * d!)
BoundReport BoundTwoBs(double alpha, size_t dmax,
                       std::optional<size_t> n = std::nullopt);

// sum_{d=m-1}^{min(dmax, n(1-alpha))}
//     alpha^(m-1) ((m-1) ln 1/alpha)^d / (ceil(d/(m-1)) * d!)
BoundReport BoundMBs(double alpha, size_t m, size_t dmax,
                     std::optional<size_t> n = std::nullopt);

// A_d(t, n) = sum over t < i_1 < ... < i_d <= n of 1/(i_1 ... i_d).
// Zero when the range holds fewer than d indices; A_0 = 1.
double AdExact(long t, long n, size_t d);
// (1/d!) ln(n/t)^d
double AdAsymptote(double t, double n, size_t d);

// r(r-1)...(r-m+2) / (n(n-1)...(n-m+2)). Requires m-1 <= r <= n.
double SelectedDistributionPrefactor(size_t n, size_t r, size_t m);

// Pr(S_n = d) through the prefactor and A_d(r-m+1, n-m+1).
double SelectedProbabilityByPrefactor(size_t n, size_t r, size_t m, size_t d);

// Names accepted by EvaluateAnalytic.
std::string AnalyticNames();

struct AnalyticQuery {
  std::string formula;
  std::optional<size_t> n;
  std::optional<size_t> r;
  std::optional<size_t> m;
  std::optional<size_t> d;
  std::optional<size_t> dmax;
  std::optional<long> t;
  std::optional<double> alpha;
};

// Evaluates one formula and returns it as a JSON document holding the
// formula name, its parameters and the result.
std::string EvaluateAnalytic(const AnalyticQuery& query);

}  // namespace onbase

#endif  // ONBASE_ANALYTICS_H_
