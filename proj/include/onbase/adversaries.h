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

#ifndef ONBASE_ADVERSARIES_H_
#define ONBASE_ADVERSARIES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onbase/model.h"
#include "onbase/random.h"

namespace onbase {

// ---------------------------------------------------------------------------
// Deterministic lower-bound constructions.

// Identical-basestation rows [beta, beta^2, ..., beta^l, 0, ..., 0].
WeightMatrix GenIdenticalGeometric(size_t n, size_t m, double beta, size_t l);

// Same weights with a zero row after every nonzero one:
// [beta, 0, beta^2, 0, ..., beta^l, 0, ...]. Needs 2l - 1 <= n.
WeightMatrix GenIdenticalGeometricPadded(size_t n, size_t m, double beta, size_t l);

// Column 1 holds [beta, ..., beta^l, eps, ..., eps]; every other entry is eps.
WeightMatrix GenArbitraryWorstCase(size_t n, size_t m, double beta, double eps,
                                   size_t l);

// Two basestations; user i has rates (beta^i, beta^(i - 1/2)).
WeightMatrix GenMaxWeightPathology(size_t n, double beta);

// Two inputs that agree on the first n-1 arrivals:
//   users 1..n/2       (b, a)
//   users n/2+1..n-1   (a, c)
//   user n             (x, a) in the first matrix, (a, x) in the second.
std::pair<WeightMatrix, WeightMatrix> GenReassignPair(size_t n, double a, double b,
                                                      double c, double x);

// ---------------------------------------------------------------------------
// Families addressable by name, e.g. "identical-geometric:beta=10,n=20,m=4".

enum class FamilyKind {
  kIdenticalGeometric,
  kIdenticalGeometricPadded,
  kArbitraryWorstCase,
  kMaxWeightPathology,
  kReassignPair,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kIdenticalGeometric;
  size_t n = 10;
  size_t m = 2;
  double beta = 10.0;
  double epsilon = 1e-2;
  // Single member when set; otherwise the whole family is meant.
  std::optional<size_t> l;
  double a = 1.0;
  double b = 100.0;
  double c = 101.0;
  double x = 1e6;
};

std::string_view FamilyName(FamilyKind kind);
std::string FamilyNames();
FamilyKind ParseFamilyKind(std::string_view name);
// "<kind>[:key=value,...]"; keys beta, eps, n, m, l, a, b, c, x.
FamilySpec ParseFamilySpec(std::string_view text);
std::string FormatFamilySpec(const FamilySpec& spec);
void ValidateFamily(const FamilySpec& spec);

// Members are indexed 1..FamilySize(spec).
size_t FamilySize(const FamilySpec& spec);
WeightMatrix FamilyMember(const FamilySpec& spec, size_t index);

// ---------------------------------------------------------------------------
// Log-space evaluation. beta^n overflows doubles long before the families
// stop being interesting, so utilities are also computed on natural logs of
// the weights (-inf encodes a zero weight).

class LogWeightMatrix {
 public:
  LogWeightMatrix() = default;
  LogWeightMatrix(size_t num_users, size_t num_bs, std::vector<double> logs);
  static LogWeightMatrix FromMatrix(const WeightMatrix& w);

  size_t num_users() const { return num_users_; }
  size_t num_bs() const { return num_bs_; }
  double operator()(size_t user, int bs) const {
    return logs_[user * num_bs_ + static_cast<size_t>(bs)];
  }
  const std::vector<double>& logs() const { return logs_; }

  // True when exp() of every entry is a finite double.
  bool Representable() const;
  WeightMatrix ToMatrix() const;
  // Finite matrix with the same ordering of all entries (zeros stay zero).
  // Comparison-only algorithms behave on it exactly as on the true weights.
  WeightMatrix OrdinalSurrogate() const;

 private:
  size_t num_users_ = 0;
  size_t num_bs_ = 0;
  std::vector<double> logs_;
};

LogWeightMatrix LogFamilyMember(const FamilySpec& spec, size_t index);

// log of the time-sharing utility; -inf when the utility is 0.
double LogTsUtility(const Allocation& alloc, const LogWeightMatrix& w);

struct FamilyOptimum {
  double log_value = 0.0;
  Allocation allocation;
  // False when only a lower bound on the optimum could be certified.
  bool exact = true;
};

FamilyOptimum FamilyMemberOptimum(const FamilySpec& spec, size_t index);

// ---------------------------------------------------------------------------
// Random input models.

enum class ModelKind { kIidUniform, kCorrelatedMeans };
enum class CorrelatedDist { kUniform, kExponential };

struct RandomModel {
  ModelKind kind = ModelKind::kIidUniform;
  double lo = 0.0;
  double hi = 10.0;
  // Per-basestation means for the correlated model. Empty selects
  // {10, 5, 5, ...}; a shorter list repeats its last entry.
  std::vector<double> means;
  CorrelatedDist dist = CorrelatedDist::kUniform;
  // Draw one value per user and copy it to every basestation.
  bool identical = false;
};

std::string_view ModelName(const RandomModel& model);
// "iid" | "iid-uniform[:lo=..,hi=..,identical=1]" |
// "correlated[:dist=uniform|exponential,means=10/5]"
RandomModel ParseModel(std::string_view text);
std::string FormatModel(const RandomModel& model);

WeightMatrix SampleRandomModel(const RandomModel& model, size_t n, size_t m, Rng& rng);

}  // namespace onbase

#endif  // ONBASE_ADVERSARIES_H_
