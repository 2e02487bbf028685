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

#include "onbase/adversaries.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "kv.h"
#include "onbase/error.h"
#include "onbase/offline.h"

namespace onbase {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void CheckBeta(double beta) {
  if (!(beta > 1.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::kParam, "beta must be a finite number > 1");
  }
}

void CheckPrefix(size_t n, size_t l) {
  if (l < 1 || l > n) {
    throw Error(ErrorCode::kParam, "l must satisfy 1 <= l <= n (l=" +
                                       std::to_string(l) + ", n=" +
                                       std::to_string(n) + ")");
  }
}

WeightMatrix Materialize(const LogWeightMatrix& logs) {
  if (!logs.Representable()) {
    throw Error(ErrorCode::kParam,
                "weights overflow double precision; use the log-space path");
  }
  return logs.ToMatrix();
}

// Log weights (one per user) replicated across m identical basestations.
LogWeightMatrix IdenticalLogs(const std::vector<double>& user_logs, size_t m) {
  std::vector<double> logs;
  logs.reserve(user_logs.size() * m);
  for (double v : user_logs) logs.insert(logs.end(), m, v);
  return LogWeightMatrix(user_logs.size(), m, std::move(logs));
}

LogWeightMatrix LogIdenticalGeometric(size_t n, size_t m, double beta, size_t l) {
  CheckBeta(beta);
  CheckPrefix(n, l);
  std::vector<double> user_logs(n, kNegInf);
  for (size_t i = 0; i < l; ++i) user_logs[i] = static_cast<double>(i + 1) * std::log(beta);
  return IdenticalLogs(user_logs, m);
}

LogWeightMatrix LogIdenticalGeometricPadded(size_t n, size_t m, double beta, size_t l) {
  CheckBeta(beta);
  if (l < 1 || 2 * l - 1 > n) {
    throw Error(ErrorCode::kParam, "padded family needs 1 <= l and 2l-1 <= n (l=" +
                                       std::to_string(l) + ", n=" +
                                       std::to_string(n) + ")");
  }
  std::vector<double> user_logs(n, kNegInf);
  for (size_t i = 0; i < l; ++i) user_logs[2 * i] = static_cast<double>(i + 1) * std::log(beta);
  return IdenticalLogs(user_logs, m);
}

LogWeightMatrix LogArbitraryWorstCase(size_t n, size_t m, double beta, double eps,
                                      size_t l) {
  CheckBeta(beta);
  CheckPrefix(n, l);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kParam, "epsilon must lie in (0, 1)");
  }
  std::vector<double> logs(n * m, std::log(eps));
  for (size_t i = 0; i < l; ++i) logs[i * m] = static_cast<double>(i + 1) * std::log(beta);
  return LogWeightMatrix(n, m, std::move(logs));
}

LogWeightMatrix LogMaxWeightPathology(size_t n, double beta) {
  CheckBeta(beta);
  if (n < 1) throw Error(ErrorCode::kParam, "pathology matrix needs n >= 1");
  std::vector<double> logs(n * 2);
  const double lb = std::log(beta);
  for (size_t i = 0; i < n; ++i) {
    logs[2 * i] = static_cast<double>(i + 1) * lb;
    logs[2 * i + 1] = (static_cast<double>(i + 1) - 0.5) * lb;
  }
  return LogWeightMatrix(n, 2, std::move(logs));
}

void CheckReassignPair(size_t n, double a, double b, double c, double x) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::kParam, "reassign pair needs an even n >= 2");
  }
  if (!(a >= 0.0 && a < b && b <= c && c < x) || !std::isfinite(x)) {
    throw Error(ErrorCode::kParam, "reassign pair needs 0 <= a < b <= c < x");
  }
}

double LogSumExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

namespace {

// Replaces every nonzero exp(log) entry by the exact power it encodes.
WeightMatrix ExactPowers(const LogWeightMatrix& logs, double beta) {
  if (!logs.Representable()) Materialize(logs);
  const double lb = std::log(beta);
  std::vector<double> values(logs.logs().size(), 0.0);
  for (size_t k = 0; k < values.size(); ++k) {
    if (logs.logs()[k] != kNegInf) values[k] = std::pow(beta, std::round(logs.logs()[k] / lb));
  }
  return WeightMatrix(logs.num_users(), logs.num_bs(), std::move(values));
}

}  // namespace

WeightMatrix GenIdenticalGeometric(size_t n, size_t m, double beta, size_t l) {
  return ExactPowers(LogIdenticalGeometric(n, m, beta, l), beta);
}

WeightMatrix GenIdenticalGeometricPadded(size_t n, size_t m, double beta, size_t l) {
  return ExactPowers(LogIdenticalGeometricPadded(n, m, beta, l), beta);
}

WeightMatrix GenArbitraryWorstCase(size_t n, size_t m, double beta, double eps,
                                   size_t l) {
  // Entries are beta^i and eps exactly; build them directly rather than via
  // exp(log) so small cases stay bit-exact.
  const LogWeightMatrix logs = LogArbitraryWorstCase(n, m, beta, eps, l);
  if (!logs.Representable()) Materialize(logs);
  std::vector<double> values(n * m, eps);
  for (size_t i = 0; i < l; ++i) values[i * m] = std::pow(beta, static_cast<double>(i + 1));
  return WeightMatrix(n, m, std::move(values));
}

WeightMatrix GenMaxWeightPathology(size_t n, double beta) {
  const LogWeightMatrix logs = LogMaxWeightPathology(n, beta);
  if (!logs.Representable()) Materialize(logs);
  std::vector<double> values(n * 2);
  for (size_t i = 0; i < n; ++i) {
    values[2 * i] = std::pow(beta, static_cast<double>(i + 1));
    values[2 * i + 1] = std::pow(beta, static_cast<double>(i + 1) - 0.5);
  }
  return WeightMatrix(n, 2, std::move(values));
}

std::pair<WeightMatrix, WeightMatrix> GenReassignPair(size_t n, double a, double b,
                                                      double c, double x) {
  CheckReassignPair(n, a, b, c, x);
  std::vector<double> values(n * 2);
  for (size_t i = 0; i < n - 1; ++i) {
    const bool first_half = i < n / 2;
    values[2 * i] = first_half ? b : a;
    values[2 * i + 1] = first_half ? a : c;
  }
  std::vector<double> second = values;
  values[2 * (n - 1)] = x;
  values[2 * (n - 1) + 1] = a;
  second[2 * (n - 1)] = a;
  second[2 * (n - 1) + 1] = x;
  return {WeightMatrix(n, 2, std::move(values)), WeightMatrix(n, 2, std::move(second))};
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyEntry {
  FamilyKind kind;
  std::string_view name;
};

constexpr FamilyEntry kFamilies[] = {
    {FamilyKind::kIdenticalGeometric, "identical-geometric"},
    {FamilyKind::kIdenticalGeometricPadded, "identical-geometric-padded"},
    {FamilyKind::kArbitraryWorstCase, "arbitrary-worstcase"},
    {FamilyKind::kMaxWeightPathology, "maxweight-pathology"},
    {FamilyKind::kReassignPair, "reassign-pair"},
};

}  // namespace

std::string_view FamilyName(FamilyKind kind) {
  for (const auto& f : kFamilies) {
    if (f.kind == kind) return f.name;
  }
  return "?";
}

std::string FamilyNames() {
  std::string out;
  for (const auto& f : kFamilies) {
    if (!out.empty()) out += ", ";
    out += f.name;
  }
  return out;
}

FamilyKind ParseFamilyKind(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.kind;
  }
  throw Error(ErrorCode::kConfig, "unknown adversary family '" + std::string(name) +
                                      "'; valid names: " + FamilyNames());
}

FamilySpec ParseFamilySpec(std::string_view text) {
  const auto parsed = internal::ParseNamedArgs(text);
  FamilySpec spec;
  spec.kind = ParseFamilyKind(parsed.name);
  if (spec.kind == FamilyKind::kReassignPair) spec.n = 8;
  for (const auto& [key, value] : parsed.args) {
    if (key == "beta") spec.beta = internal::ParseDouble(key, value);
    else if (key == "eps" || key == "epsilon") spec.epsilon = internal::ParseDouble(key, value);
    else if (key == "n") spec.n = internal::ParseSize(key, value);
    else if (key == "m") spec.m = internal::ParseSize(key, value);
    else if (key == "l") spec.l = internal::ParseSize(key, value);
    else if (key == "a") spec.a = internal::ParseDouble(key, value);
    else if (key == "b") spec.b = internal::ParseDouble(key, value);
    else if (key == "c") spec.c = internal::ParseDouble(key, value);
    else if (key == "x") spec.x = internal::ParseDouble(key, value);
    else throw Error(ErrorCode::kConfig, "unknown adversary parameter '" + key + "'");
  }
  return spec;
}

std::string FormatFamilySpec(const FamilySpec& spec) {
  using internal::FormatDouble;
  std::string out = std::string(FamilyName(spec.kind)) + ":n=" + std::to_string(spec.n);
  switch (spec.kind) {
    case FamilyKind::kMaxWeightPathology:
      out += ",beta=" + FormatDouble(spec.beta);
      break;
    case FamilyKind::kReassignPair:
      out += ",a=" + FormatDouble(spec.a) + ",b=" + FormatDouble(spec.b) +
             ",c=" + FormatDouble(spec.c) + ",x=" + FormatDouble(spec.x);
      break;
    case FamilyKind::kArbitraryWorstCase:
      out += ",m=" + std::to_string(spec.m) + ",beta=" + FormatDouble(spec.beta) +
             ",eps=" + FormatDouble(spec.epsilon);
      break;
    default:
      out += ",m=" + std::to_string(spec.m) + ",beta=" + FormatDouble(spec.beta);
  }
  if (spec.l) out += ",l=" + std::to_string(*spec.l);
  return out;
}

void ValidateFamily(const FamilySpec& spec) {
  if (spec.n < 1 || spec.m < 1) {
    throw Error(ErrorCode::kParam, "family needs n >= 1 and m >= 1");
  }
  if (spec.kind == FamilyKind::kReassignPair) {
    CheckReassignPair(spec.n, spec.a, spec.b, spec.c, spec.x);
    return;
  }
  CheckBeta(spec.beta);
  if (spec.kind == FamilyKind::kArbitraryWorstCase &&
      !(spec.epsilon > 0.0 && spec.epsilon < 1.0)) {
    throw Error(ErrorCode::kParam, "epsilon must lie in (0, 1)");
  }
  if (spec.l) {
    FamilySpec whole = spec;
    whole.l.reset();
    if (*spec.l < 1 || *spec.l > FamilySize(whole)) {
      throw Error(ErrorCode::kParam, "family member l=" + std::to_string(*spec.l) +
                                         " out of range");
    }
  }
}

size_t FamilySize(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kIdenticalGeometric:
    case FamilyKind::kArbitraryWorstCase:
      return spec.n;
    case FamilyKind::kIdenticalGeometricPadded:
      return (spec.n + 1) / 2;
    case FamilyKind::kMaxWeightPathology:
      return 1;
    case FamilyKind::kReassignPair:
      return 2;
  }
  return 0;
}

LogWeightMatrix LogFamilyMember(const FamilySpec& spec, size_t index) {
  switch (spec.kind) {
    case FamilyKind::kIdenticalGeometric:
      return LogIdenticalGeometric(spec.n, spec.m, spec.beta, index);
    case FamilyKind::kIdenticalGeometricPadded:
      return LogIdenticalGeometricPadded(spec.n, spec.m, spec.beta, index);
    case FamilyKind::kArbitraryWorstCase:
      return LogArbitraryWorstCase(spec.n, spec.m, spec.beta, spec.epsilon, index);
    case FamilyKind::kMaxWeightPathology:
      return LogMaxWeightPathology(spec.n, spec.beta);
    case FamilyKind::kReassignPair:
      return LogWeightMatrix::FromMatrix(FamilyMember(spec, index));
  }
  throw Error(ErrorCode::kParam, "unknown family");
}

WeightMatrix FamilyMember(const FamilySpec& spec, size_t index) {
  switch (spec.kind) {
    case FamilyKind::kIdenticalGeometric:
      return GenIdenticalGeometric(spec.n, spec.m, spec.beta, index);
    case FamilyKind::kIdenticalGeometricPadded:
      return GenIdenticalGeometricPadded(spec.n, spec.m, spec.beta, index);
    case FamilyKind::kArbitraryWorstCase:
      return GenArbitraryWorstCase(spec.n, spec.m, spec.beta, spec.epsilon, index);
    case FamilyKind::kMaxWeightPathology:
      return GenMaxWeightPathology(spec.n, spec.beta);
    case FamilyKind::kReassignPair: {
      if (index < 1 || index > 2) {
        throw Error(ErrorCode::kParam, "reassign pair has members 1 and 2");
      }
      auto pair = GenReassignPair(spec.n, spec.a, spec.b, spec.c, spec.x);
      return index == 1 ? pair.first : pair.second;
    }
  }
  throw Error(ErrorCode::kParam, "unknown family");
}

// ---------------------------------------------------------------------------

LogWeightMatrix::LogWeightMatrix(size_t num_users, size_t num_bs,
                                 std::vector<double> logs)
    : num_users_(num_users), num_bs_(num_bs), logs_(std::move(logs)) {
  if (logs_.size() != num_users * num_bs) {
    throw Error(ErrorCode::kInvalidArgument, "log-weight matrix size mismatch");
  }
  for (double v : logs_) {
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::kInvalidArgument, "log weights must be < +inf");
    }
  }
}

LogWeightMatrix LogWeightMatrix::FromMatrix(const WeightMatrix& w) {
  std::vector<double> logs(w.values().size());
  for (size_t k = 0; k < logs.size(); ++k) {
    logs[k] = w.values()[k] > 0.0 ? std::log(w.values()[k]) : kNegInf;
  }
  return LogWeightMatrix(w.num_users(), w.num_bs(), std::move(logs));
}

bool LogWeightMatrix::Representable() const {
  constexpr double kMaxLog = 709.0;  // exp(709.78) is the double limit
  return std::all_of(logs_.begin(), logs_.end(), [](double v) { return v < kMaxLog; });
}

WeightMatrix LogWeightMatrix::ToMatrix() const {
  std::vector<double> values(logs_.size());
  for (size_t k = 0; k < values.size(); ++k) {
    values[k] = logs_[k] == kNegInf ? 0.0 : std::exp(logs_[k]);
  }
  return WeightMatrix(num_users_, num_bs_, std::move(values));
}

WeightMatrix LogWeightMatrix::OrdinalSurrogate() const {
  std::vector<double> distinct;
  for (double v : logs_) {
    if (v != kNegInf) distinct.push_back(v);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> values(logs_.size(), 0.0);
  for (size_t k = 0; k < logs_.size(); ++k) {
    if (logs_[k] == kNegInf) continue;
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), logs_[k]);
    values[k] = static_cast<double>(it - distinct.begin() + 1);
  }
  return WeightMatrix(num_users_, num_bs_, std::move(values));
}

double LogTsUtility(const Allocation& alloc, const LogWeightMatrix& w) {
  if (alloc.num_users() != w.num_users() || alloc.num_bs() != w.num_bs()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "allocation shape does not match the weight matrix");
  }
  std::vector<double> per_bs(w.num_bs(), kNegInf);
  for (size_t i = 0; i < alloc.num_users(); ++i) {
    const int bs = alloc.bs_of(i);
    if (bs == Allocation::kUnassigned) continue;
    per_bs[static_cast<size_t>(bs)] = LogSumExp(per_bs[static_cast<size_t>(bs)], w(i, bs));
  }
  double total = kNegInf;
  for (size_t j = 0; j < per_bs.size(); ++j) {
    const size_t d = alloc.degree(static_cast<int>(j));
    if (d == 0 || per_bs[j] == kNegInf) continue;
    total = LogSumExp(total, per_bs[j] - std::log(static_cast<double>(d)));
  }
  return total;
}

FamilyOptimum FamilyMemberOptimum(const FamilySpec& spec, size_t index) {
  const LogWeightMatrix logs = LogFamilyMember(spec, index);
  const size_t n = logs.num_users();
  const size_t m = logs.num_bs();
  FamilyOptimum opt;
  switch (spec.kind) {
    case FamilyKind::kIdenticalGeometric:
    case FamilyKind::kIdenticalGeometricPadded: {
      // The closed-form optimum depends only on the weight order.
      const WeightMatrix surrogate = logs.OrdinalSurrogate();
      if (m < n) {
        opt.allocation = OptimalIdenticalOffline(surrogate.Column(0), m).allocation;
      } else {
        opt.allocation = Allocation(n, m);
        for (size_t i = 0; i < n; ++i) opt.allocation.Assign(i, static_cast<int>(i));
      }
      break;
    }
    case FamilyKind::kArbitraryWorstCase: {
      // Each basestation contributes at most its largest entry, so member l
      // alone on column 1 with everyone else spread over the eps columns is
      // optimal.
      opt.allocation = Allocation(n, m);
      const size_t star = index - 1;
      opt.allocation.Assign(star, 0);
      size_t next = 0;
      for (size_t i = 0; i < n; ++i) {
        if (i == star) continue;
        const int bs = m == 1 ? 0 : static_cast<int>(1 + next++ % (m - 1));
        opt.allocation.Assign(i, bs);
      }
      break;
    }
    case FamilyKind::kMaxWeightPathology:
    case FamilyKind::kReassignPair: {
      if (logs.Representable() &&
          std::pow(static_cast<double>(m), static_cast<double>(n)) <= kBruteForceLimit) {
        opt.allocation = BruteForceOptimal(logs.ToMatrix()).allocation;
      } else {
        // Heaviest entry alone on its basestation, everyone else on the other.
        size_t best = 0;
        for (size_t k = 1; k < logs.logs().size(); ++k) {
          if (logs.logs()[k] > logs.logs()[best]) best = k;
        }
        const size_t star = best / m;
        const int star_bs = static_cast<int>(best % m);
        opt.allocation = Allocation(n, m);
        for (size_t i = 0; i < n; ++i) {
          opt.allocation.Assign(i, i == star ? star_bs : (star_bs + 1) % static_cast<int>(m));
        }
        opt.exact = false;
      }
      break;
    }
  }
  opt.log_value = LogTsUtility(opt.allocation, logs);
  return opt;
}

// ---------------------------------------------------------------------------

std::string_view ModelName(const RandomModel& model) {
  return model.kind == ModelKind::kIidUniform ? "iid" : "correlated";
}

RandomModel ParseModel(std::string_view text) {
  const auto parsed = internal::ParseNamedArgs(text);
  RandomModel model;
  if (parsed.name == "iid" || parsed.name == "iid-uniform") {
    model.kind = ModelKind::kIidUniform;
  } else if (parsed.name == "correlated" || parsed.name == "correlated-means") {
    model.kind = ModelKind::kCorrelatedMeans;
  } else {
    throw Error(ErrorCode::kConfig, "unknown input model '" + parsed.name +
                                        "'; valid names: iid, correlated");
  }
  for (const auto& [key, value] : parsed.args) {
    if (key == "lo") {
      model.lo = internal::ParseDouble(key, value);
    } else if (key == "hi") {
      model.hi = internal::ParseDouble(key, value);
    } else if (key == "identical") {
      model.identical = value == "1" || value == "true";
    } else if (key == "dist") {
      if (value == "uniform") model.dist = CorrelatedDist::kUniform;
      else if (value == "exponential") model.dist = CorrelatedDist::kExponential;
      else throw Error(ErrorCode::kConfig, "dist must be uniform or exponential");
    } else if (key == "means") {
      model.means.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const size_t slash = rest.find('/');
        model.means.push_back(internal::ParseDouble(key, std::string(rest.substr(0, slash))));
        if (slash == std::string_view::npos) break;
        rest = rest.substr(slash + 1);
      }
    } else {
      throw Error(ErrorCode::kConfig, "unknown model parameter '" + key + "'");
    }
  }
  if (model.lo < 0.0 || model.hi < model.lo) {
    throw Error(ErrorCode::kConfig, "uniform model needs 0 <= lo <= hi");
  }
  for (double mu : model.means) {
    if (!(mu > 0.0)) throw Error(ErrorCode::kConfig, "model means must be positive");
  }
  return model;
}

std::string FormatModel(const RandomModel& model) {
  using internal::FormatDouble;
  std::string out(ModelName(model));
  if (model.kind == ModelKind::kIidUniform) {
    out += ":lo=" + FormatDouble(model.lo) + ",hi=" + FormatDouble(model.hi);
  } else {
    out += model.dist == CorrelatedDist::kUniform ? ":dist=uniform" : ":dist=exponential";
    if (!model.means.empty()) {
      out += ",means=";
      for (size_t k = 0; k < model.means.size(); ++k) {
        if (k) out += "/";
        out += FormatDouble(model.means[k]);
      }
    }
  }
  if (model.identical) out += ",identical=1";
  return out;
}

WeightMatrix SampleRandomModel(const RandomModel& model, size_t n, size_t m, Rng& rng) {
  std::vector<double> means = model.means;
  if (means.empty()) means = {10.0, 5.0};
  auto mean_of = [&](size_t j) { return means[std::min(j, means.size() - 1)]; };
  auto draw = [&](size_t j) {
    if (model.kind == ModelKind::kIidUniform) return rng.Uniform(model.lo, model.hi);
    const double mu = mean_of(j);
    return model.dist == CorrelatedDist::kUniform ? rng.Uniform(0.0, 2.0 * mu)
                                                  : rng.Exponential(mu);
  };
  std::vector<double> values(n * m);
  for (size_t i = 0; i < n; ++i) {
    if (model.identical) {
      std::fill_n(values.begin() + static_cast<std::ptrdiff_t>(i * m), m, draw(0));
    } else {
      for (size_t j = 0; j < m; ++j) values[i * m + j] = draw(j);
    }
  }
  return WeightMatrix(n, m, std::move(values));
}

}  // namespace onbase
