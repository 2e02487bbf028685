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

#include "onbase/analytics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"
#include "onbase/error.h"

namespace onbase {

namespace {

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kParam, "alpha must lie in (0, 1)");
  }
}

void CheckRange(size_t n, size_t r) {
  if (r > n) throw Error(ErrorCode::kParam, "need r <= n");
}

// Number of successes among independent trials at positions r+1..n, the
// trial at position i succeeding with probability prob(i). Outcomes above
// dmax are dropped.
template <typename Prob>
DistributionTable CountIndependentSuccesses(size_t n, size_t r, size_t dmax,
                                            Prob prob) {
  const size_t top = std::min(dmax, n - r);
  std::vector<double> dist(top + 1, 0.0);
  dist[0] = 1.0;
  for (size_t i = r + 1; i <= n; ++i) {
    const double q = prob(i);
    const size_t reach = std::min(top, i - r);
    for (size_t d = reach; d >= 1; --d) {
      dist[d] = dist[d] * (1.0 - q) + dist[d - 1] * q;
    }
    dist[0] *= 1.0 - q;
  }
  return {std::move(dist), dmax >= n - r};
}

double Factorial(size_t d) {
  return std::tgamma(static_cast<double>(d) + 1.0);
}

size_t UpperLimit(double alpha, size_t dmax, std::optional<size_t> n) {
  if (!n) return dmax;
  const double cap = std::floor(static_cast<double>(*n) * (1.0 - alpha));
  return std::min(dmax, static_cast<size_t>(std::max(cap, 0.0)));
}

}  // namespace

void NeumaierSum::Add(double x) {
  if (!std::isfinite(x)) {
    nonfinite_ += x;
    return;
  }
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double DistributionTable::Total() const {
  NeumaierSum s;
  for (double p : probs) s.Add(p);
  return s.value();
}

double SecretarySuccessExact(size_t n, size_t r) {
  if (n == 0 || r >= n) throw Error(ErrorCode::kParam, "need 0 <= r < n");
  if (r == 0) return 1.0 / static_cast<double>(n);
  NeumaierSum s;
  for (size_t i = r + 1; i <= n; ++i) s.Add(1.0 / static_cast<double>(i - 1));
  return static_cast<double>(r) / static_cast<double>(n) * s.value();
}

DistributionTable DegreeDistributionExact(size_t n, size_t r, size_t dmax) {
  return SelectedDistributionExact(n, r, 2, dmax);
}

DistributionTable SelectedDistributionExact(size_t n, size_t r, size_t m,
                                            size_t dmax) {
  CheckRange(n, r);
  if (m < 2) throw Error(ErrorCode::kParam, "need m >= 2");
  const double k = static_cast<double>(m - 1);
  return CountIndependentSuccesses(n, r, dmax, [k](size_t i) {
    return std::min(1.0, k / static_cast<double>(i));
  });
}

double DegreeAsymptote(size_t n, size_t r, size_t d) {
  return SelectedAsymptote(n, r, 2, d);
}

double SelectedAsymptote(size_t n, size_t r, size_t m, size_t d) {
  if (r == 0 || r > n) throw Error(ErrorCode::kParam, "need 0 < r <= n");
  if (m < 2) throw Error(ErrorCode::kParam, "need m >= 2");
  const double ratio = static_cast<double>(r) / static_cast<double>(n);
  const double k = static_cast<double>(m - 1);
  return std::pow(ratio, k) * std::pow(k * std::log(1.0 / ratio), static_cast<double>(d)) /
         Factorial(d);
}

BoundReport BoundTwoBs(double alpha, size_t dmax, std::optional<size_t> n) {
  CheckAlpha(alpha);
  BoundReport rep{alpha, 2, dmax, n, 0.0};
  const double l = std::log(1.0 / alpha);
  NeumaierSum s;
  for (size_t d = 1; d <= UpperLimit(alpha, dmax, n); ++d) {
    const double dd = static_cast<double>(d);
    s.Add(alpha * std::pow(l, dd) / (dd * Factorial(d)));
  }
  rep.value = s.value();
  return rep;
}

BoundReport BoundMBs(double alpha, size_t m, size_t dmax, std::optional<size_t> n) {
  CheckAlpha(alpha);
  if (m < 2) throw Error(ErrorCode::kParam, "need m >= 2");
  BoundReport rep{alpha, m, dmax, n, 0.0};
  const double k = static_cast<double>(m - 1);
  const double l = k * std::log(1.0 / alpha);
  const double damp = std::pow(alpha, k);
  NeumaierSum s;
  for (size_t d = m - 1; d <= UpperLimit(alpha, dmax, n); ++d) {
    const double seats = std::ceil(static_cast<double>(d) / k);
    s.Add(damp * std::pow(l, static_cast<double>(d)) / (seats * Factorial(d)));
  }
  rep.value = s.value();
  return rep;
}

namespace {

// Elementary symmetric polynomial of degree d in scale/i over t < i <= n.
double ScaledSymmetric(long t, long n, size_t d, double scale) {
  if (d == 0) return 1.0;
  if (n - t < static_cast<long>(d)) return 0.0;
  std::vector<double> e(d + 1, 0.0);
  e[0] = 1.0;
  for (long i = t + 1; i <= n; ++i) {
    const double term = scale / static_cast<double>(i);
    const size_t reach = std::min(d, static_cast<size_t>(i - t));
    for (size_t k = reach; k >= 1; --k) e[k] += e[k - 1] * term;
  }
  return e[d];
}

}  // namespace

double AdExact(long t, long n, size_t d) {
  if (t < 0) throw Error(ErrorCode::kParam, "A_d needs t >= 0");
  return ScaledSymmetric(t, n, d, 1.0);
}

double AdAsymptote(double t, double n, size_t d) {
  if (!(t > 0.0 && n >= t)) throw Error(ErrorCode::kParam, "need 0 < t <= n");
  return std::pow(std::log(n / t), static_cast<double>(d)) / Factorial(d);
}

double SelectedDistributionPrefactor(size_t n, size_t r, size_t m) {
  if (m < 2) throw Error(ErrorCode::kParam, "need m >= 2");
  if (r + 1 < m || r > n) {
    throw Error(ErrorCode::kParam, "prefactor needs m-1 <= r <= n");
  }
  double out = 1.0;
  for (size_t k = 0; k + 2 <= m; ++k) {
    out *= static_cast<double>(r - k) / static_cast<double>(n - k);
  }
  return out;
}

double SelectedProbabilityByPrefactor(size_t n, size_t r, size_t m, size_t d) {
  const double pre = SelectedDistributionPrefactor(n, r, m);
  const long shift = static_cast<long>(m) - 1;
  // (m-1)^d A_d, accumulated together so deep tails do not underflow.
  return pre * ScaledSymmetric(static_cast<long>(r) - shift,
                               static_cast<long>(n) - shift, d,
                               static_cast<double>(m - 1));
}

// ---------------------------------------------------------------------------

std::string AnalyticNames() {
  return "secretary-success, degree-distribution, selected-distribution, "
         "degree-asymptote, selected-asymptote, bound-two-bs, bound-m-bs, "
         "a-d, a-d-asymptote, prefactor";
}

namespace {

template <typename T>
T Need(const std::optional<T>& v, const char* key, const std::string& formula) {
  if (!v) {
    throw Error(ErrorCode::kConfig,
                "analytic '" + formula + "' needs --" + std::string(key));
  }
  return *v;
}

nlohmann::json TableJson(const DistributionTable& t) {
  return {{"probs", t.probs}, {"complete", t.complete}, {"total", t.Total()}};
}

}  // namespace

std::string EvaluateAnalytic(const AnalyticQuery& q) {
  const std::string& f = q.formula;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json out;
  auto n = [&] { return params["n"] = Need(q.n, "n", f), *q.n; };
  auto r = [&] { return params["r"] = Need(q.r, "r", f), *q.r; };
  auto m = [&] { return params["m"] = Need(q.m, "m", f), *q.m; };
  auto d = [&] { return params["d"] = Need(q.d, "d", f), *q.d; };
  auto alpha = [&] { return params["alpha"] = Need(q.alpha, "alpha", f), *q.alpha; };
  auto dmax_or = [&](size_t fallback) {
    const size_t v = q.dmax.value_or(fallback);
    params["dmax"] = v;
    return v;
  };
  if (f == "secretary-success") {
    const size_t nn = n(), rr = r();
    out["value"] = SecretarySuccessExact(nn, rr);
    if (rr == 0) out["note"] = "r=0 has no test users; value is 1/n";
  } else if (f == "degree-distribution") {
    const size_t nn = n(), rr = r();
    out["table"] = TableJson(DegreeDistributionExact(nn, rr, dmax_or(nn - std::min(rr, nn))));
    if (rr == 0) out["note"] = "r=0: every arrival is a record candidate";
  } else if (f == "selected-distribution") {
    const size_t nn = n(), rr = r(), mm = m();
    out["table"] =
        TableJson(SelectedDistributionExact(nn, rr, mm, dmax_or(nn - std::min(rr, nn))));
  } else if (f == "degree-asymptote") {
    const size_t nn = n(), rr = r(), dd = d();
    out["value"] = DegreeAsymptote(nn, rr, dd);
  } else if (f == "selected-asymptote") {
    const size_t nn = n(), rr = r(), mm = m(), dd = d();
    out["value"] = SelectedAsymptote(nn, rr, mm, dd);
  } else if (f == "bound-two-bs") {
    const double a = alpha();
    const size_t dm = dmax_or(10);
    if (q.n) params["n"] = *q.n;
    out["value"] = BoundTwoBs(a, dm, q.n).value;
  } else if (f == "bound-m-bs") {
    const double a = alpha();
    const size_t mm = m();
    const size_t dm = dmax_or(10);
    if (q.n) params["n"] = *q.n;
    out["value"] = BoundMBs(a, mm, dm, q.n).value;
  } else if (f == "a-d") {
    params["t"] = Need(q.t, "t", f);
    const size_t nn = n(), dd = d();
    out["value"] = AdExact(*q.t, static_cast<long>(nn), dd);
  } else if (f == "a-d-asymptote") {
    params["t"] = Need(q.t, "t", f);
    const size_t nn = n(), dd = d();
    out["value"] = AdAsymptote(static_cast<double>(*q.t), static_cast<double>(nn), dd);
  } else if (f == "prefactor") {
    const size_t nn = n(), rr = r(), mm = m();
    out["value"] = SelectedDistributionPrefactor(nn, rr, mm);
  } else {
    throw Error(ErrorCode::kConfig,
                "unknown analytic '" + f + "'; valid names: " + AnalyticNames());
  }
  nlohmann::json doc;
  doc["formula"] = f;
  doc["params"] = params;
  for (auto& [k, v] : out.items()) doc[k] = v;
  return doc.dump(2);
}

}  // namespace onbase
