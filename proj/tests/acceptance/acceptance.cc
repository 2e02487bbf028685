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

// Acceptance checks. `acceptance cNN` runs one criterion, no argument runs
// them all. Each prints one PASS/FAIL line; the exit code is nonzero when any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "onbase/adversaries.h"
#include "onbase/analytics.h"
#include "onbase/harness.h"
#include "onbase/model.h"
#include "onbase/offline.h"
#include "onbase/online.h"
#include "onbase/random.h"
#include "onbase/registry.h"
#include "oracles.h"

namespace onbase {
namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

WeightMatrix Arrange(const std::vector<double>& values, const std::vector<size_t>& perm,
                     size_t m) {
  std::vector<double> v(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) v[i] = values[perm[i]];
  return WeightMatrix::Identical(v, m);
}

std::vector<double> Ranks(size_t n) {
  std::vector<double> v(n);
  std::iota(v.begin(), v.end(), 1.0);
  return v;
}

ExperimentConfig AverageCase(const std::string& alg, const std::string& model,
                             std::vector<size_t> n, size_t m, size_t trials) {
  ExperimentConfig c;
  c.algorithms = {alg};
  c.model = ParseModel(model);
  c.n_values = std::move(n);
  c.m = m;
  c.trials = trials;
  c.seed = 2026;
  c.baseline = Baseline::kMwmUpper;
  return c;
}

// Identical-basestation closed form against brute force.
void C01(Verdict& v) {
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const size_t m = 2 + rng.UniformIndex(2);
    const size_t n = m + 1 + rng.UniformIndex(8 - m);
    const std::vector<double> w = oracle::RandomWeights(rng, n);
    const double closed = OptimalIdenticalOffline(w, m).value;
    const double brute = BruteForceOptimal(WeightMatrix::Identical(w, m)).value;
    worst = std::max(worst, std::fabs(closed - brute) / brute);
  }
  v.detail << "max rel diff " << Fmt(worst) << " over 1000 instances";
  v.Require(worst <= 1e-12, "rel diff <= 1e-12");
}

// The two-basestation exchange inequality over every subset.
void C02(Verdict& v) {
  Rng rng(202);
  size_t checks = 0, violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 10000; ++t) {
    const size_t d = 2 + rng.UniformIndex(7);
    std::vector<double> w = oracle::RandomWeights(rng, d);
    std::sort(w.rbegin(), w.rend());
    double rest = 0.0;
    for (size_t i = 1; i < d; ++i) rest += w[i];
    const double lhs = w[0] + rest / static_cast<double>(d - 1);
    // S ranges over nonempty subsets of {2..d}
    for (unsigned mask = 1; mask < (1u << (d - 1)); ++mask) {
      double in = w[0], out = 0.0;
      size_t k = 0;
      for (size_t i = 1; i < d; ++i) {
        if (mask & (1u << (i - 1))) {
          in += w[i];
          ++k;
        } else {
          out += w[i];
        }
      }
      const double rhs = in / static_cast<double>(k + 1) +
                         (d - k - 1 > 0 ? out / static_cast<double>(d - k - 1) : 0.0);
      ++checks;
      const double slack = lhs - rhs;
      worst = std::min(worst, slack / lhs);
      if (slack < -1e-12 * lhs) ++violations;
    }
  }
  v.detail << checks << " subset checks, " << violations << " violations, min rel slack "
           << Fmt(worst);
  v.Require(violations == 0, "no violations");
}

// Single-secretary success law.
void C03(Verdict& v) {
  const auto vals = Ranks(4);
  SecretaryTwo alg(TestUsers::Count(1));
  size_t wins = 0;
  oracle::ForEachPermutation(4, [&](const std::vector<size_t>& perm) {
    const auto res = RunOnline(alg, Arrange(vals, perm, 2), 0);
    for (size_t i = 0; i < 4; ++i) {
      if (perm[i] == 3 && res.allocation.bs_of(i) == 1) ++wins;
    }
  });
  v.detail << "enumeration " << wins << "/24";
  v.Require(wins == 11, "11 of 24 permutations");

  ExperimentConfig cfg = AverageCase("secretary", "iid:identical=1", {4}, 2, 1);
  cfg.baseline = Baseline::kProp1;
  cfg.params.r = 1;
  const size_t trials = 100000;
  double hits = 0;
  for (size_t t = 0; t < trials; ++t) {
    const auto o = RunTrial(cfg, "secretary", 4, t);
    if (o.alg >= o.opt * (1 - 1e-12)) hits += 1;
  }
  const double q = 11.0 / 24, p_hat = hits / trials;
  const double z = (p_hat - q) / std::sqrt(q * (1 - q) / trials);
  v.detail << "; monte carlo " << Fmt(p_hat) << " (z=" << Fmt(z) << ")";
  v.Require(std::fabs(z) <= 3.0, "within 3 sigma");

  double worst = 0.0;
  for (size_t n = 2; n <= 6; ++n) {
    const auto ranks = Ranks(n);
    for (size_t r = 0; r < n; ++r) {
      SecretaryTwo s(TestUsers::Count(r));
      double w = 0;
      oracle::ForEachPermutation(n, [&](const std::vector<size_t>& perm) {
        const auto res = RunOnline(s, Arrange(ranks, perm, 2), 0);
        for (size_t i = 0; i < n; ++i) {
          if (perm[i] == n - 1 && res.allocation.bs_of(i) == 1) w += 1;
        }
      });
      worst = std::max(worst, std::fabs(w / oracle::Factorial(n) - SecretarySuccessExact(n, r)));
    }
  }
  v.detail << "; exact law vs enumeration n<=6 max diff " << Fmt(worst);
  v.Require(worst <= 1e-12, "exact law matches enumeration");
}

void C04(Verdict& v) {
  const double b = BoundTwoBs(0.22, 10).value;
  double best = -1;
  int arg = 0;
  for (int k = 1; k <= 99; ++k) {
    const double x = BoundTwoBs(k / 100.0, 10).value;
    if (x > best) {
      best = x;
      arg = k;
    }
  }
  v.detail << "bound(0.22, 10) = " << Fmt(b) << ", grid argmax alpha = " << Fmt(arg / 100.0);
  v.Require(b >= 0.512 && b <= 0.522, "value in [0.512, 0.522]");
  v.Require(arg == 22, "argmax 0.22");
}

void C05(Verdict& v) {
  std::ostringstream trunc, full;
  double lowest = 1.0;
  size_t first_bad = 0;
  for (size_t m = 2; m <= 20; ++m) {
    const double x = BoundMBs(0.22, m, 10).value;
    trunc << (m > 2 ? " " : "") << m << ":" << Fmt(x);
    full << (m > 2 ? " " : "") << m << ":" << Fmt(BoundMBs(0.22, m, 150).value);
    if (x < 0.46 && first_bad == 0) first_bad = m;
    lowest = std::min(lowest, x);
  }
  v.detail << "dmax=10 {" << trunc.str() << "}; dmax=150 (informational) {" << full.str()
           << "}";
  v.Require(lowest >= 0.46, "dmax=10 value >= 0.46 for all m, first below at m=" +
                                std::to_string(first_bad));
}

// Exact selection DP by enumerating rank permutations.
std::vector<double> EnumerateSelected(size_t n, size_t r, size_t m) {
  std::vector<double> counts(n + 1, 0.0);
  oracle::ForEachPermutation(n, [&](const std::vector<size_t>& perm) {
    size_t selected = 0;
    for (size_t i = r; i < n; ++i) {
      size_t better = 0;
      for (size_t k = 0; k < i; ++k) better += perm[k] > perm[i] ? 1 : 0;
      if (better < m - 1) ++selected;
    }
    counts[selected] += 1.0;
  });
  for (double& c : counts) c /= oracle::Factorial(n);
  return counts;
}

double BinZ(const DistributionTable& table, const std::vector<double>& hist, size_t trials,
            size_t d) {
  const double p = table.at(d), p_hat = hist[d] / static_cast<double>(trials);
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  return se > 0 ? std::fabs(p_hat - p) / se : (p_hat == p ? 0.0 : INFINITY);
}

// Largest per-bin |z| over d <= 8.
double MaxAbsZ(const DistributionTable& table, const std::vector<double>& hist, size_t trials) {
  double worst = 0.0;
  for (size_t d = 0; d <= 8; ++d) worst = std::max(worst, BinZ(table, hist, trials, d));
  return worst;
}

size_t ArgMaxAbsZ(const DistributionTable& table, const std::vector<double>& hist,
                  size_t trials) {
  size_t arg = 0;
  for (size_t d = 1; d <= 8; ++d) {
    if (BinZ(table, hist, trials, d) > BinZ(table, hist, trials, arg)) arg = d;
  }
  return arg;
}

void C06(Verdict& v) {
  const size_t n = 50, r = 11, trials = 100000;
  const auto ranks = Ranks(n);
  for (size_t m : {2, 5}) {
    std::vector<double> hist(n + 1, 0.0);
    Rng rng(600 + m);
    SecretaryModified sm(TestUsers::Count(r));
    KSecretary ks(TestUsers::Count(r));
    for (size_t t = 0; t < trials; ++t) {
      const WeightMatrix w = Arrange(ranks, RandomPermutation(n, rng), m);
      if (m == 2) {
        RunOnline(sm, w, 0);
        hist[sm.num_selected()] += 1;
      } else {
        RunOnline(ks, w, 0);
        hist[ks.num_selected()] += 1;
      }
    }
    const auto table =
        m == 2 ? DegreeDistributionExact(n, r, n) : SelectedDistributionExact(n, r, m, n);
    const double worst_z = MaxAbsZ(table, hist, trials);
    v.detail << (m == 2 ? "" : "; ") << "m=" << m << " max |z| over d<=8 " << Fmt(worst_z)
             << " at d=" << ArgMaxAbsZ(table, hist, trials);
    v.Require(worst_z <= 3.0, "m=" + std::to_string(m) + " within 3 SE");
  }
  // Informational: ten times the trials at an independent seed.
  {
    std::vector<double> hist(n + 1, 0.0);
    Rng rng(6005);
    KSecretary ks(TestUsers::Count(r));
    const size_t big = 10 * trials;
    for (size_t t = 0; t < big; ++t) {
      RunOnline(ks, Arrange(ranks, RandomPermutation(n, rng), 5), 0);
      hist[ks.num_selected()] += 1;
    }
    v.detail << "; m=5 at 1e6 trials (informational) max |z| "
             << Fmt(MaxAbsZ(SelectedDistributionExact(n, r, 5, n), hist, big));
  }
  double worst = 0.0;
  for (size_t nn = 1; nn <= 8; ++nn) {
    for (size_t m = 2; m <= 4; ++m) {
      for (size_t rr = 0; rr <= nn; ++rr) {
        const auto e = EnumerateSelected(nn, rr, m);
        const auto table = SelectedDistributionExact(nn, rr, m, nn);
        for (size_t d = 0; d <= nn; ++d) worst = std::max(worst, std::fabs(e[d] - table.at(d)));
        if (m == 2 && rr >= 1) {
          const auto deg = DegreeDistributionExact(nn, rr, nn);
          for (size_t d = 0; d <= nn; ++d) worst = std::max(worst, std::fabs(e[d] - deg.at(d)));
        }
      }
    }
  }
  v.detail << "; DP vs enumeration n<=8 max diff " << Fmt(worst);
  v.Require(worst <= 1e-12, "DP matches enumeration");
}

void C07(Verdict& v) {
  double worst = 0.0;
  size_t cells = 0;
  for (size_t n = 1; n <= 200; n += (n < 20 ? 1 : 9)) {
    for (size_t m = 2; m <= 6; ++m) {
      for (size_t r = m - 1; r <= n; r += (n < 20 ? 1 : 5)) {
        const auto table = SelectedDistributionExact(n, r, m, n);
        for (size_t d = 0; d <= n; ++d) {
          const double a = table.at(d);
          const double b = SelectedProbabilityByPrefactor(n, r, m, d);
          ++cells;
          if (a == 0.0 && b == 0.0) continue;
          worst = std::max(worst, std::fabs(a - b) / std::max(a, 1e-300));
        }
      }
    }
  }
  v.detail << "two routes: " << cells << " cells, max rel diff " << Fmt(worst);
  v.Require(worst <= 1e-10, "rel diff <= 1e-10");
  bool monotone = true;
  v.detail << "; asymptote rel errors at n/t=e:";
  for (size_t d = 1; d <= 4; ++d) {
    double prev = INFINITY;
    v.detail << " d=" << d;
    for (long t : {10L, 100L, 1000L}) {
      const long n = std::lround(std::exp(1.0) * t);
      const double err = std::fabs(AdExact(t, n, d) / AdAsymptote(t, n, d) - 1);
      v.detail << " " << Fmt(err);
      if (!(err < prev)) monotone = false;
      prev = err;
    }
  }
  v.Require(monotone, "error decreasing in t");
}

void C08(Verdict& v) {
  const auto rr = RunWorstCaseFamily(
      "round-robin", {}, ParseFamilySpec("identical-geometric:beta=100,n=20,m=4,l=20"), 1);
  const double rr_eta = rr.max_eta;
  v.detail << "round-robin eta " << Fmt(rr_eta) << " (n/m=5)";
  v.Require(std::fabs(rr_eta - 5.0) <= 0.05 * 5.0, "round-robin within 5% of n/m");

  const auto mw =
      RunWorstCaseFamily("max-weight", {}, ParseFamilySpec("arbitrary-worstcase:beta=10,n=30"), 1);
  v.detail << "; max-weight on the arbitrary family eta " << Fmt(mw.max_eta) << " (0.8n=24)";
  v.Require(mw.max_eta >= 24.0, "max-weight arbitrary family >= 0.8n");

  const auto path =
      RunWorstCaseFamily("max-weight", {}, ParseFamilySpec("maxweight-pathology:beta=10,n=20"), 1);
  v.detail << "; max-weight on the pathology eta " << Fmt(path.max_eta) << " (0.8n=16)";
  v.Require(path.max_eta >= 16.0, "max-weight pathology >= 0.8n");

  // log space agrees with direct evaluation where both are representable
  const FamilySpec small = ParseFamilySpec("identical-geometric:beta=100,n=20,m=4");
  double worst = 0.0;
  for (size_t l = 1; l <= 20; ++l) {
    const WeightMatrix w = FamilyMember(small, l);
    RoundRobin alg;
    const double direct = RunOnline(alg, w, 1).utility;
    FamilySpec member = small;
    member.l = l;
    const auto one = RunWorstCaseFamily("round-robin", {}, member, 1);
    worst = std::max(worst, std::fabs(std::exp(one.rows[0].log_alg) / direct - 1));
  }
  v.detail << "; log vs direct max rel diff " << Fmt(worst);
  v.Require(worst <= 1e-9, "log-space evaluation agrees");
}

void C09(Verdict& v) {
  Rng rng(909);
  double worst = INFINITY;
  for (int t = 0; t < 10000; ++t) {
    const WeightMatrix w = oracle::RandomMatrix(rng, 8, 4);
    const double mwm = MaxWeightMatching(w).weight();
    if (mwm <= 0) continue;
    worst = std::min(worst, GreedyMatching(w).weight() / mwm);
  }
  v.detail << "greedy/MWM min " << Fmt(worst) << " over 10000 8x4";
  v.Require(worst >= 0.5, "greedy >= MWM/2");

  double worst_sp = INFINITY, mean_sp = 0;
  const int instances = 1000, orders = 100;
  for (int t = 0; t < instances; ++t) {
    const WeightMatrix w = oracle::RandomMatrix(rng, 20, 5);
    const double mwm = MaxWeightMatching(w).weight();
    double sum = 0;
    for (int k = 0; k < orders; ++k) {
      const ArrivalOrder order = ArrivalOrder::Random(20, rng);
      sum += SampleAndPrice(w, 0.5, DeriveSeed(909, t, k), order).matching.weight();
    }
    const double ratio = sum / orders / mwm;
    worst_sp = std::min(worst_sp, ratio);
    mean_sp += ratio / instances;
  }
  v.detail << "; sample-and-price mean/MWM min " << Fmt(worst_sp) << " avg " << Fmt(mean_sp)
           << " (1000 20x5, 100 orders each)";
  v.Require(worst_sp >= 0.125, "sample-and-price >= MWM/8");
}

void C10(Verdict& v) {
  const double target = 9.0 / 80;
  bool first = true;
  for (const char* model : {"correlated", "iid"}) {
    for (const auto& row : RunAverageCase(AverageCase("hide-and-seek", model, {100, 500}, 10, 1000))) {
      v.detail << (first ? "" : "; ") << model << " n=" << row.n << " rho " << Fmt(row.rho_mean)
               << "+-" << Fmt(row.rho_se);
      first = false;
      v.Require(row.rho_mean >= target, std::string(model) + " n=" + std::to_string(row.n));
    }
  }
}

void C11(Verdict& v) {
  Rng rng(1111);
  size_t runs = 0;
  double worst = 0;
  for (size_t m : {2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const std::vector<double> vals = oracle::RandomWeights(rng, 6);
      const WeightMatrix w = WeightMatrix::Identical(vals, m);
      const double opt = OptimalIdenticalOffline(vals, m).value;
      auto alg = MakeAlgorithm("reassign-identical", {});
      oracle::ForEachPermutation(6, [&](const std::vector<size_t>& perm) {
        const double u = RunOnline(*alg, w, 0, ArrivalOrder(perm)).utility;
        worst = std::max(worst, std::fabs(u / opt - 1));
        ++runs;
      });
    }
  }
  v.detail << "reassign-identical " << runs << " runs, max |rho-1| " << Fmt(worst);
  v.Require(worst <= 1e-12, "rho == 1");

  for (size_t m : {2, 10}) {
    const double target = (m - 1.0) / (2.0 * m);
    for (const char* model : {"correlated", "iid"}) {
      const auto rows = RunAverageCase(AverageCase("hide-and-seek-reassign", model, {100}, m, 1000));
      v.detail << "; R m=" << m << " " << model << " rho " << Fmt(rows[0].rho_mean);
      v.Require(rows[0].rho_mean >= target,
                "R m=" + std::to_string(m) + " " + model + " >= (m-1)/(2m)");
    }
  }
  const FamilySpec pair = ParseFamilySpec("reassign-pair:n=8,x=1e6");
  for (const char* alg : {"hide-and-seek-reassign", "reassign-identical", "last-user-reassign"}) {
    const double eta = RunWorstCaseFamily(alg, {}, pair, 1).max_eta;
    v.detail << "; pair " << alg << " eta " << Fmt(eta);
    v.Require(eta > 3.0, std::string(alg) + " pair eta > n/2-1");
  }
}

const RatioEstimate* Find(const std::vector<RatioEstimate>& rows, const std::string& alg,
                          const std::string& model_prefix, size_t n,
                          std::optional<double> param = std::nullopt) {
  for (const auto& r : rows) {
    if (r.algorithm == alg && r.n == n && r.model.rfind(model_prefix, 0) == 0 &&
        (!param || (r.r_or_p && std::fabs(*r.r_or_p - *param) < 1e-9))) {
      return &r;
    }
  }
  return nullptr;
}

void C12(Verdict& v) {
  FigureOptions opt;
  const size_t big = opt.n_values.back();

  const auto ksec = ReproduceFigure(Figure::kKsec, opt);
  double best = INFINITY;
  bool below = true;
  const RatioEstimate* mw = Find(ksec, "max-weight-balanced", "iid", big);
  for (const auto& r : ksec) {
    if (r.algorithm != "k-secretary" || r.n != big) continue;
    best = std::min(best, r.eta_mean);
    if (!(r.eta_mean < mw->eta_mean)) below = false;
  }
  v.detail << "(a) k-secretary best eta at n=" << big << " " << Fmt(best)
           << ", max-weight-balanced " << Fmt(mw->eta_mean);
  v.Require(best <= 1.05, "(a) k-secretary eta <= 1.05 at the largest n");
  v.Require(below, "(a) every k-secretary eta below max-weight");

  const auto arb = ReproduceFigure(Figure::kArbWeights, opt);
  const RatioEstimate* hs = Find(arb, "hide-and-seek", "correlated", 1000);
  const RatioEstimate* mwc = Find(arb, "max-weight", "correlated", 1000);
  v.detail << "; (b) correlated n=1000 hide-and-seek eta " << Fmt(hs->eta_mean)
           << " (eta of means " << Fmt(hs->eta_of_means) << "), max-weight "
           << Fmt(mwc->eta_mean);
  v.Require(hs->eta_mean < mwc->eta_mean, "(b) hide-and-seek below max-weight");

  const auto re = ReproduceFigure(Figure::kReassign, opt);
  bool ok = true;
  double gap = INFINITY;
  for (const char* model : {"iid", "correlated"}) {
    for (size_t n : opt.n_values) {
      const RatioEstimate* a = Find(re, "hide-and-seek-reassign", model, n);
      const RatioEstimate* b = Find(re, "hide-and-seek", model, n);
      gap = std::min(gap, b->eta_mean - a->eta_mean);
      if (!(a->eta_mean <= b->eta_mean)) ok = false;
    }
  }
  v.detail << "; (c) min hide-and-seek minus R eta " << Fmt(gap);
  v.Require(ok, "(c) R below hide-and-seek on both models");
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Verdict&)> fn;
};

}  // namespace
}  // namespace onbase

int main(int argc, char** argv) {
  using onbase::Criterion;
  const std::vector<Criterion> all = {
      {"c01", "identical closed form equals brute force", onbase::C01},
      {"c02", "exchange inequality over all subsets", onbase::C02},
      {"c03", "secretary success law", onbase::C03},
      {"c04", "two-basestation bound", onbase::C04},
      {"c05", "m-basestation bound >= 0.46", onbase::C05},
      {"c06", "degree and selection laws", onbase::C06},
      {"c07", "two-route identity and asymptote", onbase::C07},
      {"c08", "worst-case trends", onbase::C08},
      {"c09", "matching bounds", onbase::C09},
      {"c10", "hide-and-seek average ratio", onbase::C10},
      {"c11", "reassignment", onbase::C11},
      {"c12", "figure orderings", onbase::C12},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  int failures = 0, ran = 0;
  for (const auto& c : all) {
    if (!only.empty() && only != c.id) continue;
    ++ran;
    onbase::Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.title,
                v.detail.str().c_str(), secs);
    if (!v.pass) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
