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

#include "onbase/harness.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "kv.h"
#include "onbase/analytics.h"
#include "onbase/error.h"
#include "onbase/io.h"
#include "onbase/offline.h"

namespace onbase {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using nlohmann::json;

// The input source with any file already loaded.
struct PreparedInput {
  const ExperimentConfig* cfg;
  std::optional<WeightMatrix> matrix;
};

PreparedInput Prepare(const ExperimentConfig& cfg) {
  PreparedInput in{&cfg, std::nullopt};
  if (cfg.matrix_path) {
    const std::string text = ReadTextFile(*cfg.matrix_path);
    const bool is_json = text.find('{') != std::string::npos;
    in.matrix = is_json ? WeightMatrixFromJson(text) : WeightMatrixFromCsv(text);
  }
  return in;
}

bool FamilyHasM(FamilyKind kind) {
  return kind != FamilyKind::kMaxWeightPathology && kind != FamilyKind::kReassignPair;
}

FamilySpec SizedFamily(const FamilySpec& spec, size_t n, size_t m) {
  FamilySpec out = spec;
  out.n = n;
  if (FamilyHasM(spec.kind)) out.m = m;
  FamilySpec whole = out;
  whole.l.reset();
  if (!out.l) out.l = FamilySize(whole);
  return out;
}

std::vector<size_t> NValues(const PreparedInput& in) {
  if (in.matrix) return {in.matrix->num_users()};
  return in.cfg->n_values;
}

size_t NumBs(const PreparedInput& in) {
  return in.matrix ? in.matrix->num_bs() : in.cfg->m;
}

bool InputIsIdentical(const PreparedInput& in) {
  const ExperimentConfig& cfg = *in.cfg;
  if (in.matrix) return in.matrix->HasIdenticalBasestations();
  if (cfg.model) return cfg.model->identical || cfg.m == 1;
  return cfg.adversary->kind == FamilyKind::kIdenticalGeometric ||
         cfg.adversary->kind == FamilyKind::kIdenticalGeometricPadded;
}

Baseline ResolveBaselineFor(const PreparedInput& in) {
  if (in.cfg->baseline) return *in.cfg->baseline;
  return InputIsIdentical(in) ? Baseline::kProp1 : Baseline::kMwmUpper;
}

struct Instance {
  WeightMatrix w;
  ArrivalOrder order;
  uint64_t alg_seed;
};

Instance MakeInstance(const PreparedInput& in, size_t n, size_t trial) {
  const ExperimentConfig& cfg = *in.cfg;
  Rng rng(DeriveSeed(cfg.seed, n, trial));
  WeightMatrix w;
  if (in.matrix) {
    w = *in.matrix;
  } else if (cfg.model) {
    w = SampleRandomModel(*cfg.model, n, cfg.m, rng);
  } else {
    const FamilySpec spec = SizedFamily(*cfg.adversary, n, cfg.m);
    w = FamilyMember(spec, *spec.l);
  }
  ArrivalOrder order = ArrivalOrder::Random(w.num_users(), rng);
  const uint64_t alg_seed = rng.NextU64();
  return {std::move(w), std::move(order), alg_seed};
}

double BaselineValue(Baseline b, const WeightMatrix& w) {
  switch (b) {
    case Baseline::kProp1:
      if (!w.HasIdenticalBasestations()) {
        throw Error(ErrorCode::kConfig, "prop1 baseline needs identical basestations");
      }
      return OptimalIdenticalOffline(w.Column(0), w.num_bs()).value;
    case Baseline::kBruteForce:
      return BruteForceOptimal(w).value;
    case Baseline::kMwmUpper:
      return MaxWeightMatching(w).weight();
  }
  return 0.0;
}

TrialOutcome RunPreparedTrial(const PreparedInput& in, std::string_view algorithm,
                              Baseline baseline, size_t n, size_t trial) {
  const Instance inst = MakeInstance(in, n, trial);
  const ExperimentConfig& cfg = *in.cfg;
  TrialOutcome out;
  if (FindAlgorithm(algorithm).kind == AlgorithmKind::kMatching) {
    out.alg = RunMatchingAlgorithm(algorithm, cfg.params, inst.w, inst.alg_seed, inst.order)
                  .weight();
  } else {
    auto alg = MakeAlgorithm(algorithm, cfg.params);
    const OnlineResult res = RunOnline(*alg, inst.w, inst.alg_seed, inst.order);
    out.alg = TsUtility(res.allocation, inst.w);
  }
  out.opt = BaselineValue(baseline, inst.w);
  return out;
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe Summarize(const std::vector<double>& xs) {
  NeumaierSum s;
  for (double x : xs) s.Add(x);
  const double k = static_cast<double>(xs.size());
  MeanSe out;
  out.mean = s.value() / k;
  if (!std::isfinite(out.mean)) {
    out.se = kInf;
    return out;
  }
  if (xs.size() < 2) return out;
  NeumaierSum sq;
  for (double x : xs) sq.Add((x - out.mean) * (x - out.mean));
  out.se = std::sqrt(sq.value() / (k - 1.0) / k);
  return out;
}

size_t ThreadCount(size_t requested, size_t jobs) {
  size_t t = requested;
  if (t == 0) t = std::max<unsigned>(1, std::thread::hardware_concurrency());
  return std::max<size_t>(1, std::min(t, jobs));
}

// Runs body(k) for k in [0, count) on up to `threads` threads. The first
// exception thrown is rethrown on the caller's thread.
template <typename Body>
void ParallelFor(size_t count, size_t threads, Body body) {
  threads = ThreadCount(threads, count);
  if (threads == 1) {
    for (size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const size_t k = next.fetch_add(1);
      if (k >= count) return;
      try {
        body(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view BaselineName(Baseline b) {
  switch (b) {
    case Baseline::kBruteForce: return "brute-force";
    case Baseline::kProp1: return "prop1";
    case Baseline::kMwmUpper: return "mwm-upper";
  }
  return "?";
}

Baseline ParseBaseline(std::string_view name) {
  for (Baseline b : {Baseline::kBruteForce, Baseline::kProp1, Baseline::kMwmUpper}) {
    if (BaselineName(b) == name) return b;
  }
  throw Error(ErrorCode::kConfig, "unknown baseline '" + std::string(name) +
                                      "'; valid names: brute-force, prop1, mwm-upper");
}

std::string ConfigToJson(const ExperimentConfig& cfg) {
  json doc;
  doc["algorithms"] = cfg.algorithms;
  doc["model"] = cfg.model ? json(FormatModel(*cfg.model)) : json(nullptr);
  doc["adversary"] = cfg.adversary ? json(FormatFamilySpec(*cfg.adversary)) : json(nullptr);
  doc["matrix"] = cfg.matrix_path ? json(*cfg.matrix_path) : json(nullptr);
  doc["n"] = cfg.n_values;
  doc["m"] = cfg.m;
  doc["trials"] = cfg.trials;
  doc["seed"] = cfg.seed;
  doc["baseline"] = cfg.baseline ? json(BaselineName(*cfg.baseline)) : json(nullptr);
  doc["r"] = cfg.params.r ? json(*cfg.params.r) : json(nullptr);
  doc["alpha"] = cfg.params.alpha ? json(*cfg.params.alpha) : json(nullptr);
  doc["p"] = cfg.params.p;
  doc["hidden_bs"] = cfg.params.hidden_bs ? json(*cfg.params.hidden_bs + 1) : json(nullptr);
  doc["threads"] = cfg.threads;
  doc["out"] = cfg.out;
  return doc.dump(2);
}

ExperimentConfig ConfigFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  ExperimentConfig cfg;
  try {
    for (const auto& [key, v] : doc.items()) {
      if (v.is_null()) continue;
      if (key == "algorithms" || key == "algorithm") {
        if (v.is_string()) cfg.algorithms = {v.get<std::string>()};
        else cfg.algorithms = v.get<std::vector<std::string>>();
      } else if (key == "model") {
        cfg.model = ParseModel(v.get<std::string>());
      } else if (key == "adversary") {
        cfg.adversary = ParseFamilySpec(v.get<std::string>());
      } else if (key == "matrix") {
        cfg.matrix_path = v.get<std::string>();
      } else if (key == "n") {
        if (v.is_array()) cfg.n_values = v.get<std::vector<size_t>>();
        else cfg.n_values = {v.get<size_t>()};
      } else if (key == "m") {
        cfg.m = v.get<size_t>();
      } else if (key == "trials") {
        cfg.trials = v.get<size_t>();
      } else if (key == "seed") {
        cfg.seed = v.get<uint64_t>();
      } else if (key == "baseline") {
        cfg.baseline = ParseBaseline(v.get<std::string>());
      } else if (key == "r") {
        cfg.params.r = v.get<size_t>();
      } else if (key == "alpha") {
        cfg.params.alpha = v.get<double>();
      } else if (key == "p") {
        cfg.params.p = v.get<double>();
      } else if (key == "hidden_bs") {
        const int h = v.get<int>();
        if (h < 1) throw Error(ErrorCode::kConfig, "hidden_bs is 1-based");
        cfg.params.hidden_bs = h - 1;
      } else if (key == "threads") {
        cfg.threads = v.get<size_t>();
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else {
        throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("config has a wrong type: ") + e.what());
  }
  return cfg;
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (cfg.algorithms.empty()) throw Error(ErrorCode::kConfig, "no algorithm given");
  for (const auto& a : cfg.algorithms) FindAlgorithm(a);
  const int sources = int(cfg.model.has_value()) + int(cfg.adversary.has_value()) +
                      int(cfg.matrix_path.has_value());
  if (sources != 1) {
    throw Error(ErrorCode::kConfig,
                "give exactly one input: a random model, an adversary or a matrix file");
  }
  if (cfg.trials < 1) throw Error(ErrorCode::kConfig, "trials must be >= 1");
  if (!(cfg.params.p >= 0.0 && cfg.params.p <= 1.0)) {
    throw Error(ErrorCode::kConfig, "p must lie in [0, 1]");
  }
  const PreparedInput in = Prepare(cfg);
  const size_t m = NumBs(in);
  if (m < 1) throw Error(ErrorCode::kConfig, "m must be >= 1");
  if (cfg.params.hidden_bs &&
      (*cfg.params.hidden_bs < 0 || static_cast<size_t>(*cfg.params.hidden_bs) >= m)) {
    throw Error(ErrorCode::kConfig, "hidden_bs must lie in 1..m");
  }
  const std::vector<size_t> ns = NValues(in);
  if (ns.empty()) throw Error(ErrorCode::kConfig, "no n given");
  if (cfg.adversary && !FamilyHasM(cfg.adversary->kind) && m != 2) {
    throw Error(ErrorCode::kConfig, "adversary '" +
                                        std::string(FamilyName(cfg.adversary->kind)) +
                                        "' has m = 2");
  }
  const Baseline baseline = ResolveBaselineFor(in);
  for (size_t n : ns) {
    if (n < 1) throw Error(ErrorCode::kConfig, "n must be >= 1");
    if (cfg.adversary) {
      try {
        ValidateFamily(SizedFamily(*cfg.adversary, n, m));
      } catch (const Error& e) {
        throw Error(ErrorCode::kConfig, e.what());
      }
    }
    if (baseline == Baseline::kProp1) {
      if (!InputIsIdentical(in)) {
        throw Error(ErrorCode::kConfig,
                    "prop1 baseline needs identical basestations; use brute-force or "
                    "mwm-upper");
      }
      if (m >= n) throw Error(ErrorCode::kConfig, "prop1 baseline needs m < n");
    }
    if (baseline == Baseline::kBruteForce &&
        std::pow(static_cast<double>(m), static_cast<double>(n)) > kBruteForceLimit) {
      throw Error(ErrorCode::kConfig, "brute-force baseline needs m^n <= 1e7");
    }
    for (const auto& a : cfg.algorithms) {
      if (FindAlgorithm(a).kind == AlgorithmKind::kAllocation) {
        MakeAlgorithm(a, cfg.params)->Start(n, m, 0);
      }
    }
  }
}

Baseline ResolveBaseline(const ExperimentConfig& cfg) {
  return ResolveBaselineFor(Prepare(cfg));
}

std::string InputName(const ExperimentConfig& cfg) {
  if (cfg.model) return FormatModel(*cfg.model);
  if (cfg.adversary) return FormatFamilySpec(*cfg.adversary);
  if (cfg.matrix_path) return "matrix:" + *cfg.matrix_path;
  return "";
}

TrialOutcome RunTrial(const ExperimentConfig& cfg, std::string_view algorithm,
                      size_t n, size_t trial) {
  const PreparedInput in = Prepare(cfg);
  return RunPreparedTrial(in, algorithm, ResolveBaselineFor(in), n, trial);
}

std::vector<RatioEstimate> RunAverageCase(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  const PreparedInput in = Prepare(cfg);
  const Baseline baseline = ResolveBaselineFor(in);
  const size_t m = NumBs(in);
  std::vector<RatioEstimate> out;
  for (const auto& name : cfg.algorithms) {
    for (size_t n : NValues(in)) {
      std::vector<TrialOutcome> trials(cfg.trials);
      ParallelFor(cfg.trials, cfg.threads, [&](size_t t) {
        trials[t] = RunPreparedTrial(in, name, baseline, n, t);
      });
      RatioEstimate est;
      est.algorithm = name;
      est.model = InputName(cfg);
      est.n = n;
      est.m = m;
      est.r_or_p = ReportedParam(name, cfg.params, n);
      est.trials = cfg.trials;
      est.seed = cfg.seed;
      est.baseline = baseline;
      std::vector<double> rho(cfg.trials), eta(cfg.trials), alg(cfg.trials), opt(cfg.trials);
      for (size_t t = 0; t < cfg.trials; ++t) {
        const TrialOutcome& o = trials[t];
        alg[t] = o.alg;
        opt[t] = o.opt;
        if (o.opt > 0.0) {
          rho[t] = o.alg / o.opt;
        } else {
          rho[t] = 1.0;
        }
        if (o.alg > 0.0) {
          eta[t] = o.opt / o.alg;
        } else if (o.opt > 0.0) {
          eta[t] = kInf;
          ++est.zero_utility_trials;
        } else {
          eta[t] = 1.0;
        }
      }
      const MeanSe r = Summarize(rho), e = Summarize(eta);
      est.rho_mean = r.mean;
      est.rho_se = r.se;
      est.eta_mean = e.mean;
      est.eta_se = e.se;
      est.alg_mean = Summarize(alg).mean;
      est.opt_mean = Summarize(opt).mean;
      est.eta_of_means = est.alg_mean > 0.0 ? est.opt_mean / est.alg_mean : kInf;
      out.push_back(std::move(est));
    }
  }
  return out;
}

std::string EstimatesToCsv(const std::vector<RatioEstimate>& rows,
                           std::string_view run_id) {
  using internal::FormatDouble;
  std::string out =
      "run_id,algorithm,model,n,m,r_or_p,trials,seed,rho_mean,rho_se,eta_mean,eta_se,"
      "baseline,eta_of_means\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& r : rows) {
    std::string baseline(BaselineName(r.baseline));
    if (r.baseline_is_bound()) baseline += " (upper-bound baseline)";
    out += std::string(run_id) + "," + quote(r.algorithm) + "," + quote(r.model) + "," +
           std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           (r.r_or_p ? FormatDouble(*r.r_or_p) : "") + "," + std::to_string(r.trials) +
           "," + std::to_string(r.seed) + "," + FormatDouble(r.rho_mean) + "," +
           FormatDouble(r.rho_se) + "," + FormatDouble(r.eta_mean) + "," +
           FormatDouble(r.eta_se) + "," + quote(baseline) + "," +
           FormatDouble(r.eta_of_means) + "\n";
  }
  return out;
}

std::string RunId(const ExperimentConfig& cfg) {
  ExperimentConfig key = cfg;
  key.threads = 0;
  key.out.clear();
  // FNV-1a over the canonical config.
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : ConfigToJson(key)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ManifestJson(const ExperimentConfig& cfg,
                         const std::vector<RatioEstimate>& rows) {
  json doc;
  doc["version"] = std::string(kVersion);
  doc["run_id"] = RunId(cfg);
  doc["config"] = json::parse(ConfigToJson(cfg));
  doc["input"] = InputName(cfg);
  json results = json::array();
  for (const auto& r : rows) {
    results.push_back({{"algorithm", r.algorithm},
                       {"n", r.n},
                       {"baseline", BaselineName(r.baseline)},
                       {"baseline_is_bound", r.baseline_is_bound()},
                       {"zero_utility_trials", r.zero_utility_trials},
                       {"alg_mean", r.alg_mean},
                       {"opt_mean", r.opt_mean}});
  }
  doc["results"] = results;
  return doc.dump(2);
}

// ---------------------------------------------------------------------------

WorstCaseReport RunWorstCaseFamily(std::string_view algorithm,
                                   const AlgorithmParams& params,
                                   const FamilySpec& spec, uint64_t seed) {
  ValidateFamily(spec);
  const AlgorithmInfo& info = FindAlgorithm(algorithm);
  WorstCaseReport rep;
  rep.algorithm = std::string(algorithm);
  rep.family = FormatFamilySpec(spec);
  std::vector<size_t> members;
  if (spec.l) {
    members.push_back(*spec.l);
  } else {
    for (size_t l = 1; l <= FamilySize(spec); ++l) members.push_back(l);
  }
  rep.max_eta = -kInf;
  for (size_t l : members) {
    const LogWeightMatrix logs = LogFamilyMember(spec, l);
    const FamilyOptimum opt = FamilyMemberOptimum(spec, l);
    WorstCaseRow row;
    row.l = l;
    row.log_opt = opt.log_value;
    row.opt_exact = opt.exact;
    row.surrogate = !logs.Representable();
    const WeightMatrix w = row.surrogate ? logs.OrdinalSurrogate() : logs.ToMatrix();
    if (info.kind == AlgorithmKind::kMatching) {
      const Matching mt = RunMatchingAlgorithm(algorithm, params, w, seed, std::nullopt);
      double acc = -kInf;
      for (const auto& e : mt.edges()) {
        const double v = logs(e.user, e.bs);
        if (v == -kInf) continue;
        acc = acc == -kInf ? v
                           : std::max(acc, v) + std::log1p(std::exp(-std::fabs(acc - v)));
      }
      row.log_alg = acc;
    } else {
      auto alg = MakeAlgorithm(algorithm, params);
      const OnlineResult res = RunOnline(*alg, w, seed);
      row.log_alg = LogTsUtility(res.allocation, logs);
    }
    if (row.log_alg == -kInf) {
      row.eta = row.log_opt == -kInf ? 1.0 : kInf;
    } else {
      row.eta = std::exp(row.log_opt - row.log_alg);
    }
    row.rho = 1.0 / row.eta;
    if (row.eta > rep.max_eta) {
      rep.max_eta = row.eta;
      rep.argmax_l = l;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::string WorstCaseToCsv(const WorstCaseReport& report) {
  using internal::FormatDouble;
  std::string out = "algorithm,family,l,log_opt,log_alg,eta,rho,opt_exact,surrogate\n";
  for (const auto& r : report.rows) {
    out += report.algorithm + ",\"" + report.family + "\"," + std::to_string(r.l) + "," +
           FormatDouble(r.log_opt) + "," + FormatDouble(r.log_alg) + "," +
           FormatDouble(r.eta) + "," + FormatDouble(r.rho) + "," +
           (r.opt_exact ? "1" : "0") + "," + (r.surrogate ? "1" : "0") + "\n";
  }
  return out;
}

std::string WorstCaseToJson(const WorstCaseReport& report) {
  json rows = json::array();
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(internal::FormatDouble(v)); };
  for (const auto& r : report.rows) {
    rows.push_back({{"l", r.l},
                    {"log_opt", num(r.log_opt)},
                    {"log_alg", num(r.log_alg)},
                    {"eta", num(r.eta)},
                    {"rho", num(r.rho)},
                    {"opt_exact", r.opt_exact},
                    {"surrogate", r.surrogate}});
  }
  json doc{{"version", std::string(kVersion)},
           {"algorithm", report.algorithm},
           {"family", report.family},
           {"max_eta", num(report.max_eta)},
           {"argmax_l", report.argmax_l},
           {"rows", rows}};
  return doc.dump(2);
}

// ---------------------------------------------------------------------------

std::string_view FigureName(Figure f) {
  switch (f) {
    case Figure::kKsec: return "ksec";
    case Figure::kArbWeights: return "arbweights";
    case Figure::kReassign: return "reassign";
  }
  return "?";
}

Figure ParseFigure(std::string_view name) {
  for (Figure f : {Figure::kKsec, Figure::kArbWeights, Figure::kReassign}) {
    if (FigureName(f) == name) return f;
  }
  throw Error(ErrorCode::kConfig, "unknown figure '" + std::string(name) +
                                      "'; valid names: ksec, arbweights, reassign");
}

std::vector<ExperimentConfig> FigureConfigs(Figure f, const FigureOptions& opt) {
  ExperimentConfig base;
  base.n_values = opt.n_values;
  base.m = opt.m;
  base.trials = opt.trials;
  base.seed = opt.seed;
  base.threads = opt.threads;
  std::vector<ExperimentConfig> out;
  if (f == Figure::kKsec) {
    base.model = ParseModel("iid:lo=0,hi=10,identical=1");
    base.baseline = Baseline::kProp1;
    for (double a : opt.alphas) {
      ExperimentConfig c = base;
      c.algorithms = {"k-secretary"};
      c.params.alpha = a;
      out.push_back(c);
    }
    ExperimentConfig c = base;
    c.algorithms = {"max-weight-balanced"};
    out.push_back(c);
    return out;
  }
  base.baseline = Baseline::kMwmUpper;
  const std::vector<std::string> algs =
      f == Figure::kArbWeights
          ? std::vector<std::string>{"hide-and-seek", "max-weight"}
          : std::vector<std::string>{"hide-and-seek-reassign", "hide-and-seek", "max-weight"};
  for (const RandomModel& model : {ParseModel("iid:lo=0,hi=10"), opt.correlated}) {
    ExperimentConfig c = base;
    c.model = model;
    c.algorithms = algs;
    out.push_back(c);
  }
  return out;
}

std::vector<RatioEstimate> ReproduceFigure(Figure f, const FigureOptions& opt) {
  std::vector<RatioEstimate> out;
  for (const auto& cfg : FigureConfigs(f, opt)) {
    auto rows = RunAverageCase(cfg);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace onbase
