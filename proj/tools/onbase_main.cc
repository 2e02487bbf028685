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

// Command-line front end over the onbase C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "onbase/onbase.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CliFailure {
  int code;
  std::string message;
};

int ExitCodeFor(onbase_status s) {
  return s == ONBASE_ERR_CONFIG || s == ONBASE_ERR_PARAM ? kExitConfig : kExitRuntime;
}

void Check(onbase_status s) {
  if (s != ONBASE_OK) throw CliFailure{ExitCodeFor(s), onbase_last_error()};
}

// Owns a string handle returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { onbase_string_free(s_); }
  onbase_string** out() { return &s_; }
  std::string str() const { return std::string(onbase_string_data(s_), onbase_string_size(s_)); }

 private:
  onbase_string* s_ = nullptr;
};

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliFailure{kExitRuntime, "cannot write '" + path + "'"};
  out << text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitConfig, "cannot open config '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ListOf(const char* what) {
  Text t;
  Check(onbase_list(what, t.out()));
  return t.str();
}

// Adversary flags that may be given separately from the spec string.
struct AdversaryFlags {
  std::string spec;
  std::optional<double> beta, eps, a, b, c, x;
  std::optional<size_t> n, m, l;

  void Register(CLI::App* app, bool with_nm) {
    app->add_option("--adversary", spec, "family[:key=value,...]");
    app->add_option("--beta", beta, "geometric base (> 1)");
    app->add_option("--eps", eps, "small weight (0 < eps < 1)");
    app->add_option("--l", l, "family member (1-based)");
    app->add_option("--a", a);
    app->add_option("--b", b);
    app->add_option("--c", c);
    app->add_option("--x", x);
    if (with_nm) {
      app->add_option("--n", n, "users");
      app->add_option("--m", m, "basestations");
    }
  }

  std::string Compose() const {
    std::string out = spec;
    bool has_args = out.find(':') != std::string::npos;
    auto add = [&](const char* key, const std::string& value) {
      out += has_args ? "," : ":";
      has_args = true;
      out += std::string(key) + "=" + value;
    };
    auto num = [](double v) {
      std::ostringstream ss;
      ss.precision(17);
      ss << v;
      return ss.str();
    };
    if (beta) add("beta", num(*beta));
    if (eps) add("eps", num(*eps));
    if (n) add("n", std::to_string(*n));
    if (m) add("m", std::to_string(*m));
    if (l) add("l", std::to_string(*l));
    if (a) add("a", num(*a));
    if (b) add("b", num(*b));
    if (c) add("c", num(*c));
    if (x) add("x", num(*x));
    return out;
  }
};

struct AlgParamFlags {
  std::optional<size_t> r;
  std::optional<double> alpha, p;
  std::optional<int> hidden_bs;

  void Register(CLI::App* app) {
    app->add_option("--r", r, "test users (count)");
    app->add_option("--alpha", alpha, "test users as a fraction of n");
    app->add_option("--p", p, "sampling probability");
    app->add_option("--hidden-bs", hidden_bs, "force the hidden basestation (1-based)");
  }

  void MergeInto(json& doc) const {
    if (r) doc["r"] = *r;
    if (alpha) doc["alpha"] = *alpha;
    if (p) doc["p"] = *p;
    if (hidden_bs) doc["hidden_bs"] = *hidden_bs;
  }
};

std::vector<std::string> SplitCommas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

std::optional<uint64_t> EnvSeed() {
  const char* v = std::getenv("ONBASE_SEED");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (*end != '\0') throw CliFailure{kExitConfig, "ONBASE_SEED must be an integer"};
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online basestation allocation: algorithms, adversaries, analytics and "
               "experiments."};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list", list, "print every registered name and exit");

  // run
  CLI::App* run = app.add_subcommand("run", "average-case experiment (random arrival order)");
  std::string run_config, run_model, run_matrix, run_baseline, run_out, run_manifest;
  std::vector<std::string> run_algs;
  std::vector<size_t> run_n;
  std::optional<size_t> run_m, run_trials, run_threads;
  std::optional<uint64_t> run_seed;
  bool print_config = false;
  AdversaryFlags run_adv;
  AlgParamFlags run_params;
  run->add_option("--config", run_config, "JSON config; flags override its values");
  run->add_option("--alg", run_algs, "algorithm name(s), comma separated");
  run->add_option("--model", run_model, "iid[:lo=..,hi=..,identical=1] | correlated[:..]");
  run->add_option("--matrix", run_matrix, "weight matrix file (CSV or JSON)");
  run->add_option("--n", run_n, "user counts")->delimiter(',');
  run->add_option("--m", run_m, "basestations");
  run->add_option("--trials", run_trials);
  run->add_option("--seed", run_seed, "master seed (default: $ONBASE_SEED, else 1)");
  run->add_option("--baseline", run_baseline, "brute-force | prop1 | mwm-upper");
  run->add_option("--threads", run_threads, "worker threads (default: all cores)");
  run->add_option("--out", run_out, "CSV destination (default stdout)");
  run->add_option("--manifest", run_manifest, "JSON manifest destination");
  run->add_flag("--print-config", print_config, "print the merged config and exit");
  run_adv.Register(run, false);
  run_params.Register(run);

  // worst-case
  CLI::App* worst = app.add_subcommand("worst-case", "exact ratios over an adversary family");
  std::string worst_alg, worst_format = "csv", worst_out;
  uint64_t worst_seed = 1;
  AdversaryFlags worst_adv;
  AlgParamFlags worst_params;
  worst->add_option("--alg", worst_alg, "algorithm name")->required();
  worst_adv.Register(worst, true);
  worst_params.Register(worst);
  worst->add_option("--seed", worst_seed);
  worst->add_option("--format", worst_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  worst->add_option("--out", worst_out);

  // analytic
  CLI::App* analytic = app.add_subcommand("analytic", "evaluate a closed-form quantity");
  std::string formula, analytic_out;
  std::optional<size_t> an_n, an_r, an_m, an_d, an_dmax;
  std::optional<long> an_t;
  std::optional<double> an_alpha;
  analytic->add_option("formula", formula, "formula name")->required();
  analytic->add_option("--n", an_n);
  analytic->add_option("--r", an_r);
  analytic->add_option("--m", an_m);
  analytic->add_option("--d", an_d);
  analytic->add_option("--dmax", an_dmax);
  analytic->add_option("--t", an_t);
  analytic->add_option("--alpha", an_alpha);
  analytic->add_option("--out", analytic_out);

  // figures
  CLI::App* figures = app.add_subcommand("figures", "datasets behind the simulation figures");
  std::string figure, fig_out, fig_correlated;
  std::vector<size_t> fig_n;
  std::vector<double> fig_alphas;
  std::optional<size_t> fig_m, fig_trials, fig_threads;
  std::optional<uint64_t> fig_seed;
  figures->add_option("which", figure, "ksec | arbweights | reassign")->required();
  figures->add_option("--n", fig_n)->delimiter(',');
  figures->add_option("--m", fig_m);
  figures->add_option("--trials", fig_trials);
  figures->add_option("--seed", fig_seed);
  figures->add_option("--threads", fig_threads);
  figures->add_option("--alphas", fig_alphas, "k-secretary test fractions")->delimiter(',');
  figures->add_option("--correlated", fig_correlated, "correlated model spec");
  figures->add_option("--out", fig_out);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "write a weight matrix");
  std::string gen_model, gen_format = "csv", gen_out;
  uint64_t gen_seed_default = 1;
  std::optional<uint64_t> gen_seed;
  AdversaryFlags gen_adv;
  gen_adv.Register(gen, true);
  gen->add_option("--model", gen_model, "random model instead of an adversary");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--format", gen_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--out", gen_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (list) {
      for (const char* what : {"algorithms", "families", "models", "analytics", "figures",
                               "baselines"}) {
        std::cout << what << ": " << ListOf(what) << "\n";
      }
      return kExitOk;
    }

    if (*run) {
      json doc = json::object();
      if (!run_config.empty()) {
        try {
          doc = json::parse(ReadFile(run_config));
        } catch (const json::exception& e) {
          throw CliFailure{kExitConfig, std::string("config is not valid JSON: ") + e.what()};
        }
      }
      if (!run_algs.empty()) doc["algorithms"] = SplitCommas(run_algs);
      auto set_input = [&](const char* key, const std::string& value) {
        doc.erase("model");
        doc.erase("adversary");
        doc.erase("matrix");
        doc[key] = value;
      };
      if (!run_model.empty()) set_input("model", run_model);
      if (!run_adv.spec.empty()) set_input("adversary", run_adv.Compose());
      if (!run_matrix.empty()) set_input("matrix", run_matrix);
      if (!run_n.empty()) doc["n"] = run_n;
      if (run_m) doc["m"] = *run_m;
      if (run_trials) doc["trials"] = *run_trials;
      if (run_seed) {
        doc["seed"] = *run_seed;
      } else if (!doc.contains("seed") || doc["seed"].is_null()) {
        if (auto s = EnvSeed()) doc["seed"] = *s;
      }
      if (!run_baseline.empty()) doc["baseline"] = run_baseline;
      if (run_threads) doc["threads"] = *run_threads;
      if (!run_out.empty()) doc["out"] = run_out;
      run_params.MergeInto(doc);
      const std::string cfg = doc.dump(2);
      Check(onbase_check_config(cfg.c_str()));
      if (print_config) {
        std::cout << cfg << "\n";
        return kExitOk;
      }
      Text csv, manifest;
      Check(onbase_run_experiment(cfg.c_str(), csv.out(), manifest.out()));
      const std::string out = doc.value("out", std::string());
      WriteOutput(out, csv.str());
      std::string manifest_path = run_manifest;
      if (manifest_path.empty() && !out.empty() && out != "-") {
        manifest_path = out + ".manifest.json";
      }
      if (!manifest_path.empty()) WriteOutput(manifest_path, manifest.str());
      return kExitOk;
    }

    if (*worst) {
      if (worst_adv.spec.empty()) {
        throw CliFailure{kExitConfig, "--adversary is required; valid names: " +
                                          ListOf("families")};
      }
      json params = json::object();
      worst_params.MergeInto(params);
      const std::string p = params.dump();
      Text csv, js;
      Check(onbase_worst_case(worst_alg.c_str(), p.c_str(), worst_adv.Compose().c_str(),
                              worst_seed, csv.out(), js.out()));
      WriteOutput(worst_out, worst_format == "json" ? js.str() : csv.str());
      return kExitOk;
    }

    if (*analytic) {
      json q{{"formula", formula}};
      if (an_n) q["n"] = *an_n;
      if (an_r) q["r"] = *an_r;
      if (an_m) q["m"] = *an_m;
      if (an_d) q["d"] = *an_d;
      if (an_dmax) q["dmax"] = *an_dmax;
      if (an_t) q["t"] = *an_t;
      if (an_alpha) q["alpha"] = *an_alpha;
      const std::string qs = q.dump();
      Text out;
      Check(onbase_analytic(qs.c_str(), out.out()));
      WriteOutput(analytic_out, out.str());
      return kExitOk;
    }

    if (*figures) {
      json opt = json::object();
      if (!fig_n.empty()) opt["n"] = fig_n;
      if (fig_m) opt["m"] = *fig_m;
      if (fig_trials) opt["trials"] = *fig_trials;
      if (fig_seed) {
        opt["seed"] = *fig_seed;
      } else if (auto s = EnvSeed()) {
        opt["seed"] = *s;
      }
      if (fig_threads) opt["threads"] = *fig_threads;
      if (!fig_alphas.empty()) opt["alphas"] = fig_alphas;
      if (!fig_correlated.empty()) opt["correlated"] = fig_correlated;
      const std::string os = opt.dump();
      Text csv;
      Check(onbase_figure(figure.c_str(), os.c_str(), csv.out()));
      WriteOutput(fig_out, csv.str());
      return kExitOk;
    }

    if (*gen) {
      onbase_matrix* w = nullptr;
      if (!gen_model.empty() == !gen_adv.spec.empty()) {
        throw CliFailure{kExitConfig, "give exactly one of --adversary or --model"};
      }
      if (!gen_model.empty()) {
        if (!gen_adv.n || !gen_adv.m) {
          throw CliFailure{kExitConfig, "--model needs --n and --m"};
        }
        uint64_t seed = gen_seed.value_or(EnvSeed().value_or(gen_seed_default));
        Check(onbase_sample_model(gen_model.c_str(), *gen_adv.n, *gen_adv.m, seed, &w));
      } else {
        Check(onbase_generate(gen_adv.Compose().c_str(), &w));
      }
      Text out;
      const onbase_status s = gen_format == "json" ? onbase_matrix_to_json(w, out.out())
                                                   : onbase_matrix_to_csv(w, out.out());
      onbase_matrix_free(w);
      Check(s);
      WriteOutput(gen_out, out.str());
      return kExitOk;
    }

    std::cout << app.help();
    return kExitOk;
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
