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

// Exercises the shared library strictly through its C interface.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "onbase/onbase.h"

namespace {

std::string Take(onbase_string* s) {
  std::string out(onbase_string_data(s), onbase_string_size(s));
  onbase_string_free(s);
  return out;
}

onbase_matrix* Make(size_t n, size_t m, const std::vector<double>& v) {
  onbase_matrix* w = nullptr;
  REQUIRE(onbase_matrix_create(n, m, v.data(), &w) == ONBASE_OK);
  return w;
}

TEST_CASE("status names and version") {
  CHECK(std::string(onbase_version()) == "1.0.0");
  CHECK(std::string(onbase_status_name(ONBASE_OK)) == "ok");
  CHECK(std::string(onbase_status_name(ONBASE_ERR_CONFIG)) == "config");
  CHECK(std::string(onbase_status_name(ONBASE_ERR_TOO_LARGE)) == "too-large");
}

TEST_CASE("matrix handles") {
  onbase_matrix* w = Make(2, 2, {3, 1, 1, 3});
  CHECK(onbase_matrix_users(w) == 2);
  CHECK(onbase_matrix_bs(w) == 2);
  CHECK(onbase_matrix_data(w)[3] == 3.0);
  onbase_string* csv = nullptr;
  REQUIRE(onbase_matrix_to_csv(w, &csv) == ONBASE_OK);
  const std::string text = Take(csv);
  CHECK(text == "3,1\n1,3\n");
  onbase_matrix* back = nullptr;
  REQUIRE(onbase_matrix_parse(text.c_str(), &back) == ONBASE_OK);
  CHECK(onbase_matrix_data(back)[1] == 1.0);
  onbase_string* js = nullptr;
  REQUIRE(onbase_matrix_to_json(w, &js) == ONBASE_OK);
  onbase_matrix* fromjs = nullptr;
  REQUIRE(onbase_matrix_parse(Take(js).c_str(), &fromjs) == ONBASE_OK);
  CHECK(onbase_matrix_users(fromjs) == 2);
  onbase_matrix_free(fromjs);
  onbase_matrix_free(back);
  onbase_matrix_free(w);
  onbase_matrix_free(nullptr);
  onbase_string_free(nullptr);
}

TEST_CASE("errors are reported with codes and messages") {
  onbase_matrix* w = nullptr;
  const double bad[] = {1, -1};
  CHECK(onbase_matrix_create(1, 2, bad, &w) == ONBASE_ERR_INVALID_ARGUMENT);
  CHECK(w == nullptr);
  CHECK(std::string(onbase_last_error()).size() > 0);
  CHECK(onbase_matrix_load("/nonexistent/file.csv", &w) == ONBASE_ERR_IO);
  CHECK(onbase_matrix_parse("1,2\n3\n", &w) == ONBASE_ERR_IO);
  double v = 0;
  CHECK(onbase_ts_utility(nullptr, nullptr, &v) == ONBASE_ERR_INVALID_ARGUMENT);

  onbase_matrix* ok = Make(2, 2, {3, 1, 1, 3});
  const int out_of_range[] = {1, 3};
  CHECK(onbase_ts_utility(ok, out_of_range, &v) == ONBASE_ERR_INVALID_ALLOCATION);
  const int good[] = {1, 2};
  CHECK(onbase_ts_utility(ok, good, &v) == ONBASE_OK);
  CHECK(v == 6.0);
  CHECK(std::string(onbase_last_error()).empty());
  const int partial[] = {1, 0};
  CHECK(onbase_ts_utility(ok, partial, &v) == ONBASE_OK);
  CHECK(v == 3.0);

  int assign[4];
  const double two[] = {2, 1};
  CHECK(onbase_optimal_identical(two, 2, 2, &v, assign) == ONBASE_ERR_UNSUPPORTED_SHAPE);
  std::vector<double> big(30 * 2, 1.0);
  onbase_matrix* large = Make(30, 2, big);
  CHECK(onbase_brute_force(large, &v, nullptr) == ONBASE_ERR_TOO_LARGE);
  onbase_matrix_free(large);

  CHECK(onbase_run_online(ok, "nope", nullptr, 0, nullptr, assign, &v) == ONBASE_ERR_CONFIG);
  CHECK(std::string(onbase_last_error()).find("round-robin") != std::string::npos);
  CHECK(onbase_run_online(ok, "round-robin", "{not json", 0, nullptr, assign, &v) ==
        ONBASE_ERR_INVALID_ARGUMENT);
  CHECK(onbase_run_online(ok, "round-robin", R"({"zeta": 1})", 0, nullptr, assign, &v) ==
        ONBASE_ERR_CONFIG);
  const size_t dup[] = {1, 1};
  CHECK(onbase_run_online(ok, "round-robin", nullptr, 0, dup, assign, &v) ==
        ONBASE_ERR_INVALID_ARGUMENT);
  onbase_string* s = nullptr;
  onbase_matrix* g = nullptr;
  CHECK(onbase_generate("identical-geometric:beta=0.5", &g) == ONBASE_ERR_PARAM);
  CHECK(onbase_generate("nope", &g) == ONBASE_ERR_CONFIG);
  CHECK(onbase_list("nothing", &s) == ONBASE_ERR_CONFIG);
  CHECK(onbase_check_config(R"({"algorithms": ["round-robin"], "trials": 3})") ==
        ONBASE_ERR_CONFIG);
  CHECK(onbase_check_config(R"({"algorithms": ["round-robin"], "model": "iid",
                                "n": 5, "m": 2, "trials": 3})") == ONBASE_OK);
  onbase_matrix_free(ok);
}

TEST_CASE("offline optima and matchings") {
  const double weights[] = {1, 2, 3, 4};
  double v = 0;
  int assign[4];
  REQUIRE(onbase_optimal_identical(weights, 4, 2, &v, assign) == ONBASE_OK);
  CHECK(v == 6.0);  // the 4 alone, the rest averaging 2
  onbase_matrix* w = Make(4, 2, {1, 1, 2, 2, 3, 3, 4, 4});
  double check = 0;
  REQUIRE(onbase_ts_utility(w, assign, &check) == ONBASE_OK);
  CHECK(check == v);
  int bf[4];
  REQUIRE(onbase_brute_force(w, &check, bf) == ONBASE_OK);
  CHECK(check == v);
  for (int a : bf) CHECK((a == 1 || a == 2));

  onbase_matrix* x = Make(2, 2, {3, 1, 1, 3});
  onbase_string* s = nullptr;
  REQUIRE(onbase_max_weight_matching(x, &s) == ONBASE_OK);
  const auto j = nlohmann::json::parse(Take(s));
  CHECK(j["weight"] == 6.0);
  CHECK(j["edges"].size() == 2);
  REQUIRE(onbase_greedy_matching(x, &s) == ONBASE_OK);
  CHECK(nlohmann::json::parse(Take(s))["weight"] == 6.0);
  onbase_matrix_free(x);
  onbase_matrix_free(w);
}

TEST_CASE("online runs") {
  onbase_matrix* w = Make(4, 2, {1, 1, 2, 2, 3, 3, 4, 4});
  int assign[4];
  double v = 0;
  REQUIRE(onbase_run_online(w, "round-robin", nullptr, 7, nullptr, assign, &v) == ONBASE_OK);
  CHECK(assign[0] == 2);
  CHECK(assign[1] == 1);
  CHECK(assign[2] == 2);
  CHECK(assign[3] == 1);
  double check = 0;
  REQUIRE(onbase_ts_utility(w, assign, &check) == ONBASE_OK);
  CHECK(v == check);

  // round robin on a reversed order places user 4 first
  const size_t order[] = {4, 3, 2, 1};
  REQUIRE(onbase_run_online(w, "round-robin", nullptr, 7, order, assign, &v) == ONBASE_OK);
  CHECK(assign[3] == 2);
  CHECK(assign[0] == 1);

  onbase_string* s = nullptr;
  REQUIRE(onbase_run_online_json(w, "secretary", R"({"r": 1})", 3, nullptr, &s) == ONBASE_OK);
  const auto j = nlohmann::json::parse(Take(s));
  CHECK(j.dump().find("assign") != std::string::npos);

  // same seed, same answer
  int a1[4], a2[4];
  double u1 = 0, u2 = 0;
  REQUIRE(onbase_run_online(w, "hide-and-seek", R"({"p": 0.5})", 11, nullptr, a1, &u1) ==
          ONBASE_OK);
  REQUIRE(onbase_run_online(w, "hide-and-seek", R"({"p": 0.5})", 11, nullptr, a2, &u2) ==
          ONBASE_OK);
  CHECK(u1 == u2);
  for (int i = 0; i < 4; ++i) CHECK(a1[i] == a2[i]);
  // matching algorithms are not allocations
  CHECK(onbase_run_online(w, "sample-and-price", nullptr, 1, nullptr, a1, &u1) ==
        ONBASE_ERR_CONFIG);
  onbase_string* m1 = nullptr;
  onbase_string* m2 = nullptr;
  REQUIRE(onbase_run_matching(w, "sample-and-price", R"({"p": 0.5})", 11, nullptr, &m1) ==
          ONBASE_OK);
  REQUIRE(onbase_run_matching(w, "sample-and-price", R"({"p": 0.5})", 11, nullptr, &m2) ==
          ONBASE_OK);
  CHECK(Take(m1) == Take(m2));

  onbase_matrix* x = Make(2, 2, {3, 1, 1, 3});
  REQUIRE(onbase_run_matching(x, "greedy-reassign", nullptr, 1, nullptr, &s) == ONBASE_OK);
  CHECK(nlohmann::json::parse(Take(s)).is_object());
  onbase_matrix_free(x);
  onbase_matrix_free(w);
}

TEST_CASE("inputs and analytics") {
  onbase_matrix* g = nullptr;
  REQUIRE(onbase_generate("identical-geometric:beta=10,n=5,m=2,l=5", &g) == ONBASE_OK);
  CHECK(onbase_matrix_users(g) == 5);
  CHECK(onbase_matrix_bs(g) == 2);
  CHECK(onbase_matrix_data(g)[0] == 10.0);
  CHECK(onbase_matrix_data(g)[8] == 1e5);
  onbase_matrix_free(g);

  onbase_matrix* a = nullptr;
  onbase_matrix* b = nullptr;
  REQUIRE(onbase_sample_model("correlated", 6, 3, 42, &a) == ONBASE_OK);
  REQUIRE(onbase_sample_model("correlated", 6, 3, 42, &b) == ONBASE_OK);
  for (size_t k = 0; k < 18; ++k) CHECK(onbase_matrix_data(a)[k] == onbase_matrix_data(b)[k]);
  onbase_matrix_free(a);
  onbase_matrix_free(b);

  onbase_string* s = nullptr;
  REQUIRE(onbase_analytic(R"({"formula": "secretary-success", "n": 4, "r": 1})", &s) ==
          ONBASE_OK);
  CHECK(nlohmann::json::parse(Take(s))["value"].get<double>() ==
        doctest::Approx(11.0 / 24));
  CHECK(onbase_analytic(R"({"formula": "nope"})", &s) == ONBASE_ERR_CONFIG);
}

TEST_CASE("experiments, worst cases and figures") {
  const char* cfg = R"({"algorithms": ["round-robin", "reassign-identical"],
                        "model": "iid:identical=1", "n": [6], "m": 2,
                        "trials": 20, "seed": 5, "baseline": "prop1"})";
  onbase_string* csv = nullptr;
  onbase_string* manifest = nullptr;
  REQUIRE(onbase_run_experiment(cfg, &csv, &manifest) == ONBASE_OK);
  const std::string text = Take(csv);
  CHECK(text.find("reassign-identical") != std::string::npos);
  CHECK(nlohmann::json::parse(Take(manifest)).is_object());
  onbase_string* again = nullptr;
  REQUIRE(onbase_run_experiment(cfg, &again, nullptr) == ONBASE_OK);
  CHECK(Take(again) == text);

  onbase_string* wc_csv = nullptr;
  onbase_string* wc_json = nullptr;
  REQUIRE(onbase_worst_case("round-robin", nullptr, "identical-geometric:beta=10,n=8,m=2", 1,
                            &wc_csv, &wc_json) == ONBASE_OK);
  CHECK(Take(wc_csv).size() > 0);
  CHECK(nlohmann::json::parse(Take(wc_json)).is_object());

  onbase_string* fig = nullptr;
  REQUIRE(onbase_figure("reassign", R"({"n": [6], "m": 2, "trials": 10})", &fig) == ONBASE_OK);
  CHECK(Take(fig).size() > 0);
  CHECK(onbase_figure("nope", nullptr, &fig) == ONBASE_ERR_CONFIG);

  onbase_string* names = nullptr;
  REQUIRE(onbase_list("algorithms", &names) == ONBASE_OK);
  CHECK(Take(names).find("hide-and-seek") != std::string::npos);
  for (const char* what : {"families", "analytics", "baselines", "figures", "models"}) {
    REQUIRE(onbase_list(what, &names) == ONBASE_OK);
    CHECK(Take(names).size() > 0);
  }
}

}  // namespace
