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

#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "kv.h"
#include "onbase/error.h"
#include "onbase/io.h"
#include "oracles.h"

namespace onbase {
namespace {

template <typename Fn>
ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected onbase::Error");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("csv round trip is exact") {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const size_t n = 1 + rng.UniformIndex(10);
    const size_t m = 1 + rng.UniformIndex(5);
    WeightMatrix w = oracle::RandomMatrix(rng, n, m, 0.0, std::pow(10.0, rng.Uniform(-8, 20)));
    if (t % 3 == 0) w.Set(0, 0, 0.0);
    CHECK(WeightMatrixFromCsv(WeightMatrixToCsv(w)) == w);
    CHECK(WeightMatrixFromJson(WeightMatrixToJson(w)) == w);
  }
  // values with at most 15 significant digits print as written
  const WeightMatrix s(1, 3, {0.1, 123456789012345.0, 1e-7});
  CHECK(WeightMatrixToCsv(s).find("0.1,123456789012345,") == 0);
}

TEST_CASE("csv parsing") {
  const WeightMatrix w = WeightMatrixFromCsv("# comment\n1, 2\n\n3,4\r\n");
  CHECK(w == WeightMatrix(2, 2, {1, 2, 3, 4}));
  CHECK(CodeOf([] { WeightMatrixFromCsv("1,2\n3\n"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromCsv("1,x\n"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromCsv("# nothing\n"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromCsv("1,-2\n"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("json parsing") {
  CHECK(WeightMatrixFromJson(R"({"n":2,"m":1,"w":[[1],[2]]})") == WeightMatrix(2, 1, {1, 2}));
  CHECK(CodeOf([] { WeightMatrixFromJson("{"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromJson(R"({"n":2,"m":1,"w":[[1]]})"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromJson(R"({"n":1,"m":2,"w":[[1]]})"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WeightMatrixFromJson(R"({"n":1,"m":1,"w":[["a"]]})"); }) == ErrorCode::kIo);
}

TEST_CASE("matchings and allocations serialize 1-based") {
  Matching m(2, 2);
  m.Add(1, 0, 2.5);
  const auto jm = nlohmann::json::parse(MatchingToJson(m));
  CHECK(jm["edges"][0]["user"] == 2);
  CHECK(jm["edges"][0]["bs"] == 1);
  CHECK(jm["weight"] == 2.5);

  const WeightMatrix w(3, 2, {3, 1, 1, 3, 2, 2});
  Allocation a(3, 2);
  a.Assign(0, 0);
  a.Assign(1, 1);
  const auto ja = nlohmann::json::parse(AllocationToJson(a, w));
  CHECK(ja["assign"] == nlohmann::json::array({1, 2, 0}));
  CHECK(ja["degrees"] == nlohmann::json::array({1, 1}));
  CHECK(ja["utility"] == 6.0);
}

TEST_CASE("text files") {
  const std::string path = "io_test_tmp.txt";
  WriteTextFile(path, "hello\n");
  CHECK(ReadTextFile(path) == "hello\n");
  std::remove(path.c_str());
  CHECK(CodeOf([] { ReadTextFile("/nonexistent/dir/file"); }) == ErrorCode::kIo);
  CHECK(CodeOf([] { WriteTextFile("/nonexistent/dir/file", "x"); }) == ErrorCode::kIo);
}

TEST_CASE("named argument parsing") {
  const auto a = internal::ParseNamedArgs("fam:beta=10,l=3");
  CHECK(a.name == "fam");
  CHECK(a.args.at("beta") == "10");
  CHECK(a.args.at("l") == "3");
  CHECK(internal::ParseNamedArgs("plain").args.empty());
  CHECK(CodeOf([] { internal::ParseNamedArgs("fam:beta"); }) == ErrorCode::kConfig);
  CHECK(CodeOf([] { internal::ParseDouble("k", "1.5x"); }) == ErrorCode::kConfig);
  CHECK(CodeOf([] { internal::ParseSize("k", "-1"); }) == ErrorCode::kConfig);
  CHECK(internal::FormatDouble(0.5) == "0.5");
  CHECK(internal::FormatDouble(1e300) == "1e+300");
}

}  // namespace
}  // namespace onbase
