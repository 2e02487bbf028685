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
#include <string>
#include <vector>

#include "doctest.h"
#include "onbase/adversaries.h"
#include "onbase/error.h"
#include "onbase/harness.h"
#include "onbase/offline.h"
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

TEST_CASE("identical geometric rows") {
  const WeightMatrix w = GenIdenticalGeometric(3, 2, 10, 2);
  CHECK(w == WeightMatrix(3, 2, {10, 10, 100, 100, 0, 0}));
  const WeightMatrix full = GenIdenticalGeometric(4, 3, 2, 4);
  for (size_t i = 0; i < 4; ++i) CHECK(full(i, 2) == std::pow(2.0, static_cast<double>(i + 1)));
  CHECK(full.HasIdenticalBasestations());
  CHECK(CodeOf([] { GenIdenticalGeometric(3, 2, 1.0, 2); }) == ErrorCode::kParam);
  CHECK(CodeOf([] { GenIdenticalGeometric(3, 2, 10, 4); }) == ErrorCode::kParam);
}

TEST_CASE("padded geometric rows") {
  CHECK(GenIdenticalGeometricPadded(4, 1, 7, 2) == WeightMatrix(4, 1, {7, 0, 49, 0}));
  CHECK(GenIdenticalGeometricPadded(5, 2, 7, 1) == GenIdenticalGeometric(5, 2, 7, 1));
  CHECK(CodeOf([] { GenIdenticalGeometricPadded(4, 2, 7, 3); }) == ErrorCode::kParam);
}

TEST_CASE("arbitrary worst case and pathology rows") {
  const WeightMatrix w = GenArbitraryWorstCase(3, 3, 10, 0.01, 2);
  CHECK(w == WeightMatrix(3, 3, {10, 0.01, 0.01, 100, 0.01, 0.01, 0.01, 0.01, 0.01}));
  CHECK(GenArbitraryWorstCase(3, 1, 10, 0.01, 2) == WeightMatrix(3, 1, {10, 100, 0.01}));
  const WeightMatrix p = GenMaxWeightPathology(4, 10);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(p(i, 0) > p(i, 1));
    CHECK(p(i, 1) == doctest::Approx(std::pow(10.0, static_cast<double>(i) + 0.5)));
  }
  CHECK(CodeOf([] { GenMaxWeightPathology(4, 0.5); }) == ErrorCode::kParam);
}

TEST_CASE("reassign pair") {
  const auto [w1, w2] = GenReassignPair(4, 1, 100, 101, 1e6);
  CHECK(w1 == WeightMatrix(4, 2, {100, 1, 100, 1, 1, 101, 1e6, 1}));
  CHECK(w2 == WeightMatrix(4, 2, {100, 1, 100, 1, 1, 101, 1, 1e6}));
  CHECK(CodeOf([] { GenReassignPair(5, 1, 100, 101, 1e6); }) == ErrorCode::kParam);

  FamilySpec spec = ParseFamilySpec("reassign-pair");
  CHECK(FamilySize(spec) == 2);
  for (size_t k = 1; k <= 2; ++k) {
    const auto opt = FamilyMemberOptimum(spec, k);
    CHECK(opt.exact);
    // the x user alone, everyone else on the other side
    CHECK(std::exp(opt.log_value) >= 1e6);
    CHECK(std::exp(opt.log_value) < 1e6 + 101);
  }
}

TEST_CASE("family spec parsing") {
  const FamilySpec s = ParseFamilySpec("identical-geometric:beta=3,n=7,m=4,l=2");
  CHECK(s.kind == FamilyKind::kIdenticalGeometric);
  CHECK(s.beta == 3.0);
  CHECK(s.n == 7);
  CHECK(s.m == 4);
  CHECK(s.l == 2u);
  CHECK(ParseFamilySpec(FormatFamilySpec(s)).beta == 3.0);
  CHECK(FormatFamilySpec(ParseFamilySpec(FormatFamilySpec(s))) == FormatFamilySpec(s));
  CHECK(ParseFamilySpec("arbitrary-worstcase:eps=0.5").epsilon == 0.5);
  CHECK(ParseFamilySpec("arbitrary-worstcase:epsilon=0.25").epsilon == 0.25);
  CHECK(CodeOf([] { ParseFamilySpec("nope"); }) == ErrorCode::kConfig);
  CHECK(CodeOf([] { ParseFamilySpec("identical-geometric:zeta=1"); }) == ErrorCode::kConfig);
  CHECK(FamilySize(ParseFamilySpec("identical-geometric:n=9")) == 9);
  CHECK(FamilySize(ParseFamilySpec("identical-geometric-padded:n=9")) == 5);
  CHECK(FamilySize(ParseFamilySpec("maxweight-pathology:n=9")) == 1);
  for (const char* name : {"identical-geometric", "identical-geometric-padded",
                           "arbitrary-worstcase", "maxweight-pathology", "reassign-pair"}) {
    CHECK(FamilyNames().find(name) != std::string::npos);
    CHECK(FamilyName(ParseFamilyKind(name)) == name);
  }
}

TEST_CASE("log space utility agrees with direct evaluation") {
  Rng rng(4);
  const WeightMatrix w = GenIdenticalGeometric(50, 3, 10, 50);
  const LogWeightMatrix lw = LogWeightMatrix::FromMatrix(w);
  CHECK(lw.Representable());
  for (int t = 0; t < 500; ++t) {
    std::vector<int> a(50);
    for (int& x : a) x = static_cast<int>(rng.UniformIndex(3));
    const Allocation alloc = Allocation::FromVector(a, 3);
    CHECK(oracle::RelClose(std::exp(LogTsUtility(alloc, lw)), TsUtility(alloc, w), 1e-9));
  }
  // a single beta^k alone on a basestation
  std::vector<int> solo(50, 1);
  solo[6] = 0;
  Allocation alloc = Allocation::FromVector(solo, 3);
  alloc.Unassign(6);
  for (size_t i = 0; i < 50; ++i) alloc.Unassign(i);
  alloc.Assign(6, 0);
  CHECK(LogTsUtility(alloc, lw) == doctest::Approx(7 * std::log(10.0)));
  CHECK(std::isinf(LogTsUtility(Allocation(50, 3), lw)));

  const LogWeightMatrix huge = LogFamilyMember(ParseFamilySpec("identical-geometric:beta=10,n=400"), 400);
  CHECK_FALSE(huge.Representable());
  const WeightMatrix sur = huge.OrdinalSurrogate();
  for (size_t i = 1; i < 400; ++i) CHECK(sur(i, 0) > sur(i - 1, 0));
}

TEST_CASE("round robin worst case grows with beta") {
  // Members with l < m give exactly n/m for every beta; the trend is on W_n.
  FamilySpec spec = ParseFamilySpec("identical-geometric:n=20,m=4,l=20");
  std::vector<double> etas;
  for (double beta : {2.0, 10.0, 100.0}) {
    spec.beta = beta;
    etas.push_back(RunWorstCaseFamily("round-robin", {}, spec, 1).max_eta);
  }
  CHECK(etas[0] < etas[1]);
  CHECK(etas[1] < etas[2]);
  CHECK(std::fabs(etas[2] - 5.0) <= 0.05 * 5.0);
}

TEST_CASE("max weight worst case grows linearly in n") {
  std::vector<double> xs, ys;
  for (size_t n = 10; n <= 100; n += 10) {
    FamilySpec spec = ParseFamilySpec("arbitrary-worstcase:beta=10,eps=0.01,m=3");
    spec.n = n;
    spec.l = n;
    xs.push_back(static_cast<double>(n));
    ys.push_back(RunWorstCaseFamily("max-weight", {}, spec, 1).max_eta);
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / xs.size();
    my += ys[i] / ys.size();
  }
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  CHECK(sxy / sxx >= 0.8);
}

TEST_CASE("max weight on the pathology matrix") {
  const FamilySpec spec = ParseFamilySpec("maxweight-pathology:beta=10,n=20");
  const auto rep = RunWorstCaseFamily("max-weight", {}, spec, 1);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].opt_exact);
  CHECK(rep.max_eta >= 16.0);
}

TEST_CASE("family optimum matches brute force where feasible") {
  for (const char* text : {"identical-geometric:beta=3,n=7,m=3",
                           "identical-geometric-padded:beta=3,n=7,m=2",
                           "arbitrary-worstcase:beta=3,eps=0.1,n=7,m=3",
                           "maxweight-pathology:beta=3,n=8"}) {
    const FamilySpec spec = ParseFamilySpec(text);
    for (size_t l = 1; l <= FamilySize(spec); ++l) {
      CAPTURE(text);
      CAPTURE(l);
      const auto opt = FamilyMemberOptimum(spec, l);
      CHECK(opt.exact);
      CHECK(oracle::RelClose(std::exp(opt.log_value),
                             BruteForceOptimal(FamilyMember(spec, l)).value, 1e-9));
    }
  }
}

TEST_CASE("random models") {
  Rng rng(17);
  const size_t n = 10000;
  const WeightMatrix iid = SampleRandomModel(ParseModel("iid"), n, 3, rng);
  for (int j = 0; j < 3; ++j) {
    double mean = 0;
    for (double x : iid.Column(j)) {
      CHECK(x >= 0.0);
      CHECK(x <= 10.0);
      mean += x / n;
    }
    CHECK(std::fabs(mean - 5.0) <= 3 * (10 / std::sqrt(12.0)) / std::sqrt(double(n)));
  }
  for (const char* text : {"correlated", "correlated:dist=exponential"}) {
    const RandomModel model = ParseModel(text);
    const WeightMatrix w = SampleRandomModel(model, n, 4, rng);
    for (int j = 0; j < 4; ++j) {
      const double mu = j == 0 ? 10.0 : 5.0;
      const double sd = model.dist == CorrelatedDist::kUniform ? 2 * mu / std::sqrt(12.0) : mu;
      double mean = 0;
      for (double x : w.Column(j)) mean += x / n;
      CAPTURE(text);
      CAPTURE(j);
      CHECK(std::fabs(mean - mu) <= 3 * sd / std::sqrt(double(n)));
    }
  }
  const WeightMatrix c = SampleRandomModel(ParseModel("iid:lo=3,hi=3"), 20, 2, rng);
  for (double x : c.values()) CHECK(x == 3.0);
  CHECK(SampleRandomModel(ParseModel("iid:identical=1"), 20, 4, rng).HasIdenticalBasestations());
  const RandomModel custom = ParseModel("correlated:means=8/4/2");
  const WeightMatrix cw = SampleRandomModel(custom, 5000, 5, rng);
  double last = 0;
  for (double x : cw.Column(4)) last += x / 5000;
  CHECK(std::fabs(last - 2.0) < 0.1);
  CHECK(ParseModel(FormatModel(custom)).means == custom.means);
  CHECK(FormatModel(ParseModel(FormatModel(custom))) == FormatModel(custom));
  CHECK(CodeOf([] { ParseModel("gaussian"); }) == ErrorCode::kConfig);
}

TEST_CASE("models are reproducible from the seed") {
  Rng a(5), b(5);
  const RandomModel model = ParseModel("correlated:dist=exponential");
  CHECK(SampleRandomModel(model, 30, 3, a) == SampleRandomModel(model, 30, 3, b));
}

}  // namespace
}  // namespace onbase
