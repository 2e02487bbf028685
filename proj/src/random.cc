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

#include "onbase/random.h"

#include <cmath>
#include <numeric>

namespace onbase {

uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t master, uint64_t stream, uint64_t index) {
  return MixSeed(MixSeed(master ^ MixSeed(stream)) + index);
}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform01();
}

size_t Rng::UniformIndex(size_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const uint64_t b = bound;
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % b);
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<size_t>(x % b);
}

double Rng::Exponential(double mean) {
  return -mean * std::log1p(-Uniform01());
}

size_t Rng::Binomial(size_t trials, double p) {
  size_t k = 0;
  for (size_t i = 0; i < trials; ++i) {
    if (Uniform01() < p) ++k;
  }
  return k;
}

std::vector<size_t> RandomPermutation(size_t n, Rng& rng) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  for (size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.UniformIndex(i)]);
  }
  return perm;
}

}  // namespace onbase
