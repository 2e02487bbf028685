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

#ifndef ONBASE_RANDOM_H_
#define ONBASE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace onbase {

// SplitMix64 finalizer. Used to derive independent per-trial and per-purpose
// seeds from a master seed so results do not depend on thread count.
uint64_t MixSeed(uint64_t x);
uint64_t DeriveSeed(uint64_t master, uint64_t stream, uint64_t index);

// Thin wrapper over mt19937_64. The distributions are implemented here rather
// than through <random> distributions because the latter are not specified
// bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(MixSeed(seed)) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi);
  // Uniform on {0, ..., bound - 1}; bound must be positive.
  size_t UniformIndex(size_t bound);
  double Exponential(double mean);
  size_t Binomial(size_t trials, double p);

 private:
  std::mt19937_64 engine_;
};

// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<size_t> RandomPermutation(size_t n, Rng& rng);

}  // namespace onbase

#endif  // ONBASE_RANDOM_H_
