// Copyright 2026 Hashrep Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HASHREP_RNG_H
#define HASHREP_RNG_H

#include <cstddef>
#include <cstdint>
#include <span>

namespace hashrep {

/// Deterministic xoshiro256** generator with splitmix64 seeding.
///
/// All randomized code in the library samples through this class instead of
/// <random> distributions, whose output is implementation-defined. That keeps
/// command outputs byte-identical for a given (config, seed) on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  /// Independent, reproducible substream for (seed, stream_id). Used to give
  /// each Monte-Carlo trial its own generator so trials can run in any order.
  static Rng stream(uint64_t seed, uint64_t stream_id);

  uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform integer in [0, bound); bound must be nonzero. Unbiased.
  uint64_t next_below(uint64_t bound);

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Samples an index from the discrete distribution `probs` (sums to ~1).
  size_t sample_discrete(std::span<const double> probs);

 private:
  uint64_t s_[4];
};

}  // namespace hashrep

#endif
