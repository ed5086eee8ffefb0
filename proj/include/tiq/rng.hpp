// Copyright 2026 The tiq Authors.
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

#ifndef TIQ_RNG_HPP
#define TIQ_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace tiq {

// SplitMix64 finalizer, used to decorrelate derived seeds.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministically derives an independent child seed from a root seed, a
// task index (grid point, run number, twirl index, ...) and a stream id
// (shot sampling, phonon draws, ...). Every sampled quantity in the toolkit
// gets its seed through this function, so results are independent of
// evaluation order.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index,
                                 std::uint64_t stream) {
  std::uint64_t s = splitmix64_mix(root);
  s = splitmix64_mix(s ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  s = splitmix64_mix(s ^ (0xD1B54A32D192ED03ull * (stream + 1)));
  return s;
}

// Seedable PRNG with a fixed, documented algorithm (std::mt19937_64, whose
// output sequence is pinned by the C++ standard) and a fixed uniform-double
// construction, so sampled outputs are bit-reproducible across platforms.
// std::uniform_real_distribution is deliberately avoided: its algorithm is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Unbiased uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tiq

#endif  // TIQ_RNG_HPP
