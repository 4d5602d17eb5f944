// Copyright 2026 The Dixit Challenge Authors
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

#ifndef DIXIT_COMMON_RNG_H_
#define DIXIT_COMMON_RNG_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace dixit {

// SplitMix64 finalizer; used to decorrelate derived seeds.
std::uint64_t MixBits(std::uint64_t x);

// Seed for an independent stream identified by `base` and a list of salts.
std::uint64_t DeriveSeed(std::uint64_t base,
                         std::initializer_list<std::uint64_t> salts);

// FNV-1a over the bytes of `text`, finalized with MixBits. Stable across
// platforms and standard libraries, unlike std::hash.
std::uint64_t StableHash(std::string_view text, std::uint64_t seed = 0);

// Seeded generator whose output sequence is identical on every platform.
// std::mt19937_64's raw stream is fully specified by the standard; the
// standard distributions are not, so bounded integers and reals are drawn
// here directly from the raw stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Uniform double in [0, 1) with 53 bits of precision.
  double UniformUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = UniformIndex(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dixit

#endif  // DIXIT_COMMON_RNG_H_
