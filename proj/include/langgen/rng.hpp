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

#ifndef LANGGEN_RNG_HPP_
#define LANGGEN_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace langgen {

// Mixes a key into a seed. Used to carve independent streams out of one
// master seed: derive_seed(master, role) for a split, then
// derive_seed(split_seed, index) for one example.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);

// Deterministic random source. The engine is mt19937_64, whose output
// sequence is fixed by the standard; the distributions below are written out
// by hand because the std:: distributions are implementation-defined and
// would make datasets differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for item `index` under `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(derive_seed(seed, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, n). n must be positive.
  std::uint64_t uniform_below(std::uint64_t n);

  // Uniform on the closed interval [lo, hi]. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  bool coin() { return (next_u64() >> 63) != 0; }

  // Gamma(shape, 1) for a positive integer shape, as a sum of exponentials.
  double gamma_integer(int shape);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace langgen

#endif  // LANGGEN_RNG_HPP_
