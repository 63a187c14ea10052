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

#ifndef LANGGEN_SRC_LANGUAGES_FACTORIES_HPP_
#define LANGGEN_SRC_LANGUAGES_FACTORIES_HPP_

#include <cstdint>
#include <memory>

#include "langgen/language.hpp"

namespace langgen::detail {

// Integer division rounding toward -inf / +inf, for possibly negative a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

// Uniform draw from [lo, hi]; ConfigError naming `language` if empty.
std::int64_t draw_in_range(std::int64_t lo, std::int64_t hi, Rng& rng,
                           std::string_view language, int n_min, int n_max);

std::unique_ptr<Language> make_majority();
std::unique_ptr<Language> make_stack_manipulation();
std::unique_ptr<Language> make_marked_reversal();
std::unique_ptr<Language> make_unmarked_reversal();
std::unique_ptr<Language> make_marked_copy();
std::unique_ptr<Language> make_missing_duplicate();
std::unique_ptr<Language> make_odds_first();
std::unique_ptr<Language> make_bucket_sort();
std::unique_ptr<Language> make_binary_addition();
std::unique_ptr<Language> make_binary_multiplication();
std::unique_ptr<Language> make_compute_sqrt();

}  // namespace langgen::detail

#endif  // LANGGEN_SRC_LANGUAGES_FACTORIES_HPP_
