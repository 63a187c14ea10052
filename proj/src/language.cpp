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

#include "langgen/language.hpp"

#include <array>

#include "langgen/errors.hpp"
#include "languages/factories.hpp"

namespace langgen {

std::string_view class_label(LanguageClass c) {
  switch (c) {
    case LanguageClass::kRegular:
      return "R";
    case LanguageClass::kDeterministicContextFree:
      return "DCF";
    case LanguageClass::kContextFree:
      return "CF";
    case LanguageClass::kContextSensitive:
      return "CS";
  }
  return "?";
}

Word Language::sample_positive(int n_min, int n_max, Rng& rng) const {
  if (n_min < 0 || n_min > n_max) {
    throw ConfigError("length range [" + std::to_string(n_min) + ", " +
                      std::to_string(n_max) + "] is malformed");
  }
  Word w = sample_impl(n_min, n_max, rng);
  const int n = static_cast<int>(w.size());
  if (n < n_min || n > n_max) {
    throw GenerationError(name_ + ": sampled length " + std::to_string(n) +
                          " outside the requested range");
  }
  return w;
}

RegularLanguage::RegularLanguage(std::string name, PartialDfa dfa)
    : Language(std::move(name), LanguageClass::kRegular, dfa.alphabet()),
      dfa_(std::move(dfa)),
      next_(compute_next_sets(dfa_)) {}

std::shared_ptr<const SamplerTables> RegularLanguage::tables(int n_max) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!tables_ || tables_->order() < n_max) {
    tables_ = std::make_shared<const SamplerTables>(dfa_, n_max);
  }
  return tables_;
}

bool RegularLanguage::contains_impl(std::span<const Symbol> word) const {
  return dfa_accepts(dfa_, word);
}

Word RegularLanguage::sample_impl(int n_min, int n_max, Rng& rng) const {
  return sample_positive_regular(*tables(n_max), n_min, n_max, rng).word;
}

std::vector<SymbolSet> RegularLanguage::next_sets_impl(
    std::span<const Symbol> word) const {
  std::vector<SymbolSet> out(word.size() + 1);
  std::optional<StateId> q = dfa_.start();
  out[0] = next_[*q];
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (q) q = dfa_.next(*q, word[t]);
    if (q) out[t + 1] = next_[*q];
  }
  return out;
}

namespace {

struct Registry {
  std::vector<std::string> names;
  std::vector<std::unique_ptr<Language>> languages;

  void add(std::unique_ptr<Language> language) {
    names.push_back(language->name());
    languages.push_back(std::move(language));
  }
};

constexpr std::array<std::string_view, 7> kRegularNames = {
    "even-pairs", "repeat-01", "parity", "cycle-navigation",
    "modular-arithmetic", "dyck-2-3", "first"};

const Registry& registry() {
  static const Registry instance = [] {
    Registry r;
    for (std::string_view name : kRegularNames) {
      r.add(std::make_unique<RegularLanguage>(std::string(name),
                                              build_regular_dfa(name)));
    }
    r.add(detail::make_majority());
    r.add(detail::make_stack_manipulation());
    r.add(detail::make_marked_reversal());
    r.add(detail::make_unmarked_reversal());
    r.add(detail::make_marked_copy());
    r.add(detail::make_missing_duplicate());
    r.add(detail::make_odds_first());
    r.add(detail::make_binary_addition());
    r.add(detail::make_binary_multiplication());
    r.add(detail::make_compute_sqrt());
    r.add(detail::make_bucket_sort());
    return r;
  }();
  return instance;
}

}  // namespace

std::span<const std::string> language_names() { return registry().names; }

const Language& find_language(std::string_view name) {
  const Registry& r = registry();
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return *r.languages[i];
  }
  throw ConfigError("unknown language '" + std::string(name) + "'");
}

namespace detail {

std::int64_t draw_in_range(std::int64_t lo, std::int64_t hi, Rng& rng,
                           std::string_view language, int n_min, int n_max) {
  if (lo > hi) {
    throw ConfigError(std::string(language) + " has no strings in range [" +
                      std::to_string(n_min) + ", " + std::to_string(n_max) +
                      "]");
  }
  return rng.uniform_int(lo, hi);
}

}  // namespace detail
}  // namespace langgen
