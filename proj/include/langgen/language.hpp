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
//
// The benchmark languages. Every language exposes its alphabet, an exact
// membership test, a length-constrained positive sampler and next-symbol
// sets. Regular languages are backed by a trim partial DFA and the exact
// sampler; the others are procedural.

#ifndef LANGGEN_LANGUAGE_HPP_
#define LANGGEN_LANGUAGE_HPP_

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langgen/automata.hpp"
#include "langgen/lcsampler.hpp"
#include "langgen/rng.hpp"
#include "langgen/symbols.hpp"

namespace langgen {

enum class LanguageClass { kRegular, kDeterministicContextFree, kContextFree, kContextSensitive };

// "R", "DCF", "CF" or "CS".
std::string_view class_label(LanguageClass c);

class Language {
 public:
  Language(std::string name, LanguageClass language_class, Alphabet alphabet)
      : name_(std::move(name)),
        class_(language_class),
        alphabet_(std::move(alphabet)) {}
  virtual ~Language() = default;
  Language(const Language&) = delete;
  Language& operator=(const Language&) = delete;

  const std::string& name() const { return name_; }
  LanguageClass language_class() const { return class_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Throws UsageError for symbols outside the alphabet.
  bool contains(std::span<const Symbol> word) const {
    alphabet_.check(word);
    return contains_impl(word);
  }

  // A member with length in [n_min, n_max]. Throws ConfigError when the
  // range holds no member.
  Word sample_positive(int n_min, int n_max, Rng& rng) const;

  // Entry t is NEXT(w_<t): the symbols a such that w_<t a is a prefix of a
  // member, plus EOS iff w_<t is a member. |word| + 1 entries; once a prefix
  // has no completion every later entry is empty.
  std::vector<SymbolSet> next_sets(std::span<const Symbol> word) const {
    alphabet_.check(word);
    return next_sets_impl(word);
  }

  // Non-null iff the language is regular.
  virtual const PartialDfa* dfa() const { return nullptr; }

 protected:
  virtual bool contains_impl(std::span<const Symbol> word) const = 0;
  virtual Word sample_impl(int n_min, int n_max, Rng& rng) const = 0;
  virtual std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> word) const = 0;

 private:
  std::string name_;
  LanguageClass class_;
  Alphabet alphabet_;
};

// Regular language sampled exactly through SamplerTables. Tables are built
// lazily and rebuilt only when a longer maximum length is requested; bin i
// of every table depends only on bins 0..i, so the draws do not depend on
// which order the cache was built at.
class RegularLanguage final : public Language {
 public:
  RegularLanguage(std::string name, PartialDfa dfa);

  const PartialDfa* dfa() const override { return &dfa_; }
  std::shared_ptr<const SamplerTables> tables(int n_max) const;

 protected:
  bool contains_impl(std::span<const Symbol> word) const override;
  Word sample_impl(int n_min, int n_max, Rng& rng) const override;
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> word) const override;

 private:
  PartialDfa dfa_;
  std::vector<SymbolSet> next_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const SamplerTables> tables_;
};

// Canonical kebab-case names, regular languages first.
std::span<const std::string> language_names();

// Throws ConfigError for an unknown name.
const Language& find_language(std::string_view name);

// The trim DFA of one of the seven regular languages. Throws ConfigError
// for any other name.
PartialDfa build_regular_dfa(std::string_view name);

}  // namespace langgen

#endif  // LANGGEN_LANGUAGE_HPP_
