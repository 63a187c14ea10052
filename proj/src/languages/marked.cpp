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
// Languages built from a free string u and a second part determined by u:
// the marked family u # f(u), Unmarked Reversal and Missing Duplicate.

#include <algorithm>
#include <functional>
#include <vector>

#include "languages/factories.hpp"

namespace langgen::detail {
namespace {

// u # f(u) with u over the alphabet minus the marker. The marker is the
// last symbol of the alphabet.
class MarkedLanguage final : public Language {
 public:
  using Transform = std::function<Word(std::span<const Symbol>)>;

  MarkedLanguage(std::string name, LanguageClass language_class,
                 std::vector<std::string> glyphs, Transform transform)
      : Language(std::move(name), language_class, Alphabet(std::move(glyphs))),
        marker_(alphabet().size() - 1),
        transform_(std::move(transform)) {}

 protected:
  bool contains_impl(std::span<const Symbol> w) const override {
    const auto it = std::find(w.begin(), w.end(), marker_);
    if (it == w.end()) return false;
    const std::span<const Symbol> left(w.begin(), it);
    const std::span<const Symbol> right(it + 1, w.end());
    const Word expected = transform_(left);
    return std::equal(right.begin(), right.end(), expected.begin(), expected.end());
  }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto m = draw_in_range(std::max<std::int64_t>(0, ceil_div(n_min - 1, 2)),
                                 floor_div(n_max - 1, 2), rng, name(), n_min, n_max);
    Word u(m);
    for (Symbol& s : u) s = static_cast<Symbol>(rng.uniform_below(marker_));
    Word w = u;
    w.push_back(marker_);
    const Word v = transform_(u);
    w.insert(w.end(), v.begin(), v.end());
    return w;
  }

  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    std::vector<SymbolSet> out;
    const SymbolSet free = SymbolSet::first_n(alphabet().size());
    const auto it = std::find(w.begin(), w.end(), marker_);
    const std::size_t mark = static_cast<std::size_t>(it - w.begin());
    for (std::size_t t = 0; t <= std::min(mark, w.size()); ++t) out.push_back(free);
    if (mark >= w.size()) return out;

    const Word expected = transform_(std::span<const Symbol>(w.begin(), it));
    bool dead = false;
    for (std::size_t t = mark + 1; t <= w.size(); ++t) {
      const std::size_t k = t - mark - 1;  // symbols typed after the marker
      if (!dead && k > 0 &&
          (k > expected.size() || w[t - 1] != expected[k - 1])) {
        dead = true;
      }
      SymbolSet s;
      if (!dead) {
        if (k < expected.size()) {
          s.insert(expected[k]);
        } else {
          s.insert(kEos);
        }
      }
      out.push_back(s);
    }
    return out;
  }

 private:
  Symbol marker_;
  Transform transform_;
};

Word reversed(std::span<const Symbol> u) { return Word(u.rbegin(), u.rend()); }

Word copied(std::span<const Symbol> u) { return Word(u.begin(), u.end()); }

// Symbols at 1-based odd positions, then those at even positions.
Word odds_first(std::span<const Symbol> u) {
  Word out;
  for (std::size_t i = 0; i < u.size(); i += 2) out.push_back(u[i]);
  for (std::size_t i = 1; i < u.size(); i += 2) out.push_back(u[i]);
  return out;
}

Word sorted(std::span<const Symbol> u) {
  Word out(u.begin(), u.end());
  std::sort(out.begin(), out.end());
  return out;
}

class UnmarkedReversal final : public Language {
 public:
  UnmarkedReversal()
      : Language("unmarked-reversal", LanguageClass::kContextFree,
                 Alphabet({"0", "1"})) {}

 protected:
  bool contains_impl(std::span<const Symbol> w) const override {
    return w.size() % 2 == 0 && std::equal(w.begin(), w.end(), w.rbegin());
  }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto m = draw_in_range(ceil_div(n_min, 2), floor_div(n_max, 2), rng,
                                 name(), n_min, n_max);
    Word w(m);
    for (Symbol& s : w) s = rng.coin() ? 1 : 0;
    w.insert(w.end(), w.rbegin(), w.rend());
    return w;
  }

  // Every prefix u extends to u reverse(u).
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    std::vector<SymbolSet> out;
    for (std::size_t t = 0; t <= w.size(); ++t) {
      SymbolSet s{0, 1};
      if (t % 2 == 0 && std::equal(w.begin(), w.begin() + t, w.rend() - t)) {
        s.insert(kEos);
      }
      out.push_back(s);
    }
    return out;
  }
};

class MissingDuplicate final : public Language {
 public:
  static constexpr Symbol kBlank = 2;

  MissingDuplicate()
      : Language("missing-duplicate", LanguageClass::kContextSensitive,
                 Alphabet({"0", "1", "_"})) {}

 protected:
  bool contains_impl(std::span<const Symbol> w) const override {
    if (w.size() % 2 != 0) return false;
    if (std::count(w.begin(), w.end(), kBlank) != 1) return false;
    const std::size_t half = w.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const Symbol a = w[i] == kBlank ? 1 : w[i];
      const Symbol b = w[half + i] == kBlank ? 1 : w[half + i];
      if (a != b) return false;
    }
    return true;
  }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto m = draw_in_range(std::max<std::int64_t>(1, ceil_div(n_min, 2)),
                                 floor_div(n_max, 2), rng, name(), n_min, n_max);
    Word u(m);
    for (Symbol& s : u) s = rng.coin() ? 1 : 0;
    u[rng.uniform_below(m)] = 1;
    Word w = u;
    w.insert(w.end(), u.begin(), u.end());
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 1) ones.push_back(i);
    }
    w[ones[rng.uniform_below(ones.size())]] = kBlank;
    return w;
  }

  // A prefix with at most one blank always extends to a member whose first
  // half contains the whole prefix.
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    std::vector<SymbolSet> out;
    int blanks = 0;
    for (std::size_t t = 0;; ++t) {
      SymbolSet s;
      if (blanks == 0) {
        s = {0, 1, kBlank};
      } else if (blanks == 1) {
        s = {0, 1};
        if (contains_impl(w.first(t))) s.insert(kEos);
      }
      out.push_back(s);
      if (t == w.size()) break;
      if (w[t] == kBlank) ++blanks;
    }
    return out;
  }
};

}  // namespace

std::unique_ptr<Language> make_marked_reversal() {
  return std::make_unique<MarkedLanguage>(
      "marked-reversal", LanguageClass::kDeterministicContextFree,
      std::vector<std::string>{"0", "1", "#"}, reversed);
}

std::unique_ptr<Language> make_marked_copy() {
  return std::make_unique<MarkedLanguage>(
      "marked-copy", LanguageClass::kContextSensitive,
      std::vector<std::string>{"0", "1", "#"}, copied);
}

std::unique_ptr<Language> make_odds_first() {
  return std::make_unique<MarkedLanguage>(
      "odds-first", LanguageClass::kContextSensitive,
      std::vector<std::string>{"0", "1", "#"}, odds_first);
}

std::unique_ptr<Language> make_bucket_sort() {
  return std::make_unique<MarkedLanguage>(
      "bucket-sort", LanguageClass::kContextSensitive,
      std::vector<std::string>{"1", "2", "3", "4", "5", "#"}, sorted);
}

std::unique_ptr<Language> make_unmarked_reversal() {
  return std::make_unique<UnmarkedReversal>();
}

std::unique_ptr<Language> make_missing_duplicate() {
  return std::make_unique<MissingDuplicate>();
}

}  // namespace langgen::detail
