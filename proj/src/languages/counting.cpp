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
// Majority and Stack Manipulation.

#include <algorithm>
#include <vector>

#include "languages/factories.hpp"

namespace langgen::detail {
namespace {

class Majority final : public Language {
 public:
  Majority()
      : Language("majority", LanguageClass::kDeterministicContextFree,
                 Alphabet({"0", "1"})) {}

 protected:
  bool contains_impl(std::span<const Symbol> w) const override {
    const auto ones = std::count(w.begin(), w.end(), 1);
    return 2 * ones > static_cast<std::int64_t>(w.size());
  }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto n = draw_in_range(std::max(n_min, 1), n_max, rng, name(), n_min, n_max);
    const auto ones = rng.uniform_int(n / 2 + 1, n);
    Word w(n, 0);
    std::fill(w.begin() + (n - ones), w.end(), 1);
    rng.shuffle(std::span<Symbol>(w));
    return w;
  }

  // Any prefix can be completed by appending enough 1s.
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    std::vector<SymbolSet> out;
    std::int64_t balance = 0;  // #1 - #0
    for (std::size_t t = 0;; ++t) {
      SymbolSet s{0, 1};
      if (balance > 0) s.insert(kEos);
      out.push_back(s);
      if (t == w.size()) break;
      balance += w[t] == 1 ? 1 : -1;
    }
    return out;
  }
};

class StackManipulation final : public Language {
 public:
  static constexpr Symbol kZero = 0, kOne = 1, kPush = 2, kPop = 3, kEquals = 4;

  StackManipulation()
      : Language("stack-manipulation", LanguageClass::kDeterministicContextFree,
                 Alphabet({"0", "1", "PUSH", "POP", "="})) {}

 protected:
  bool contains_impl(std::span<const Symbol> w) const override {
    const auto sets = scan(w);
    return sets.back().has_eos();
  }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto n_stack = draw_in_range(std::max<std::int64_t>(0, ceil_div(n_min - 1, 2)),
                                       floor_div(n_max - 1, 2), rng, name(), n_min, n_max);
    const auto n_push = draw_in_range(
        std::max<std::int64_t>(0, ceil_div(n_min - 2 * n_stack - 1, 3)),
        floor_div(n_max - 2 * n_stack - 1, 3), rng, name(), n_min, n_max);

    Word w;
    std::vector<Symbol> stack;
    for (std::int64_t i = 0; i < n_stack; ++i) {
      const Symbol b = rng.coin() ? kOne : kZero;
      w.push_back(b);
      stack.push_back(b);
    }
    std::int64_t pushes = 0;
    for (;;) {
      const bool push = stack.empty() || rng.coin();
      if (push) {
        if (pushes == n_push) break;
        const Symbol b = rng.coin() ? kOne : kZero;
        w.push_back(kPush);
        w.push_back(b);
        stack.push_back(b);
        ++pushes;
      } else {
        w.push_back(kPop);
        stack.pop_back();
      }
    }
    w.push_back(kEquals);
    w.insert(w.end(), stack.rbegin(), stack.rend());
    return w;
  }

  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    return scan(w);
  }

 private:
  enum class Phase { kInitial, kOps, kAfterPush, kOutput, kDead };

  // NEXT for every prefix. PUSH is always completable in the operation
  // phase and POP is completable iff the stack is nonempty.
  static std::vector<SymbolSet> scan(std::span<const Symbol> w) {
    std::vector<SymbolSet> out;
    std::vector<Symbol> stack;
    std::size_t emitted = 0;  // output symbols matched so far
    Phase phase = Phase::kInitial;
    for (std::size_t t = 0;; ++t) {
      SymbolSet s;
      switch (phase) {
        case Phase::kInitial:
          s = {kZero, kOne, kPush, kEquals};
          if (!stack.empty()) s.insert(kPop);
          break;
        case Phase::kOps:
          s = {kPush, kEquals};
          if (!stack.empty()) s.insert(kPop);
          break;
        case Phase::kAfterPush:
          s = {kZero, kOne};
          break;
        case Phase::kOutput:
          if (emitted < stack.size()) {
            s.insert(stack[stack.size() - 1 - emitted]);
          } else {
            s.insert(kEos);
          }
          break;
        case Phase::kDead:
          break;
      }
      out.push_back(s);
      if (t == w.size()) break;

      const Symbol a = w[t];
      if (!s.contains(a)) {
        phase = Phase::kDead;
        continue;
      }
      switch (phase) {
        case Phase::kInitial:
        case Phase::kOps:
          if (a == kZero || a == kOne) {
            stack.push_back(a);
          } else if (a == kPush) {
            phase = Phase::kAfterPush;
          } else if (a == kPop) {
            stack.pop_back();
            phase = Phase::kOps;
          } else {
            phase = Phase::kOutput;
          }
          break;
        case Phase::kAfterPush:
          stack.push_back(a);
          phase = Phase::kOps;
          break;
        case Phase::kOutput:
          ++emitted;
          break;
        case Phase::kDead:
          break;
      }
    }
    return out;
  }
};

}  // namespace

std::unique_ptr<Language> make_majority() { return std::make_unique<Majority>(); }
std::unique_ptr<Language> make_stack_manipulation() {
  return std::make_unique<StackManipulation>();
}

}  // namespace langgen::detail
