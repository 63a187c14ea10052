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

#include <set>

#include "doctest.h"
#include "langgen/language.hpp"
#include "langgen/perturb.hpp"

using namespace langgen;

namespace {
const Alphabet kBinary({"0", "1"});
}

TEST_CASE("edit count is geometric from 1") {
  Rng rng(17);
  const int draws = 1000000;
  int ones = 0, upto3 = 0;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    const int k = sample_edit_count(rng);
    REQUIRE(k >= 1);
    ones += k == 1;
    upto3 += k <= 3;
    sum += k;
  }
  CHECK(ones / double(draws) == doctest::Approx(0.5).epsilon(0.005));
  CHECK(upto3 / double(draws) == doctest::Approx(0.875).epsilon(0.005));
  CHECK(sum / draws == doctest::Approx(2.0).epsilon(0.005));
}

TEST_CASE("single deletions") {
  Rng rng(3);
  std::set<Word> seen;
  for (int i = 0; i < 200; ++i) {
    std::vector<Edit> log;
    // With n_max = 2 insertion is illegal and replacement still is legal,
    // so only deletions are kept.
    const Word out = apply_edits(Word{0, 1}, 1, kBinary, 0, 2, rng, &log);
    REQUIRE(log.size() == 1);
    if (log[0].kind == EditKind::kDelete) seen.insert(out);
    CHECK(log[0].kind != EditKind::kInsert);
  }
  CHECK(seen == std::set<Word>{Word{0}, Word{1}});
}

TEST_CASE("replacement always changes the symbol") {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<Edit> log;
    const Word out = apply_edits(Word{0}, 1, kBinary, 1, 1, rng, &log);
    REQUIRE(log.size() == 1);
    CHECK(log[0].kind == EditKind::kReplace);
    CHECK(out == Word{1});
  }
}

TEST_CASE("no insertion at the maximum length") {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<Edit> log;
    apply_edits(Word{0, 1, 1}, 1, kBinary, 0, 3, rng, &log);
    CHECK(log[0].kind != EditKind::kInsert);
  }
  const Alphabet unary({"a"});
  CHECK_THROWS_AS(apply_edits(Word{0}, 1, unary, 1, 1, rng), GenerationError);
}

TEST_CASE("edits stay inside the length range") {
  Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    const Word out = apply_edits(Word{0, 1, 0, 1}, 6, kBinary, 2, 5, rng);
    CHECK(out.size() >= 2);
    CHECK(out.size() <= 5);
  }
}

TEST_CASE("negatives are non-members") {
  Rng rng(8);
  for (const auto& name : language_names()) {
    const Language& lang = find_language(name);
    for (int i = 0; i < 500; ++i) {
      const Word w = sample_negative(lang, 0, 40, rng);
      CAPTURE(name);
      CHECK(w.size() <= 40);
      CHECK_FALSE(lang.contains(w));
    }
  }
}

namespace {

// Every binary string is a member, so there are no negatives.
class Universal final : public Language {
 public:
  Universal() : Language("universal", LanguageClass::kRegular, kBinary) {}

 protected:
  bool contains_impl(std::span<const Symbol>) const override { return true; }
  Word sample_impl(int n_min, int, Rng&) const override { return Word(n_min, 0); }
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    return std::vector<SymbolSet>(w.size() + 1, SymbolSet{0, 1, kEos});
  }
};

}  // namespace

TEST_CASE("an empty complement exhausts the attempt budget") {
  Rng rng(9);
  const Universal universal;
  CHECK_THROWS_AS(sample_negative(universal, 0, 5, rng, NegativeOptions{50}), GenerationError);
  CHECK(sample_negative(find_language("first"), 1, 1, rng) == Word{0});
}
