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

#include <cmath>
#include <filesystem>
#include <sstream>
#include <unordered_set>

#include "doctest.h"
#include "langgen/dataset.hpp"

using namespace langgen;

namespace {

SuiteOptions small_suite() {
  SuiteOptions options;
  options.shapes = {SplitShape{400, 0, 40}, SplitShape{60, 0, 40}, SplitShape{60, 0, 80},
                    SplitShape{60, 0, 40},  SplitShape{40, 0, 500}, SplitShape{10, 0, 500}};
  return options;
}

std::string to_text(const DatasetSplit& split) {
  std::ostringstream out;
  write_split(split, out);
  return out.str();
}

}  // namespace

TEST_CASE("roles and shapes") {
  CHECK(role_name(SplitRole::kValShort) == "val-short");
  CHECK(parse_role("test-long") == SplitRole::kTestLong);
  CHECK_THROWS_AS(parse_role("bogus"), ConfigError);
  const auto train = standard_shape(SplitRole::kTrain);
  CHECK(train.count == 10000);
  CHECK(train.n_max == 40);
  CHECK(standard_shape(SplitRole::kValLong).n_max == 80);
  CHECK(standard_shape(SplitRole::kTestLong).count == 5010);
  CHECK(standard_shape(SplitRole::kEditdistProbe).count == 50);
}

TEST_CASE("examples are deterministic per seed") {
  const Language& parity = find_language("parity");
  Rng a(123), b(123);
  for (int i = 0; i < 50; ++i) {
    CHECK(generate_example(parity, 0, 40, true, a) == generate_example(parity, 0, 40, true, b));
  }
}

TEST_CASE("labels are balanced") {
  const Language& parity = find_language("parity");
  Rng rng(77);
  const int n = 10000;
  int positives = 0;
  for (int i = 0; i < n; ++i) positives += generate_example(parity, 0, 40, false, rng).label;
  const double sigma = std::sqrt(0.25 / n);
  CHECK(std::abs(positives / double(n) - 0.5) <= 3 * sigma);
}

TEST_CASE("suite shapes, disjointness and validity") {
  for (const char* name : {"parity", "dyck-2-3", "majority", "marked-copy", "compute-sqrt"}) {
    const Language& lang = find_language(name);
    const auto suite = generate_standard_suite(lang, 5, small_suite());
    REQUIRE(suite.size() == 6);
    std::unordered_set<std::string> seen;
    for (int r = 0; r < 3; ++r) {
      for (const auto& ex : suite[r].examples) seen.insert(lang.alphabet().render(ex.text));
    }
    for (const auto& ex : suite[3].examples) CHECK(seen.count(lang.alphabet().render(ex.text)) == 0);
    for (const auto& ex : suite[5].examples) CHECK_FALSE(ex.label);
    for (std::size_t r = 0; r < suite.size(); ++r) {
      const auto& split = suite[r];
      CHECK(split.role == kAllRoles[r]);
      CHECK(static_cast<int>(split.examples.size()) == small_suite().shapes[r].count);
      for (const auto& ex : split.examples) {
        CHECK(static_cast<int>(ex.text.size()) <= split.n_max);
        CHECK(ex.next.has_value() == ex.label);
      }
      CHECK(validate_split(split).empty());
    }
  }
}

TEST_CASE("split seeds are independent of other splits") {
  const Language& lang = find_language("even-pairs");
  auto options = small_suite();
  const auto a = generate_split(lang, SplitRole::kValLong, options.shapes[2], 9, options);
  options.shapes[0].count = 7;
  const auto suite = generate_standard_suite(lang, 9, options);
  CHECK(suite[2] == a);
  CHECK(split_seed(9, SplitRole::kTrain) != split_seed(9, SplitRole::kValShort));
}

TEST_CASE("write and read round trip") {
  const Language& lang = find_language("stack-manipulation");
  const auto split = generate_split(lang, SplitRole::kTrain, SplitShape{50, 0, 40}, 1, SuiteOptions{});
  const std::string text = to_text(split);
  std::istringstream in(text);
  const auto back = read_split(in);
  CHECK(back == split);
  CHECK(to_text(back) == text);
  CHECK(split_file_name(split) == "stack-manipulation.train.jsonl");
  CHECK(text.rfind("{\"format\":\"langgen-split\",\"version\":1,", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "langgen-test-roundtrip";
  std::filesystem::create_directories(dir);
  write_split(split, dir / split_file_name(split));
  CHECK(read_split(dir / split_file_name(split)) == split);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_split(dir / "missing.jsonl"), IoError);
}

TEST_CASE("parse and integrity errors") {
  const Language& lang = find_language("parity");
  auto split = generate_split(lang, SplitRole::kValShort, SplitShape{10, 0, 40}, 2, SuiteOptions{});
  std::string text = to_text(split);

  SUBCASE("missing label") {
    const auto pos = text.find(",\"label\":");
    REQUIRE(pos != std::string::npos);
    const auto end = text.find_first_of(",}", pos + 1);
    text.erase(pos, end - pos);
    std::istringstream in(text);
    try {
      read_split(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("label") != std::string::npos);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("truncated file") {
    text.erase(text.rfind('\n', text.size() - 2) + 1);
    std::istringstream in(text);
    CHECK_THROWS_AS(read_split(in), IntegrityError);
  }
  SUBCASE("not json") {
    std::istringstream in("hello\n");
    CHECK_THROWS_AS(read_split(in), ParseError);
  }
}

TEST_CASE("validation reports flipped labels by line") {
  const Language& lang = find_language("parity");
  auto split = generate_split(lang, SplitRole::kValShort, SplitShape{10, 0, 40}, 3, SuiteOptions{});
  split.examples[4].label = !split.examples[4].label;
  split.examples[4].next.reset();
  const auto violations = validate_split(split);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].line == 6);

  auto long_one = generate_split(lang, SplitRole::kValShort, SplitShape{5, 0, 40}, 3, SuiteOptions{});
  long_one.n_max = 0;
  CHECK_FALSE(validate_split(long_one).empty());
}

TEST_CASE("unannotated splits carry no next sets") {
  SuiteOptions options;
  options.annotate = false;
  const auto split = generate_split(find_language("majority"), SplitRole::kTrain,
                                    SplitShape{30, 0, 40}, 4, options);
  for (const auto& ex : split.examples) CHECK_FALSE(ex.next.has_value());
  CHECK(validate_split(split).empty());
}
