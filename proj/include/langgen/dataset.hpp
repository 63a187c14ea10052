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
// Labeled splits: generation, the standard six-split suite, and the
// line-delimited JSON file format.
//
// A split file starts with one header object
//   {"format":"langgen-split","version":1,"language":...,"role":...,
//    "min_length":...,"max_length":...,"seed":...,"count":...}
// followed by `count` example objects
//   {"text":"0 1 1","label":1,"next":[["0","1"],...,["</s>"]]}
// where text joins glyphs with single spaces and "next" is present only
// for annotated positives.

#ifndef LANGGEN_DATASET_HPP_
#define LANGGEN_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "langgen/language.hpp"
#include "langgen/perturb.hpp"
#include "langgen/rng.hpp"

namespace langgen {

inline constexpr int kSplitFormatVersion = 1;

enum class SplitRole { kTrain, kValShort, kValLong, kTestShort, kTestLong, kEditdistProbe };

inline constexpr std::array<SplitRole, 6> kAllRoles = {
    SplitRole::kTrain,     SplitRole::kValShort, SplitRole::kValLong,
    SplitRole::kTestShort, SplitRole::kTestLong, SplitRole::kEditdistProbe};

std::string_view role_name(SplitRole role);
// Throws ConfigError for an unknown name.
SplitRole parse_role(std::string_view name);

struct SplitShape {
  int count;
  int n_min;
  int n_max;
};

// train 10000 @ [0,40], val-short 1000 @ [0,40], val-long 1000 @ [0,80],
// test-short 1000 @ [0,40], test-long 5010 @ [0,500],
// editdist-probe 50 @ [0,500] (negatives only).
SplitShape standard_shape(SplitRole role);

struct LabeledExample {
  Word text;
  bool label = false;
  std::optional<std::vector<SymbolSet>> next;  // |text| + 1 entries

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

struct DatasetSplit {
  std::string language;
  SplitRole role = SplitRole::kTrain;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::vector<LabeledExample> examples;

  friend bool operator==(const DatasetSplit&, const DatasetSplit&) = default;
};

// Fair-coin label; positives come from the language's sampler (with next
// sets if `annotate`), negatives from sample_negative.
LabeledExample generate_example(const Language& language, int n_min, int n_max,
                                bool annotate, Rng& rng,
                                const NegativeOptions& negative = {});

struct SuiteOptions {
  bool annotate = true;
  std::array<SplitShape, 6> shapes = {
      standard_shape(SplitRole::kTrain),     standard_shape(SplitRole::kValShort),
      standard_shape(SplitRole::kValLong),   standard_shape(SplitRole::kTestShort),
      standard_shape(SplitRole::kTestLong),  standard_shape(SplitRole::kEditdistProbe)};
  // Redraws allowed per test-short example before giving up.
  int dedup_attempts = 1000;
  NegativeOptions negative;
};

// Seed of one split: derive_seed(master_seed, role_name(role)).
std::uint64_t split_seed(std::uint64_t master_seed, SplitRole role);

// Example i is drawn from Rng::stream(split_seed, i). Texts in `exclude`
// (rendered form) are redrawn from the same stream.
DatasetSplit generate_split(const Language& language, SplitRole role,
                            const SplitShape& shape, std::uint64_t master_seed,
                            const SuiteOptions& options,
                            const std::unordered_set<std::string>* exclude = nullptr);

// All six splits in kAllRoles order; test-short avoids every text of
// train, val-short and val-long.
std::vector<DatasetSplit> generate_standard_suite(const Language& language,
                                                  std::uint64_t master_seed,
                                                  const SuiteOptions& options = {});

// `<language>.<role>.jsonl`
std::string split_file_name(const DatasetSplit& split);

void write_split(const DatasetSplit& split, std::ostream& out);
// Throws IoError when the file cannot be written.
void write_split(const DatasetSplit& split, const std::filesystem::path& path);

// ParseError names the offending line and field; IntegrityError reports a
// record count that disagrees with the header; ConfigError an unknown
// language.
DatasetSplit read_split(std::istream& in);
DatasetSplit read_split(const std::filesystem::path& path);

struct Violation {
  int line;  // 1-based file line; the header is line 1
  std::string message;
};

// Re-derives labels and next sets and checks length bounds.
std::vector<Violation> validate_split(const DatasetSplit& split);

}  // namespace langgen

#endif  // LANGGEN_DATASET_HPP_
