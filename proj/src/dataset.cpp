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

#include "langgen/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "langgen/errors.hpp"

namespace langgen {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kFormatName = "langgen-split";

}  // namespace

std::string_view role_name(SplitRole role) {
  switch (role) {
    case SplitRole::kTrain:
      return "train";
    case SplitRole::kValShort:
      return "val-short";
    case SplitRole::kValLong:
      return "val-long";
    case SplitRole::kTestShort:
      return "test-short";
    case SplitRole::kTestLong:
      return "test-long";
    case SplitRole::kEditdistProbe:
      return "editdist-probe";
  }
  return "?";
}

SplitRole parse_role(std::string_view name) {
  for (SplitRole role : kAllRoles) {
    if (role_name(role) == name) return role;
  }
  throw ConfigError("unknown split role '" + std::string(name) + "'");
}

SplitShape standard_shape(SplitRole role) {
  switch (role) {
    case SplitRole::kTrain:
      return {10000, 0, 40};
    case SplitRole::kValShort:
      return {1000, 0, 40};
    case SplitRole::kValLong:
      return {1000, 0, 80};
    case SplitRole::kTestShort:
      return {1000, 0, 40};
    case SplitRole::kTestLong:
      return {5010, 0, 500};
    case SplitRole::kEditdistProbe:
      return {50, 0, 500};
  }
  return {0, 0, 0};
}

LabeledExample generate_example(const Language& language, int n_min, int n_max,
                                bool annotate, Rng& rng,
                                const NegativeOptions& negative) {
  LabeledExample ex;
  ex.label = rng.coin();
  if (ex.label) {
    ex.text = language.sample_positive(n_min, n_max, rng);
    if (annotate) ex.next = language.next_sets(ex.text);
  } else {
    ex.text = sample_negative(language, n_min, n_max, rng, negative);
  }
  return ex;
}

std::uint64_t split_seed(std::uint64_t master_seed, SplitRole role) {
  return derive_seed(master_seed, role_name(role));
}

DatasetSplit generate_split(const Language& language, SplitRole role,
                            const SplitShape& shape, std::uint64_t master_seed,
                            const SuiteOptions& options,
                            const std::unordered_set<std::string>* exclude) {
  if (shape.count < 0) throw ConfigError("split count must be nonnegative");
  DatasetSplit split;
  split.language = language.name();
  split.role = role;
  split.n_min = shape.n_min;
  split.n_max = shape.n_max;
  split.seed = split_seed(master_seed, role);
  split.examples.reserve(shape.count);
  const bool negatives_only = role == SplitRole::kEditdistProbe;
  for (int i = 0; i < shape.count; ++i) {
    Rng rng = Rng::stream(split.seed, static_cast<std::uint64_t>(i));
    for (int attempt = 0;; ++attempt) {
      if (attempt == options.dedup_attempts) {
        throw GenerationError(language.name() + " " + std::string(role_name(role)) +
                              ": could not draw an unseen example after " +
                              std::to_string(attempt) + " attempts");
      }
      LabeledExample ex;
      if (negatives_only) {
        ex.text = sample_negative(language, shape.n_min, shape.n_max, rng,
                                  options.negative);
      } else {
        ex = generate_example(language, shape.n_min, shape.n_max,
                              options.annotate, rng, options.negative);
      }
      if (exclude != nullptr &&
          exclude->contains(language.alphabet().render(ex.text))) {
        continue;
      }
      split.examples.push_back(std::move(ex));
      break;
    }
  }
  return split;
}

std::vector<DatasetSplit> generate_standard_suite(const Language& language,
                                                  std::uint64_t master_seed,
                                                  const SuiteOptions& options) {
  std::vector<DatasetSplit> splits;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < kAllRoles.size(); ++r) {
    const SplitRole role = kAllRoles[r];
    const bool dedup = role == SplitRole::kTestShort;
    splits.push_back(generate_split(language, role, options.shapes[r], master_seed,
                                    options, dedup ? &seen : nullptr));
    if (role == SplitRole::kTrain || role == SplitRole::kValShort ||
        role == SplitRole::kValLong) {
      for (const auto& ex : splits.back().examples) {
        seen.insert(language.alphabet().render(ex.text));
      }
    }
  }
  return splits;
}

std::string split_file_name(const DatasetSplit& split) {
  return split.language + "." + std::string(role_name(split.role)) + ".jsonl";
}

void write_split(const DatasetSplit& split, std::ostream& out) {
  const Language& language = find_language(split.language);
  const Alphabet& alphabet = language.alphabet();
  Json header;
  header["format"] = kFormatName;
  header["version"] = kSplitFormatVersion;
  header["language"] = split.language;
  header["role"] = role_name(split.role);
  header["min_length"] = split.n_min;
  header["max_length"] = split.n_max;
  header["seed"] = split.seed;
  header["count"] = split.examples.size();
  out << header.dump() << '\n';
  for (const LabeledExample& ex : split.examples) {
    Json record;
    record["text"] = alphabet.render(ex.text);
    record["label"] = ex.label ? 1 : 0;
    if (ex.next) {
      Json next = Json::array();
      for (SymbolSet s : *ex.next) next.push_back(alphabet.render_set(s));
      record["next"] = std::move(next);
    }
    out << record.dump() << '\n';
  }
}

void write_split(const DatasetSplit& split, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_split(split, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

const Json& field(const Json& object, const char* name, int line) {
  const auto it = object.find(name);
  if (it == object.end()) fail(line, std::string("missing field '") + name + "'");
  return *it;
}

template <class T>
T typed(const Json& object, const char* name, int line) {
  const Json& value = field(object, name, line);
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(line, std::string("field '") + name + "' has the wrong type");
  }
}

Json parse_line(const std::string& text, int line) {
  try {
    Json value = Json::parse(text);
    if (!value.is_object()) fail(line, "expected a JSON object");
    return value;
  } catch (const nlohmann::json::parse_error& e) {
    fail(line, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

DatasetSplit read_split(std::istream& in) {
  std::string text;
  if (!std::getline(in, text)) throw ParseError("line 1: missing header");
  const Json header = parse_line(text, 1);
  if (typed<std::string>(header, "format", 1) != kFormatName) {
    fail(1, "not a split file");
  }
  if (typed<int>(header, "version", 1) != kSplitFormatVersion) {
    fail(1, "unsupported format version");
  }
  DatasetSplit split;
  split.language = typed<std::string>(header, "language", 1);
  split.role = parse_role(typed<std::string>(header, "role", 1));
  split.n_min = typed<int>(header, "min_length", 1);
  split.n_max = typed<int>(header, "max_length", 1);
  split.seed = typed<std::uint64_t>(header, "seed", 1);
  const auto count = typed<std::int64_t>(header, "count", 1);
  const Alphabet& alphabet = find_language(split.language).alphabet();

  int line = 1;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) fail(line, "empty line");
    const Json record = parse_line(text, line);
    LabeledExample ex;
    try {
      ex.text = alphabet.parse(typed<std::string>(record, "text", line));
    } catch (const UsageError& e) {
      fail(line, std::string("field 'text': ") + e.what());
    }
    const int label = typed<int>(record, "label", line);
    if (label != 0 && label != 1) fail(line, "field 'label' must be 0 or 1");
    ex.label = label == 1;
    if (record.contains("next")) {
      const auto sets =
          typed<std::vector<std::vector<std::string>>>(record, "next", line);
      std::vector<SymbolSet> next;
      try {
        for (const auto& glyphs : sets) next.push_back(alphabet.parse_set(glyphs));
      } catch (const UsageError& e) {
        fail(line, std::string("field 'next': ") + e.what());
      }
      ex.next = std::move(next);
    }
    split.examples.push_back(std::move(ex));
  }
  if (static_cast<std::int64_t>(split.examples.size()) != count) {
    throw IntegrityError("header declares " + std::to_string(count) +
                         " examples but the file has " +
                         std::to_string(split.examples.size()));
  }
  return split;
}

DatasetSplit read_split(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_split(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<Violation> validate_split(const DatasetSplit& split) {
  const Language& language = find_language(split.language);
  std::vector<Violation> out;
  for (std::size_t i = 0; i < split.examples.size(); ++i) {
    const LabeledExample& ex = split.examples[i];
    const int line = static_cast<int>(i) + 2;
    const int n = static_cast<int>(ex.text.size());
    if (n < split.n_min || n > split.n_max) {
      out.push_back({line, "length " + std::to_string(n) + " outside [" +
                               std::to_string(split.n_min) + ", " +
                               std::to_string(split.n_max) + "]"});
    }
    const bool member = language.contains(ex.text);
    if (member != ex.label) {
      out.push_back({line, std::string("label ") + (ex.label ? "1" : "0") +
                               " but membership is " + (member ? "1" : "0")});
    }
    if (split.role == SplitRole::kEditdistProbe && ex.label) {
      out.push_back({line, "probe splits hold negatives only"});
    }
    if (!ex.next) continue;
    if (!ex.label) out.push_back({line, "next sets on a negative example"});
    if (ex.next->size() != ex.text.size() + 1) {
      out.push_back({line, "next has " + std::to_string(ex.next->size()) +
                               " entries, expected " + std::to_string(n + 1)});
      continue;
    }
    if (ex.next->back().has_eos() != ex.label) {
      out.push_back({line, "final next set disagrees with the label on EOS"});
    }
    const auto expected = language.next_sets(ex.text);
    for (std::size_t t = 0; t < expected.size(); ++t) {
      if (expected[t] != (*ex.next)[t]) {
        out.push_back({line, "next set at position " + std::to_string(t) +
                                 " is wrong"});
        break;
      }
    }
  }
  return out;
}

}  // namespace langgen
