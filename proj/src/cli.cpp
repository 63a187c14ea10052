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

#include "langgen/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "langgen/dataset.hpp"
#include "langgen/editdist.hpp"
#include "langgen/errors.hpp"
#include "langgen/language.hpp"

namespace langgen::cli {
namespace {

namespace fs = std::filesystem;

struct GenerateArgs {
  std::string language;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool no_annotate = false;
  std::vector<std::string> counts;
  std::vector<std::string> ranges;
  std::optional<int> min_len;
  std::optional<int> max_len;
};

struct EditdistArgs {
  std::string language;
  std::string input;
  std::string output;
};

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("expected ROLE=VALUE, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError("expected an integer, got '" + text + "'");
  }
  return value;
}

SuiteOptions suite_options(const GenerateArgs& args) {
  SuiteOptions options;
  options.annotate = !args.no_annotate;
  auto index_of = [](SplitRole role) {
    for (std::size_t i = 0; i < kAllRoles.size(); ++i) {
      if (kAllRoles[i] == role) return i;
    }
    return std::size_t{0};
  };
  for (auto& shape : options.shapes) {
    if (args.min_len) shape.n_min = *args.min_len;
    if (args.max_len) shape.n_max = *args.max_len;
  }
  for (const auto& text : args.ranges) {
    const auto [role, value] = split_assignment(text);
    const auto colon = value.find(':');
    if (colon == std::string::npos) throw ConfigError("expected ROLE=MIN:MAX, got '" + text + "'");
    auto& shape = options.shapes[index_of(parse_role(role))];
    shape.n_min = parse_int(value.substr(0, colon));
    shape.n_max = parse_int(value.substr(colon + 1));
  }
  for (const auto& text : args.counts) {
    const auto [role, value] = split_assignment(text);
    options.shapes[index_of(parse_role(role))].count = parse_int(value);
  }
  for (std::size_t i = 0; i < kAllRoles.size(); ++i) {
    const auto& shape = options.shapes[i];
    if (shape.n_min < 0 || shape.n_min > shape.n_max || shape.count < 0) {
      throw ConfigError(std::string(role_name(kAllRoles[i])) +
                        ": need 0 <= min <= max and a nonnegative count");
    }
  }
  return options;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  const Language& language = find_language(args.language);
  const SuiteOptions options = suite_options(args);
  const auto splits = generate_standard_suite(language, args.seed, options);

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) throw IoError("cannot create " + args.out_dir + ": " + ec.message());

  out << std::left << std::setw(16) << "split" << std::right << std::setw(8)
      << "count" << std::setw(10) << "positive" << std::setw(6) << "min"
      << std::setw(6) << "max" << "  file\n";
  for (const DatasetSplit& split : splits) {
    const fs::path path = fs::path(args.out_dir) / split_file_name(split);
    write_split(split, path);
    std::size_t positives = 0, lo = 0, hi = 0;
    for (std::size_t i = 0; i < split.examples.size(); ++i) {
      const std::size_t n = split.examples[i].text.size();
      positives += split.examples[i].label ? 1 : 0;
      lo = i == 0 ? n : std::min(lo, n);
      hi = std::max(hi, n);
    }
    const double fraction =
        split.examples.empty() ? 0.0
                               : static_cast<double>(positives) / split.examples.size();
    out << std::left << std::setw(16) << role_name(split.role) << std::right
        << std::setw(8) << split.examples.size() << std::setw(10) << std::fixed
        << std::setprecision(3) << fraction << std::setw(6) << lo << std::setw(6)
        << hi << "  " << path.string() << '\n';
  }
  return kExitOk;
}

// Accepts a split file (its texts are used) or one string per line.
std::vector<Word> read_inputs(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string first;
  const bool has_first = static_cast<bool>(std::getline(in, first));
  std::vector<Word> words;
  if (has_first && first.rfind("{", 0) == 0) {
    in.clear();
    in.seekg(0);
    for (auto& ex : read_split(in).examples) words.push_back(std::move(ex.text));
    return words;
  }
  if (!has_first) return words;
  std::string line = first;
  int line_no = 1;
  do {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      words.push_back(alphabet.parse(line));
    } catch (const UsageError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ++line_no;
  } while (std::getline(in, line));
  return words;
}

int cmd_editdist(const EditdistArgs& args, std::ostream& out) {
  const Language& language = find_language(args.language);
  const PartialDfa* dfa = language.dfa();
  if (dfa == nullptr) throw ConfigError("edit distance requires a regular language");
  const auto words = read_inputs(args.input, language.alphabet());

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output, std::ios::binary);
    if (!file) throw IoError("cannot open " + args.output + " for writing");
  }
  std::ostream& sink = args.output.empty() ? out : file;
  const Alphabet& alphabet = language.alphabet();
  for (const Word& w : words) {
    const EditDistanceResult r = edit_distance(*dfa, w);
    sink << (r.distance ? std::to_string(*r.distance) : std::string("inf")) << '\t'
         << (r.witness ? alphabet.render(*r.witness) : std::string()) << '\t'
         << alphabet.render(w) << '\n';
  }
  if (!args.output.empty() && !file) throw IoError("failed writing " + args.output);
  return kExitOk;
}

int cmd_validate(const std::vector<std::string>& paths, std::ostream& out) {
  constexpr int kShown = 20;
  int shown = 0;
  int total = 0;
  auto report = [&](const std::string& where, const std::string& message) {
    if (shown < kShown) {
      out << where << ": " << message << '\n';
      ++shown;
    }
    ++total;
  };
  for (const auto& path : paths) {
    DatasetSplit split;
    try {
      split = read_split(fs::path(path));
    } catch (const ParseError& e) {
      report(path, e.what());
      continue;
    } catch (const IntegrityError& e) {
      report(path, std::string("integrity error: ") + e.what());
      continue;
    }
    for (const Violation& v : validate_split(split)) {
      report(path + ":" + std::to_string(v.line), v.message);
    }
  }
  if (total == 0) {
    out << "ok: " << paths.size() << " file(s) valid\n";
    return kExitOk;
  }
  out << total << " violation(s)\n";
  return kExitInvalid;
}

std::string format_lengths(const std::vector<int>& lengths) {
  if (lengths.empty()) return "{}";
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < lengths.size();) {
    std::size_t j = i;
    while (j + 1 < lengths.size() && lengths[j + 1] == lengths[j] + 1) ++j;
    if (i > 0) s << ", ";
    s << lengths[i];
    if (j > i) s << ".." << lengths[j];
    i = j + 1;
  }
  s << '}';
  return s.str();
}

int cmd_stats(const std::string& name, std::ostream& out) {
  const Language& language = find_language(name);
  out << "language: " << language.name() << '\n';
  out << "class: " << class_label(language.language_class()) << '\n';
  out << "alphabet:";
  for (const auto& g : language.alphabet().glyphs()) out << ' ' << g;
  out << '\n';

  constexpr int kShortMax = 40;
  std::vector<int> lengths;
  if (const PartialDfa* dfa = language.dfa()) {
    out << "kind: regular\n";
    out << "states: " << dfa->num_states() << '\n';
    out << "transitions: " << dfa->num_transitions() << '\n';
    lengths = SamplerTables(*dfa, kShortMax).valid_lengths(0, kShortMax);
  } else {
    out << "kind: procedural\n";
    for (int n = 0; n <= kShortMax; ++n) {
      Rng rng(0);
      try {
        language.sample_positive(n, n, rng);
        lengths.push_back(n);
      } catch (const ConfigError&) {
      }
    }
  }
  out << "valid lengths in [0, " << kShortMax << "]: " << format_lengths(lengths) << '\n';
  if (const PartialDfa* dfa = language.dfa()) {
    for (int n_max : {80, 500}) {
      const auto start = std::chrono::steady_clock::now();
      const SamplerTables tables(*dfa, n_max);
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      out << "preprocessing n_max=" << n_max << ": " << std::fixed
          << std::setprecision(3) << elapsed.count() << " s\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal-language benchmark dataset generator"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write the six standard splits");
  generate->add_option("--language", gen.language, "Language name")->required();
  generate->add_option("--seed", gen.seed, "Master seed")->required();
  generate->add_option("--out", gen.out_dir, "Output directory")->required();
  generate->add_flag("--no-annotate", gen.no_annotate, "Omit next-symbol sets");
  generate->add_option("--count", gen.counts, "Override a split size: ROLE=N");
  generate->add_option("--range", gen.ranges, "Override a length range: ROLE=MIN:MAX");
  generate->add_option("--min-len", gen.min_len, "Minimum length for every split");
  generate->add_option("--max-len", gen.max_len, "Maximum length for every split");

  EditdistArgs ed;
  auto* editdist = app.add_subcommand("editdist", "Edit distance of strings to a regular language");
  editdist->add_option("--language", ed.language, "Regular language name")->required();
  editdist->add_option("--input", ed.input, "Split file or one string per line")->required();
  editdist->add_option("--output", ed.output, "Report path (default stdout)");

  std::vector<std::string> paths;
  auto* validate = app.add_subcommand("validate", "Re-check split files");
  validate->add_option("paths", paths, "Split files")->required();

  std::string stats_language;
  auto* stats = app.add_subcommand("stats", "Describe a language");
  stats->add_option("language", stats_language, "Language name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*editdist) return cmd_editdist(ed, out);
    if (*validate) return cmd_validate(paths, out);
    if (*stats) return cmd_stats(stats_language, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IntegrityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace langgen::cli
