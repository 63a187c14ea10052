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

#include "langgen/automata.hpp"

#include <charconv>
#include <cmath>
#include <deque>
#include <sstream>

namespace langgen {

PartialDfa::PartialDfa(Alphabet alphabet, int num_states, StateId start)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      table_(static_cast<std::size_t>(num_states) * alphabet_.size(), -1),
      accepting_(num_states, false) {
  if (num_states < 1) throw UsageError("a DFA needs at least one state");
  check_state(start);
}

void PartialDfa::check_state(StateId state) const {
  if (state < 0 || state >= num_states_) {
    throw UsageError("state id " + std::to_string(state) + " out of range");
  }
}

void PartialDfa::add_transition(StateId source, Symbol symbol, StateId target) {
  check_state(source);
  check_state(target);
  if (!alphabet_.contains(symbol)) {
    throw UsageError("transition symbol " + std::to_string(symbol) +
                     " not in alphabet");
  }
  StateId& slot = table_[index(source, symbol)];
  if (slot >= 0) {
    throw UsageError("state " + std::to_string(source) +
                     " already has a transition on symbol " +
                     std::to_string(symbol));
  }
  slot = target;
  ++num_transitions_;
}

void PartialDfa::set_accepting(StateId state, bool accepting) {
  check_state(state);
  accepting_[state] = accepting;
}

std::vector<DfaArc> PartialDfa::arcs(StateId state) const {
  check_state(state);
  std::vector<DfaArc> out;
  for (Symbol a = 0; a < alphabet_.size(); ++a) {
    const StateId t = table_[index(state, a)];
    if (t >= 0) out.push_back(DfaArc{a, t});
  }
  return out;
}

bool dfa_accepts(const PartialDfa& dfa, std::span<const Symbol> word) {
  dfa.alphabet().check(word);
  StateId q = dfa.start();
  for (Symbol a : word) {
    const auto next = dfa.next(q, a);
    if (!next) return false;
    q = *next;
  }
  return dfa.is_accepting(q);
}

TrimReport check_trim(const PartialDfa& dfa) {
  const int n = dfa.num_states();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId q = 0; q < n; ++q) {
    for (const DfaArc& arc : dfa.arcs(q)) reverse[arc.target].push_back(q);
  }

  std::vector<bool> reachable(n, false);
  std::deque<StateId> queue{dfa.start()};
  reachable[dfa.start()] = true;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (const DfaArc& arc : dfa.arcs(q)) {
      if (!reachable[arc.target]) {
        reachable[arc.target] = true;
        queue.push_back(arc.target);
      }
    }
  }

  std::vector<bool> coreachable(n, false);
  for (StateId q = 0; q < n; ++q) {
    if (dfa.is_accepting(q)) {
      coreachable[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (StateId p : reverse[q]) {
      if (!coreachable[p]) {
        coreachable[p] = true;
        queue.push_back(p);
      }
    }
  }

  for (StateId q = 0; q < n; ++q) {
    if (!reachable[q] || !coreachable[q]) return TrimReport{false, q};
  }
  return TrimReport{};
}

std::vector<SymbolSet> compute_next_sets(const PartialDfa& dfa) {
  const TrimReport report = check_trim(dfa);
  if (!report.trim) {
    throw UsageError("next-symbol sets require a trim DFA; state " +
                     std::to_string(*report.offending_state) +
                     " is useless");
  }
  std::vector<SymbolSet> out(dfa.num_states());
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (const DfaArc& arc : dfa.arcs(q)) out[q].insert(arc.symbol);
    if (dfa.is_accepting(q)) out[q].insert(kEos);
  }
  return out;
}

bool is_locally_normalized(const WeightedDfa<RealSemiring>& pdfa,
                           double tolerance) {
  for (StateId q = 0; q < pdfa.num_states(); ++q) {
    double total = pdfa.accept(q);
    for (const auto& arc : pdfa.arcs(q)) total += arc.weight;
    if (std::abs(total - 1.0) > tolerance) return false;
  }
  return true;
}

std::string write_dfa_text(const PartialDfa& dfa) {
  std::ostringstream out;
  out << dfa.num_states() << ' ' << dfa.alphabet().size() << ' '
      << dfa.start() << '\n';
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (const DfaArc& arc : dfa.arcs(q)) {
      out << q << ' ' << arc.symbol << ' ' << arc.target << '\n';
    }
  }
  bool first = true;
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    if (!dfa.is_accepting(q)) continue;
    if (!first) out << ' ';
    out << q;
    first = false;
  }
  out << '\n';
  return out.str();
}

namespace {

std::vector<int> parse_ints(std::string_view line, int line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + pos) {
      throw ParseError("DFA text line " + std::to_string(line_no) +
                       ": expected a decimal integer");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

PartialDfa read_dfa_impl(std::string_view text, const Alphabet* alphabet) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) {
    throw ParseError("DFA text needs a header line and an accepting line");
  }
  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 3) {
    throw ParseError("DFA text line 1: expected 'states alphabet start'");
  }
  const int alphabet_size = header[1];
  Alphabet sigma;
  if (alphabet != nullptr) {
    if (alphabet->size() != alphabet_size) {
      throw ParseError("DFA text alphabet size does not match the given alphabet");
    }
    sigma = *alphabet;
  } else {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize) {
      throw ParseError("DFA text alphabet size out of range");
    }
    std::vector<std::string> glyphs;
    for (int i = 0; i < alphabet_size; ++i) glyphs.push_back(std::to_string(i));
    sigma = Alphabet(std::move(glyphs));
  }
  try {
    PartialDfa dfa(std::move(sigma), header[0], header[2]);
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
      const auto t = parse_ints(lines[i], static_cast<int>(i) + 1);
      if (t.size() != 3) {
        throw ParseError("DFA text line " + std::to_string(i + 1) +
                         ": expected 'src sym dst'");
      }
      dfa.add_transition(t[0], t[1], t[2]);
    }
    for (int q : parse_ints(lines.back(), static_cast<int>(lines.size()))) {
      dfa.set_accepting(q);
    }
    return dfa;
  } catch (const UsageError& e) {
    throw ParseError(std::string("invalid DFA text: ") + e.what());
  }
}

}  // namespace

PartialDfa read_dfa_text(std::string_view text) {
  return read_dfa_impl(text, nullptr);
}

PartialDfa read_dfa_text(std::string_view text, const Alphabet& alphabet) {
  return read_dfa_impl(text, &alphabet);
}

}  // namespace langgen
