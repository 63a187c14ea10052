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

#ifndef LANGGEN_AUTOMATA_HPP_
#define LANGGEN_AUTOMATA_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langgen/errors.hpp"
#include "langgen/semiring.hpp"
#include "langgen/symbols.hpp"

namespace langgen {

using StateId = int;

struct DfaArc {
  Symbol symbol;
  StateId target;
  friend bool operator==(const DfaArc&, const DfaArc&) = default;
};

// Deterministic automaton whose transition function may be undefined for
// some (state, symbol) pairs.
class PartialDfa {
 public:
  PartialDfa(Alphabet alphabet, int num_states, StateId start = 0);

  // Throws UsageError if (source, symbol) already has a transition.
  void add_transition(StateId source, Symbol symbol, StateId target);
  void set_accepting(StateId state, bool accepting = true);

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  StateId start() const { return start_; }
  bool is_accepting(StateId state) const { return accepting_.at(state); }
  int num_transitions() const { return num_transitions_; }

  std::optional<StateId> next(StateId state, Symbol symbol) const {
    const StateId t = table_[index(state, symbol)];
    return t < 0 ? std::nullopt : std::optional<StateId>(t);
  }
  // Outgoing transitions of `state` in increasing symbol order.
  std::vector<DfaArc> arcs(StateId state) const;

 private:
  std::size_t index(StateId state, Symbol symbol) const {
    return static_cast<std::size_t>(state) * alphabet_.size() + symbol;
  }
  void check_state(StateId state) const;

  Alphabet alphabet_;
  int num_states_;
  StateId start_;
  int num_transitions_ = 0;
  std::vector<StateId> table_;
  std::vector<bool> accepting_;
};

// Follows the unique scanning path. Throws UsageError for symbols outside
// the alphabet; a missing transition is an ordinary rejection.
bool dfa_accepts(const PartialDfa& dfa, std::span<const Symbol> word);

struct TrimReport {
  bool trim = true;
  std::optional<StateId> offending_state;  // set when !trim
};
TrimReport check_trim(const PartialDfa& dfa);

// NEXT[q]: outgoing labels of q, plus EOS if q accepts. Requires a trim DFA
// (UsageError otherwise), since only then is every label completable.
std::vector<SymbolSet> compute_next_sets(const PartialDfa& dfa);

// Plain-text interchange format:
//   <num_states> <alphabet_size> <start>
//   <source> <symbol> <target>      (one line per transition)
//   <accepting states ...>          (final line, possibly empty)
std::string write_dfa_text(const PartialDfa& dfa);
// Glyphs default to the decimal symbol ids.
PartialDfa read_dfa_text(std::string_view text);
PartialDfa read_dfa_text(std::string_view text, const Alphabet& alphabet);

// Deterministic automaton with semiring weights on transitions and an
// accept weight per state.
template <Semiring S>
class WeightedDfa {
 public:
  using Weight = typename S::value_type;
  struct Arc {
    Symbol symbol;
    StateId target;
    Weight weight;
  };

  WeightedDfa(S semiring, Alphabet alphabet, int num_states, StateId start)
      : semiring_(std::move(semiring)),
        alphabet_(std::move(alphabet)),
        start_(start),
        arcs_(num_states),
        accept_(num_states, semiring_.zero()) {}

  // Arcs are kept sorted by symbol; a second arc for a symbol is an error.
  void add_arc(StateId source, Symbol symbol, StateId target, Weight weight) {
    if (!alphabet_.contains(symbol)) throw UsageError("arc symbol not in alphabet");
    auto& list = arcs_.at(source);
    auto it = list.begin();
    while (it != list.end() && it->symbol < symbol) ++it;
    if (it != list.end() && it->symbol == symbol) {
      throw UsageError("weighted DFA already has an arc for this symbol");
    }
    list.insert(it, Arc{symbol, target, std::move(weight)});
  }
  void set_accept(StateId state, Weight weight) { accept_.at(state) = std::move(weight); }

  const S& semiring() const { return semiring_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(arcs_.size()); }
  StateId start() const { return start_; }
  const std::vector<Arc>& arcs(StateId state) const { return arcs_.at(state); }
  const Weight& accept(StateId state) const { return accept_.at(state); }
  int num_arcs() const {
    int n = 0;
    for (const auto& list : arcs_) n += static_cast<int>(list.size());
    return n;
  }

  // Weight of the unique path scanning `word`, times the final accept weight.
  Weight stringsum(std::span<const Symbol> word) const {
    Weight w = semiring_.one();
    StateId q = start_;
    for (Symbol a : word) {
      const Arc* found = nullptr;
      for (const Arc& arc : arcs_[q]) {
        if (arc.symbol == a) found = &arc;
      }
      if (found == nullptr) return semiring_.zero();
      w = semiring_.mul(w, found->weight);
      q = found->target;
    }
    return semiring_.mul(w, accept_[q]);
  }

 private:
  S semiring_;
  Alphabet alphabet_;
  StateId start_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Weight> accept_;
};

// True iff every state's outgoing probabilities plus its accept probability
// sum to 1 within `tolerance`.
bool is_locally_normalized(const WeightedDfa<RealSemiring>& pdfa,
                           double tolerance = 1e-9);

// Label used for epsilon arcs in a Wfa.
inline constexpr Symbol kEpsilon = -1;

// Nondeterministic automaton over the tropical semiring; epsilon arcs and
// parallel arcs are allowed.
class Wfa {
 public:
  struct Arc {
    StateId source;
    Symbol label;  // kEpsilon or an alphabet symbol
    double weight;
    StateId target;
  };

  Wfa(Alphabet alphabet, int num_states, StateId start)
      : alphabet_(std::move(alphabet)),
        start_(start),
        out_(num_states),
        accept_(num_states, TropicalSemiring{}.zero()) {}

  StateId add_state() {
    out_.emplace_back();
    accept_.push_back(TropicalSemiring{}.zero());
    return num_states() - 1;
  }
  void add_arc(StateId source, Symbol label, double weight, StateId target) {
    if (label != kEpsilon && !alphabet_.contains(label)) {
      throw UsageError("arc label not in alphabet");
    }
    out_.at(source).push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back(Arc{source, label, weight, target});
  }
  void set_accept(StateId state, double weight) { accept_.at(state) = weight; }

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(out_.size()); }
  StateId start() const { return start_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  // Indices into arcs() leaving `state`.
  const std::vector<int>& out(StateId state) const { return out_.at(state); }
  double accept(StateId state) const { return accept_.at(state); }

 private:
  Alphabet alphabet_;
  StateId start_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<double> accept_;
};

}  // namespace langgen

#endif  // LANGGEN_AUTOMATA_HPP_
