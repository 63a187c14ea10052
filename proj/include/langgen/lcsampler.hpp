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
// Length-constrained sampling from a regular language. A trim DFA is lifted
// to a length-binned PDFA with uniform action probabilities, its backward
// weights are pushed onto the transitions, and strings of an exact length
// are then drawn right to left in bin index: at bin i the next transition is
// chosen among those that can still finish in exactly i-1 more symbols.

#ifndef LANGGEN_LCSAMPLER_HPP_
#define LANGGEN_LCSAMPLER_HPP_

#include <vector>

#include "langgen/automata.hpp"
#include "langgen/rng.hpp"
#include "langgen/semiring.hpp"
#include "langgen/symbols.hpp"

namespace langgen {

// Each of the k actions of a state (outgoing transitions, plus accepting if
// the state accepts) gets probability 1/k. Transition weights sit in bin 1,
// accept weights in bin 0. Throws UsageError for a non-trim DFA.
WeightedDfa<LogBinning> lift_weights(const PartialDfa& dfa, int n_max);

struct PushedArc {
  Symbol symbol;
  StateId target;
  std::vector<double> prob;  // per bin; 0 where the bin is unavailable
};

struct PushedState {
  std::vector<PushedArc> arcs;  // increasing symbol order
  // available[i] is false when no outgoing transition can finish in
  // exactly i-1 more symbols; bin 0 is never available.
  std::vector<bool> available;
};

struct PushedWeights {
  std::vector<PushedState> states;
  LogBinVector allsum;  // beta[start]; bin n is log P(|W| = n)
};

PushedWeights push_weights(const WeightedDfa<LogBinning>& lifted);

// { n in [n_min, n_max] : z_n > -inf }. Throws UsageError if n_max exceeds
// the order of z or the range is malformed.
std::vector<int> valid_lengths(const LogBinVector& z, int n_min, int n_max);

struct SampledString {
  Word word;
  std::vector<SymbolSet> next;  // |word| + 1 entries, one per prefix
};

// Everything needed to sample repeatedly from one DFA for lengths up to
// order(). Immutable after construction.
class SamplerTables {
 public:
  SamplerTables(const PartialDfa& dfa, int n_max);

  int order() const { return order_; }
  StateId start() const { return start_; }
  const PushedWeights& pushed() const { return pushed_; }
  const LogBinVector& allsum() const { return pushed_.allsum; }
  const std::vector<SymbolSet>& next_sets() const { return next_sets_; }
  std::vector<int> valid_lengths(int n_min, int n_max) const {
    return langgen::valid_lengths(pushed_.allsum, n_min, n_max);
  }
  bool is_valid_length(int n) const {
    return n >= 0 && n <= order_ && pushed_.allsum[n] != -kInf;
  }
  // Cumulative probabilities of state q's arcs at bin i; empty when the
  // bin is unavailable.
  std::span<const double> cumulative(StateId q, int bin) const;

 private:
  int order_;
  StateId start_;
  PushedWeights pushed_;
  std::vector<SymbolSet> next_sets_;
  // cumulative_[q][bin * k_q + j]
  std::vector<std::vector<double>> cumulative_;
};

// Draws a string of exactly n symbols from the lifted PDFA conditioned on
// length n. Throws UsageError if n is not a valid length.
SampledString sample_string(const SamplerTables& tables, int n, Rng& rng);

// Length uniform over the valid lengths in [n_min, n_max], then
// sample_string. Throws ConfigError if there are none.
SampledString sample_positive_regular(const SamplerTables& tables, int n_min,
                                      int n_max, Rng& rng);

}  // namespace langgen

#endif  // LANGGEN_LCSAMPLER_HPP_
