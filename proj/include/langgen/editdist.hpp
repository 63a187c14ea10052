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
// Edit distance from a string to a regular language. The string becomes a
// chain automaton whose stringsum on u is the Levenshtein distance between
// u and the string; intersecting it with the zero-weight lift of the DFA
// and taking the tropical allsum gives the minimum over all members.

#ifndef LANGGEN_EDITDIST_HPP_
#define LANGGEN_EDITDIST_HPP_

#include <optional>
#include <span>

#include "langgen/automata.hpp"
#include "langgen/semiring.hpp"
#include "langgen/symbols.hpp"

namespace langgen {

struct EditDistanceResult {
  std::optional<int> distance;  // nullopt means infinite
  std::optional<Word> witness;  // a member at that distance
};

// |w|+1 states in a chain, the last one accepting with weight 0. Arcs:
// match (cost 0) and substitutions (cost 1) from i to i+1, an epsilon arc
// from i to i+1 for deleting w_i (cost 1), and insertion self-loops on every
// state (cost 1).
Wfa build_chain_wfa(std::span<const Symbol> w, const Alphabet& alphabet);

// All transitions and accept weights 0.
WeightedDfa<TropicalSemiring> lift_tropical(const PartialDfa& dfa);

// Product over the state pairs reachable from the start pair. An epsilon
// arc of b moves only b's component. Throws UsageError if the alphabets
// differ in size.
Wfa wfa_intersect(const WeightedDfa<TropicalSemiring>& a, const Wfa& b);

// Minimum path cost scanning `word` (epsilon arcs allowed anywhere), plus
// the accept weight; kInf if no accepting path.
double stringsum(const Wfa& wfa, std::span<const Symbol> word);

// min_r R[start][r] + accept(r) with R the Floyd-Warshall (Lehmann) closure
// of the tropical adjacency matrix. O(|Q|^3).
EditDistanceResult shortest_allsum(const Wfa& wfa);

// Same value by Dijkstra from the start state; requires nonnegative
// weights. O(|E| log |Q|).
EditDistanceResult shortest_allsum_dijkstra(const Wfa& wfa);

enum class AllsumMethod { kAuto, kFloydWarshall, kDijkstra };

// Product automata with at most this many states use Floyd-Warshall under
// AllsumMethod::kAuto.
inline constexpr int kFloydWarshallMaxStates = 300;

// d(L, w) for the language of a trim DFA.
EditDistanceResult edit_distance(const PartialDfa& dfa, std::span<const Symbol> w,
                                 AllsumMethod method = AllsumMethod::kAuto);

}  // namespace langgen

#endif  // LANGGEN_EDITDIST_HPP_
