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

#include "langgen/editdist.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "langgen/errors.hpp"
#include "langgen/lehmann.hpp"

namespace langgen {

Wfa build_chain_wfa(std::span<const Symbol> w, const Alphabet& alphabet) {
  alphabet.check(w);
  const int n = static_cast<int>(w.size());
  Wfa chain(alphabet, n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (Symbol a = 0; a < alphabet.size(); ++a) chain.add_arc(i, a, 1.0, i);
    if (i == n) break;
    for (Symbol a = 0; a < alphabet.size(); ++a) {
      chain.add_arc(i, a, a == w[i] ? 0.0 : 1.0, i + 1);
    }
    chain.add_arc(i, kEpsilon, 1.0, i + 1);
  }
  chain.set_accept(n, 0.0);
  return chain;
}

WeightedDfa<TropicalSemiring> lift_tropical(const PartialDfa& dfa) {
  WeightedDfa<TropicalSemiring> out(TropicalSemiring{}, dfa.alphabet(),
                                    dfa.num_states(), dfa.start());
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (const DfaArc& arc : dfa.arcs(q)) out.add_arc(q, arc.symbol, arc.target, 0.0);
    if (dfa.is_accepting(q)) out.set_accept(q, 0.0);
  }
  return out;
}

Wfa wfa_intersect(const WeightedDfa<TropicalSemiring>& a, const Wfa& b) {
  if (a.alphabet().size() != b.alphabet().size()) {
    throw UsageError("intersected automata must share an alphabet");
  }
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto id_of = [&](StateId qa, StateId qb) {
    const auto [it, inserted] = ids.try_emplace({qa, qb}, static_cast<StateId>(pairs.size()));
    if (inserted) pairs.emplace_back(qa, qb);
    return it->second;
  };

  id_of(a.start(), b.start());
  Wfa out(b.alphabet(), 0, 0);
  for (std::size_t next = 0; next < pairs.size(); ++next) {
    const auto [qa, qb] = pairs[next];
    const StateId source = static_cast<StateId>(next);
    while (out.num_states() <= source) out.add_state();
    for (int index : b.out(qb)) {
      const Wfa::Arc& arc = b.arcs()[index];
      if (arc.label == kEpsilon) {
        const StateId target = id_of(qa, arc.target);
        while (out.num_states() <= target) out.add_state();
        out.add_arc(source, kEpsilon, arc.weight, target);
        continue;
      }
      for (const auto& da : a.arcs(qa)) {
        if (da.symbol != arc.label) continue;
        const StateId target = id_of(da.target, arc.target);
        while (out.num_states() <= target) out.add_state();
        out.add_arc(source, arc.label, da.weight + arc.weight, target);
      }
    }
    const double accept = a.accept(qa) + b.accept(qb);
    out.set_accept(source, accept);
  }
  return out;
}

namespace {

// Relaxes epsilon arcs until no cost improves.
void epsilon_closure(const Wfa& wfa, std::vector<double>& cost) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const Wfa::Arc& arc : wfa.arcs()) {
      if (arc.label != kEpsilon || cost[arc.source] == kInf) continue;
      const double c = cost[arc.source] + arc.weight;
      if (c < cost[arc.target]) {
        cost[arc.target] = c;
        changed = true;
      }
    }
  }
}

EditDistanceResult make_result(double cost, Word witness) {
  EditDistanceResult r;
  if (cost == kInf) return r;
  r.distance = static_cast<int>(std::lround(cost));
  r.witness = std::move(witness);
  return r;
}

}  // namespace

double stringsum(const Wfa& wfa, std::span<const Symbol> word) {
  std::vector<double> cost(wfa.num_states(), kInf);
  cost[wfa.start()] = 0.0;
  epsilon_closure(wfa, cost);
  for (Symbol a : word) {
    std::vector<double> next(wfa.num_states(), kInf);
    for (const Wfa::Arc& arc : wfa.arcs()) {
      if (arc.label != a || cost[arc.source] == kInf) continue;
      next[arc.target] = std::min(next[arc.target], cost[arc.source] + arc.weight);
    }
    cost = std::move(next);
    epsilon_closure(wfa, cost);
  }
  double best = kInf;
  for (StateId q = 0; q < wfa.num_states(); ++q) {
    best = std::min(best, cost[q] + wfa.accept(q));
  }
  return best;
}

EditDistanceResult shortest_allsum(const Wfa& wfa) {
  const TropicalSemiring s;
  const int n = wfa.num_states();
  SquareMatrix<double> adjacency(n, s.zero());
  for (const Wfa::Arc& arc : wfa.arcs()) {
    adjacency(arc.source, arc.target) =
        s.add(adjacency(arc.source, arc.target), arc.weight);
  }
  const SquareMatrix<double> closure = lehmann(s, std::move(adjacency));

  const StateId start = wfa.start();
  double best = kInf;
  StateId goal = -1;
  for (StateId r = 0; r < n; ++r) {
    const double c = s.mul(closure(start, r), wfa.accept(r));
    if (c < best) {
      best = c;
      goal = r;
    }
  }
  if (goal < 0) return {};

  // Follow arcs that stay on an optimal path to `goal`. Zero-cost arcs never
  // close a cycle in the automata built here, so the walk terminates.
  Word witness;
  StateId u = start;
  while (u != goal) {
    const Wfa::Arc* step = nullptr;
    for (int index : wfa.out(u)) {
      const Wfa::Arc& arc = wfa.arcs()[index];
      if (arc.weight + closure(arc.target, goal) == closure(u, goal)) {
        step = &arc;
        break;
      }
    }
    if (step == nullptr) throw IntegrityError("no optimal arc while tracing a witness");
    if (step->label != kEpsilon) witness.push_back(step->label);
    u = step->target;
  }
  return make_result(best, std::move(witness));
}

EditDistanceResult shortest_allsum_dijkstra(const Wfa& wfa) {
  const int n = wfa.num_states();
  std::vector<double> dist(n, kInf);
  std::vector<int> via(n, -1);  // arc index into the state
  using Entry = std::pair<double, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[wfa.start()] = 0.0;
  queue.emplace(0.0, wfa.start());
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (int index : wfa.out(u)) {
      const Wfa::Arc& arc = wfa.arcs()[index];
      if (arc.weight < 0.0) throw UsageError("Dijkstra needs nonnegative weights");
      const double c = d + arc.weight;
      if (c < dist[arc.target]) {
        dist[arc.target] = c;
        via[arc.target] = index;
        queue.emplace(c, arc.target);
      }
    }
  }
  double best = kInf;
  StateId goal = -1;
  for (StateId r = 0; r < n; ++r) {
    if (dist[r] + wfa.accept(r) < best) {
      best = dist[r] + wfa.accept(r);
      goal = r;
    }
  }
  if (goal < 0) return {};
  Word witness;
  for (StateId u = goal; u != wfa.start();) {
    const Wfa::Arc& arc = wfa.arcs()[via[u]];
    if (arc.label != kEpsilon) witness.push_back(arc.label);
    u = arc.source;
  }
  std::reverse(witness.begin(), witness.end());
  return make_result(best, std::move(witness));
}

EditDistanceResult edit_distance(const PartialDfa& dfa, std::span<const Symbol> w,
                                 AllsumMethod method) {
  const Wfa product =
      wfa_intersect(lift_tropical(dfa), build_chain_wfa(w, dfa.alphabet()));
  if (method == AllsumMethod::kAuto) {
    method = product.num_states() <= kFloydWarshallMaxStates
                 ? AllsumMethod::kFloydWarshall
                 : AllsumMethod::kDijkstra;
  }
  return method == AllsumMethod::kFloydWarshall ? shortest_allsum(product)
                                                : shortest_allsum_dijkstra(product);
}

}  // namespace langgen
