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

#include "langgen/lcsampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "langgen/errors.hpp"
#include "langgen/lehmann.hpp"

namespace langgen {

WeightedDfa<LogBinning> lift_weights(const PartialDfa& dfa, int n_max) {
  const TrimReport report = check_trim(dfa);
  if (!report.trim) {
    throw UsageError("cannot lift a non-trim DFA; state " +
                     std::to_string(*report.offending_state) + " is useless");
  }
  const LogBinning s(n_max);
  WeightedDfa<LogBinning> lifted(s, dfa.alphabet(), dfa.num_states(),
                                 dfa.start());
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    const auto arcs = dfa.arcs(q);
    const int actions =
        static_cast<int>(arcs.size()) + (dfa.is_accepting(q) ? 1 : 0);
    const double log_p = -std::log(static_cast<double>(actions));
    for (const DfaArc& arc : arcs) {
      lifted.add_arc(q, arc.symbol, arc.target, s.delta(1, log_p));
    }
    if (dfa.is_accepting(q)) lifted.set_accept(q, s.delta(0, log_p));
  }
  return lifted;
}

PushedWeights push_weights(const WeightedDfa<LogBinning>& lifted) {
  const LogBinning& s = lifted.semiring();
  const int order = s.order();
  const auto beta = backward(lifted);

  PushedWeights out;
  out.allsum = beta[lifted.start()];
  out.states.resize(lifted.num_states());
  for (StateId q = 0; q < lifted.num_states(); ++q) {
    PushedState& state = out.states[q];
    std::vector<LogBinVector> logits;
    for (const auto& arc : lifted.arcs(q)) {
      logits.push_back(s.mul(arc.weight, beta[arc.target]));
      state.arcs.push_back(
          PushedArc{arc.symbol, arc.target, std::vector<double>(order + 1, 0.0)});
    }
    state.available.assign(order + 1, false);
    for (int i = 1; i <= order; ++i) {
      double peak = -kInf;
      for (const auto& t : logits) peak = std::max(peak, t[i]);
      if (peak == -kInf) continue;
      double total = 0.0;
      for (std::size_t j = 0; j < logits.size(); ++j) {
        const double p = std::exp(logits[j][i] - peak);
        state.arcs[j].prob[i] = p;
        total += p;
      }
      for (auto& arc : state.arcs) arc.prob[i] /= total;
      state.available[i] = true;
    }
  }
  return out;
}

std::vector<int> valid_lengths(const LogBinVector& z, int n_min, int n_max) {
  if (n_min < 0 || n_min > n_max) {
    throw UsageError("length range [" + std::to_string(n_min) + ", " +
                     std::to_string(n_max) + "] is malformed");
  }
  if (n_max > z.order()) {
    throw UsageError("n_max " + std::to_string(n_max) +
                     " exceeds the allsum order " + std::to_string(z.order()));
  }
  std::vector<int> out;
  for (int n = n_min; n <= n_max; ++n) {
    if (z[n] != -kInf) out.push_back(n);
  }
  return out;
}

SamplerTables::SamplerTables(const PartialDfa& dfa, int n_max)
    : order_(n_max),
      start_(dfa.start()),
      pushed_(push_weights(lift_weights(dfa, n_max))),
      next_sets_(compute_next_sets(dfa)),
      cumulative_(dfa.num_states()) {
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    const PushedState& state = pushed_.states[q];
    const std::size_t k = state.arcs.size();
    auto& cum = cumulative_[q];
    cum.assign((order_ + 1) * k, 0.0);
    for (int i = 1; i <= order_; ++i) {
      if (!state.available[i]) continue;
      double running = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        running += state.arcs[j].prob[i];
        cum[i * k + j] = running;
      }
    }
  }
}

std::span<const double> SamplerTables::cumulative(StateId q, int bin) const {
  const PushedState& state = pushed_.states.at(q);
  if (bin < 0 || bin > order_ || !state.available[bin]) return {};
  const std::size_t k = state.arcs.size();
  return std::span<const double>(cumulative_[q]).subspan(bin * k, k);
}

SampledString sample_string(const SamplerTables& tables, int n, Rng& rng) {
  if (!tables.is_valid_length(n)) {
    throw UsageError("length " + std::to_string(n) +
                     " is not a valid length for this language");
  }
  SampledString out;
  out.word.reserve(n);
  out.next.reserve(n + 1);
  StateId q = tables.start();
  out.next.push_back(tables.next_sets()[q]);
  for (int i = n; i >= 1; --i) {
    const auto cum = tables.cumulative(q, i);
    if (cum.empty()) throw GenerationError("sampler reached an unavailable bin");
    const double u = rng.uniform01() * cum.back();
    const auto pick = std::min<std::ptrdiff_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin(),
        static_cast<std::ptrdiff_t>(cum.size()) - 1);
    const PushedArc& arc = tables.pushed().states[q].arcs[pick];
    out.word.push_back(arc.symbol);
    q = arc.target;
    out.next.push_back(tables.next_sets()[q]);
  }
  return out;
}

SampledString sample_positive_regular(const SamplerTables& tables, int n_min,
                                      int n_max, Rng& rng) {
  const auto lengths = tables.valid_lengths(n_min, n_max);
  if (lengths.empty()) {
    throw ConfigError("language has no strings in range [" +
                      std::to_string(n_min) + ", " + std::to_string(n_max) +
                      "]");
  }
  const int n = lengths[rng.uniform_below(lengths.size())];
  return sample_string(tables, n, rng);
}

}  // namespace langgen
