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

#include "doctest.h"
#include "langgen/automata.hpp"
#include "langgen/language.hpp"
#include "langgen/lehmann.hpp"

using namespace langgen;

namespace {

const Alphabet kBinary({"0", "1"});

Word bits(std::string_view s) { return kBinary.parse(s); }

}  // namespace

TEST_CASE("partial DFA basics") {
  PartialDfa dfa(kBinary, 2, 0);
  dfa.add_transition(0, 1, 1);
  dfa.add_transition(1, 0, 1);
  dfa.set_accepting(1);
  CHECK(dfa.num_transitions() == 2);
  CHECK(dfa.next(0, 0) == std::nullopt);
  CHECK(dfa.next(0, 1) == 1);
  CHECK_THROWS_AS(dfa.add_transition(0, 1, 0), UsageError);
  CHECK(dfa_accepts(dfa, bits("100")));
  CHECK_FALSE(dfa_accepts(dfa, bits("0")));
  CHECK_FALSE(dfa_accepts(dfa, bits("")));
  const Word bad{5};
  CHECK_THROWS_AS(dfa_accepts(dfa, bad), UsageError);
}

TEST_CASE("shipped DFAs accept their example strings") {
  const auto parity = build_regular_dfa("parity");
  CHECK(dfa_accepts(parity, bits("11011001")));
  CHECK_FALSE(dfa_accepts(parity, bits("")));
  CHECK(dfa_accepts(build_regular_dfa("even-pairs"), bits("010110")));
}

TEST_CASE("check_trim") {
  PartialDfa single(kBinary, 1, 0);
  single.set_accepting(0);
  CHECK(check_trim(single).trim);

  PartialDfa unreachable(kBinary, 2, 0);
  unreachable.set_accepting(0);
  unreachable.set_accepting(1);
  const auto report = check_trim(unreachable);
  CHECK_FALSE(report.trim);
  CHECK(report.offending_state == 1);

  PartialDfa dead(kBinary, 2, 0);
  dead.set_accepting(0);
  dead.add_transition(0, 1, 1);
  CHECK_FALSE(check_trim(dead).trim);
  CHECK_THROWS_AS(compute_next_sets(dead), UsageError);

  for (int i = 0; i < 7; ++i) {
    const auto& name = language_names()[i];
    CAPTURE(name);
    CHECK(check_trim(build_regular_dfa(name)).trim);
  }
}

TEST_CASE("next sets of shipped DFAs") {
  const auto repeat = build_regular_dfa("repeat-01");
  const auto next = compute_next_sets(repeat);
  CHECK(next[repeat.start()] == SymbolSet{0, kEos});

  const auto parity = build_regular_dfa("parity");
  const auto pnext = compute_next_sets(parity);
  for (StateId q = 0; q < parity.num_states(); ++q) {
    SymbolSet expect{0, 1};
    if (parity.is_accepting(q)) expect.insert(kEos);
    CHECK(pnext[q] == expect);
  }

  const auto first = build_regular_dfa("first");
  CHECK(compute_next_sets(first)[first.start()] == SymbolSet{1});
}

TEST_CASE("DFA text format round trip") {
  for (int i = 0; i < 7; ++i) {
    const auto dfa = build_regular_dfa(language_names()[i]);
    const std::string text = write_dfa_text(dfa);
    const auto back = read_dfa_text(text, dfa.alphabet());
    CHECK(write_dfa_text(back) == text);
    CHECK(back.num_states() == dfa.num_states());
    CHECK(back.num_transitions() == dfa.num_transitions());
  }
  const auto parsed = read_dfa_text("2 2 0\n0 1 1\n1 1 0\n1\n");
  CHECK(parsed.alphabet().glyph(1) == "1");
  CHECK(dfa_accepts(parsed, Word{1, 1, 1}));
  CHECK_FALSE(dfa_accepts(parsed, Word{1, 1}));
  const auto no_accept = read_dfa_text("1 2 0\n\n");
  CHECK_FALSE(no_accept.is_accepting(0));
  CHECK_THROWS(read_dfa_text("2 2 0\n0 7 1\n1\n"));
  CHECK_THROWS(read_dfa_text("garbage"));
}

TEST_CASE("weighted DFA and local normalization") {
  WeightedDfa<RealSemiring> pdfa(RealSemiring{}, kBinary, 2, 0);
  pdfa.add_arc(0, 1, 1, 0.5);
  pdfa.add_arc(0, 0, 0, 0.25);
  pdfa.set_accept(0, 0.25);
  pdfa.set_accept(1, 1.0);
  CHECK(pdfa.arcs(0).front().symbol == 0);
  CHECK(is_locally_normalized(pdfa));
  CHECK(pdfa.stringsum(bits("01")) == doctest::Approx(0.125));
  CHECK(pdfa.stringsum(bits("10")) == 0.0);
  CHECK_THROWS_AS(pdfa.add_arc(0, 1, 0, 0.1), UsageError);
  pdfa.set_accept(1, 0.5);
  CHECK_FALSE(is_locally_normalized(pdfa));

  // beta = sum over k of 0.5^k * 0.5 = 1.
  WeightedDfa<RealSemiring> loop(RealSemiring{}, kBinary, 1, 0);
  loop.add_arc(0, 0, 0, 0.5);
  loop.set_accept(0, 0.5);
  CHECK(backward(loop)[0] == doctest::Approx(1.0));
}
