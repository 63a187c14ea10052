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
// Hand-built DFAs for the regular languages. Each one is checked for
// trimness when built.

#include <array>
#include <string>

#include "langgen/errors.hpp"
#include "langgen/language.hpp"

namespace langgen {
namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

// Even Pairs: same first and last symbol, or fewer than two symbols.
// States: 0 empty, 1/2 first=0 with last 0/1, 3/4 first=1 with last 1/0.
PartialDfa even_pairs() {
  PartialDfa d(binary(), 5, 0);
  d.add_transition(0, 0, 1);
  d.add_transition(0, 1, 3);
  d.add_transition(1, 0, 1);
  d.add_transition(1, 1, 2);
  d.add_transition(2, 0, 1);
  d.add_transition(2, 1, 2);
  d.add_transition(3, 1, 3);
  d.add_transition(3, 0, 4);
  d.add_transition(4, 1, 3);
  d.add_transition(4, 0, 4);
  d.set_accepting(0);
  d.set_accepting(1);
  d.set_accepting(3);
  return d;
}

PartialDfa repeat_01() {
  PartialDfa d(binary(), 2, 0);
  d.add_transition(0, 0, 1);
  d.add_transition(1, 1, 0);
  d.set_accepting(0);
  return d;
}

// State = number of 1s mod 2.
PartialDfa parity() {
  PartialDfa d(binary(), 2, 0);
  for (StateId q = 0; q < 2; ++q) {
    d.add_transition(q, 0, q);
    d.add_transition(q, 1, 1 - q);
  }
  d.set_accepting(1);
  return d;
}

PartialDfa first() {
  PartialDfa d(binary(), 2, 0);
  d.add_transition(0, 1, 1);
  d.add_transition(1, 0, 1);
  d.add_transition(1, 1, 1);
  d.set_accepting(1);
  return d;
}

constexpr int kCycle = 5;

// States 0..4 are cycle positions; state 5 follows the matching digit.
PartialDfa cycle_navigation() {
  Alphabet sigma({"<", "=", ">", "0", "1", "2", "3", "4"});
  const Symbol left = 0, stay = 1, right = 2, digit0 = 3;
  const StateId done = kCycle;
  PartialDfa d(sigma, kCycle + 1, 0);
  for (StateId p = 0; p < kCycle; ++p) {
    d.add_transition(p, left, (p + kCycle - 1) % kCycle);
    d.add_transition(p, stay, p);
    d.add_transition(p, right, (p + 1) % kCycle);
    d.add_transition(p, digit0 + p, done);
  }
  d.set_accepting(done);
  return d;
}

// Left-to-right evaluation mod 5, all operators of equal precedence.
// States: start, value v, value v then operator o, value v then '=', accept.
PartialDfa modular_arithmetic() {
  Alphabet sigma({"0", "1", "2", "3", "4", "+", "-", "×", "="});
  constexpr Symbol kPlus = 5, kMinus = 6, kTimes = 7, kEquals = 8;
  constexpr int kOps = 3;
  const StateId start = 0;
  auto value = [](int v) { return 1 + v; };
  auto pending = [](int v, int op) { return 1 + kCycle + v * kOps + op; };
  auto equals = [](int v) { return 1 + kCycle + kCycle * kOps + v; };
  const StateId accept = 1 + kCycle + kCycle * kOps + kCycle;

  auto apply = [](int v, int op, int x) {
    switch (op) {
      case 0:
        return (v + x) % kCycle;
      case 1:
        return (v - x + kCycle) % kCycle;
      default:
        return (v * x) % kCycle;
    }
  };

  PartialDfa d(sigma, accept + 1, start);
  for (int x = 0; x < kCycle; ++x) d.add_transition(start, x, value(x));
  for (int v = 0; v < kCycle; ++v) {
    for (int op = 0; op < kOps; ++op) {
      const Symbol sym = op == 0 ? kPlus : op == 1 ? kMinus : kTimes;
      d.add_transition(value(v), sym, pending(v, op));
      for (int x = 0; x < kCycle; ++x) {
        d.add_transition(pending(v, op), x, value(apply(v, op, x)));
      }
    }
    d.add_transition(value(v), kEquals, equals(v));
    d.add_transition(equals(v), v, accept);
  }
  d.set_accepting(accept);
  return d;
}

// Bracket stacks of depth <= 3 over two types. A stack of depth k with
// contents b_1..b_k (bit 1 = square) has id (2^k - 1) + sum b_i 2^(i-1).
PartialDfa dyck_2_3() {
  constexpr int kDepth = 3;
  Alphabet sigma({"(", ")", "[", "]"});
  const Symbol open[2] = {0, 2};
  const Symbol close[2] = {1, 3};
  auto id = [](int depth, int bits) { return (1 << depth) - 1 + bits; };
  PartialDfa d(sigma, (1 << (kDepth + 1)) - 1, id(0, 0));
  for (int depth = 0; depth <= kDepth; ++depth) {
    for (int bits = 0; bits < (1 << depth); ++bits) {
      if (depth < kDepth) {
        for (int type = 0; type < 2; ++type) {
          d.add_transition(id(depth, bits), open[type],
                           id(depth + 1, bits | (type << depth)));
        }
      }
      if (depth > 0) {
        const int top = (bits >> (depth - 1)) & 1;
        d.add_transition(id(depth, bits), close[top],
                         id(depth - 1, bits & ((1 << (depth - 1)) - 1)));
      }
    }
  }
  d.set_accepting(id(0, 0));
  return d;
}

}  // namespace

PartialDfa build_regular_dfa(std::string_view name) {
  PartialDfa dfa = [&] {
    if (name == "even-pairs") return even_pairs();
    if (name == "repeat-01") return repeat_01();
    if (name == "parity") return parity();
    if (name == "cycle-navigation") return cycle_navigation();
    if (name == "modular-arithmetic") return modular_arithmetic();
    if (name == "dyck-2-3") return dyck_2_3();
    if (name == "first") return first();
    throw ConfigError("no DFA for language '" + std::string(name) + "'");
  }();
  const TrimReport report = check_trim(dfa);
  if (!report.trim) {
    throw IntegrityError("DFA for " + std::string(name) +
                         " is not trim at state " +
                         std::to_string(*report.offending_state));
  }
  return dfa;
}

}  // namespace langgen
