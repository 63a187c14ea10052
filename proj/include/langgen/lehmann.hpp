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
// Closed-semiring matrix closure and backward weights, generic over the
// semiring.

#ifndef LANGGEN_LEHMANN_HPP_
#define LANGGEN_LEHMANN_HPP_

#include <vector>

#include "langgen/automata.hpp"
#include "langgen/semiring.hpp"

namespace langgen {

// Dense row-major square matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix(int size, const T& fill)
      : size_(size), cells_(static_cast<std::size_t>(size) * size, fill) {}

  int size() const { return size_; }
  T& operator()(int i, int j) { return cells_[static_cast<std::size_t>(i) * size_ + j]; }
  const T& operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * size_ + j];
  }

 private:
  int size_;
  std::vector<T> cells_;
};

// Lehmann's algorithm. Returns M* = sum over all paths i -> j (the empty
// path included) of the product of edge weights. Updated in place: for each
// pivot k, rows i != k read row k before row k itself is rewritten, which
// gives the same result as keeping separate old and new matrices.
template <Semiring S>
SquareMatrix<typename S::value_type> lehmann(
    const S& s, SquareMatrix<typename S::value_type> m) {
  using V = typename S::value_type;
  const int n = m.size();
  std::vector<V> left(n);
  for (int k = 0; k < n; ++k) {
    const V a = s.star(m(k, k));
    for (int i = 0; i < n; ++i) left[i] = s.mul(m(i, k), a);
    for (int i = 0; i <= n; ++i) {
      const int row = i < n ? i : k;  // row k last
      if (i == k) continue;
      if (s.is_zero(left[row])) continue;
      for (int j = 0; j < n; ++j) {
        if (s.is_zero(m(k, j))) continue;
        m(row, j) = s.add(m(row, j), s.mul(left[row], m(k, j)));
      }
    }
  }
  for (int i = 0; i < n; ++i) m(i, i) = s.add(m(i, i), s.one());
  return m;
}

// beta[q] = sum over paths from q to any r of the path weight times the
// accept weight of r.
template <Semiring S>
std::vector<typename S::value_type> backward(const WeightedDfa<S>& wdfa) {
  using V = typename S::value_type;
  const S& s = wdfa.semiring();
  const int n = wdfa.num_states();
  SquareMatrix<V> adjacency(n, s.zero());
  for (StateId q = 0; q < n; ++q) {
    for (const auto& arc : wdfa.arcs(q)) {
      adjacency(q, arc.target) = s.add(adjacency(q, arc.target), arc.weight);
    }
  }
  const SquareMatrix<V> closure = lehmann(s, std::move(adjacency));
  std::vector<V> beta(n, s.zero());
  for (StateId q = 0; q < n; ++q) {
    for (StateId r = 0; r < n; ++r) {
      if (s.is_zero(wdfa.accept(r)) || s.is_zero(closure(q, r))) continue;
      beta[q] = s.add(beta[q], s.mul(closure(q, r), wdfa.accept(r)));
    }
  }
  return beta;
}

}  // namespace langgen

#endif  // LANGGEN_LEHMANN_HPP_
