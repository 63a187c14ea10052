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
// Binary Addition, Binary Multiplication and Compute Sqrt. Numbers are
// little-endian binary with trailing zeros allowed and at least one bit.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "languages/factories.hpp"

namespace langgen::detail {
namespace {

using boost::multiprecision::cpp_int;

constexpr Symbol kZero = 0, kOne = 1;

cpp_int decode(std::span<const Symbol> bits) {
  cpp_int value = 0;
  for (std::size_t i = bits.size(); i-- > 0;) {
    value <<= 1;
    if (bits[i] == kOne) value |= 1;
  }
  return value;
}

// Shortest encoding: "0" for zero, otherwise ends in 1.
Word encode(cpp_int value) {
  Word out;
  do {
    out.push_back(boost::multiprecision::bit_test(value, 0) ? kOne : kZero);
    value >>= 1;
  } while (value != 0);
  return out;
}

Word encode_padded(const cpp_int& value, std::int64_t width) {
  Word out = encode(value);
  if (value == 0) out.clear();
  out.resize(width, kZero);
  return out;
}

cpp_int pow2(std::int64_t k) { return cpp_int(1) << static_cast<unsigned>(k); }

cpp_int min_big(const cpp_int& a, const cpp_int& b) { return a < b ? a : b; }

// Uniform on [0, hi] by rejection over msb(hi)+1 random bits.
cpp_int uniform_big(const cpp_int& hi, Rng& rng) {
  if (hi <= 0) return 0;
  const unsigned bits = boost::multiprecision::msb(hi) + 1;
  for (;;) {
    cpp_int x = 0;
    unsigned filled = 0;
    while (filled < bits) {
      const unsigned take = std::min(64u, bits - filled);
      std::uint64_t chunk = rng.next_u64();
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      x |= cpp_int(chunk) << filled;
      filled += take;
    }
    if (x <= hi) return x;
  }
}

// Splits `total` into parts proportional to a Dirichlet(alpha) draw, rounded
// by largest remainder (ties to the lower index) so the parts sum to total.
std::vector<std::int64_t> dirichlet_split(std::int64_t total,
                                          std::span<const int> alpha, Rng& rng) {
  const std::size_t k = alpha.size();
  std::vector<double> g(k);
  for (std::size_t i = 0; i < k; ++i) g[i] = rng.gamma_integer(alpha[i]);
  double sum = std::accumulate(g.begin(), g.end(), 0.0);
  if (!(sum > 0.0)) {
    std::fill(g.begin(), g.end(), 1.0);
    sum = static_cast<double>(k);
  }
  std::vector<std::int64_t> parts(k);
  std::vector<double> remainder(k);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double quota = static_cast<double>(total) * g[i] / sum;
    parts[i] = static_cast<std::int64_t>(std::floor(quota));
    remainder[i] = quota - static_cast<double>(parts[i]);
    assigned += parts[i];
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t j = 0; assigned < total; j = (j + 1) % k, ++assigned) {
    ++parts[order[j]];
  }
  while (assigned > total) {  // rounding overshoot
    --*std::max_element(parts.begin(), parts.end());
    --assigned;
  }
  return parts;
}

// x OP y = z with z = f(x, y), or x = z with z = f(x) when there is no
// operator.
class ArithmeticLanguage : public Language {
 public:
  ArithmeticLanguage(std::string name, std::vector<std::string> glyphs,
                     std::optional<Symbol> op, Symbol equals)
      : Language(std::move(name), LanguageClass::kContextSensitive,
                 Alphabet(std::move(glyphs))),
        op_(op),
        equals_(equals) {}

 protected:
  virtual cpp_int result(const std::vector<cpp_int>& operands) const = 0;

  bool contains_impl(std::span<const Symbol> w) const override {
    return next_sets_impl(w).back().has_eos();
  }

  Word assemble(const std::vector<Word>& operands, const Word& z) const {
    Word w = operands[0];
    if (op_) {
      w.push_back(*op_);
      w.insert(w.end(), operands[1].begin(), operands[1].end());
    }
    w.push_back(equals_);
    w.insert(w.end(), z.begin(), z.end());
    return w;
  }

  // Operand phases allow {0,1} before the first bit and {0,1,separator}
  // after one; the result must spell the shortest encoding of z followed by
  // any number of zeros.
  std::vector<SymbolSet> next_sets_impl(std::span<const Symbol> w) const override {
    const std::size_t num_operands = op_ ? 2 : 1;
    std::vector<SymbolSet> out;
    std::vector<cpp_int> operands;
    std::size_t operand_start = 0;
    Word expected;
    std::size_t result_start = 0;
    bool in_result = false;
    bool dead = false;
    for (std::size_t t = 0;; ++t) {
      SymbolSet s;
      if (!dead && !in_result) {
        s = {kZero, kOne};
        if (t > operand_start) {
          s.insert(operands.size() + 1 < num_operands ? *op_ : equals_);
        }
      } else if (!dead) {
        const std::size_t k = t - result_start;
        if (k < expected.size()) {
          s.insert(expected[k]);
        } else {
          s = {kZero, kEos};
        }
      }
      out.push_back(s);
      if (t == w.size()) break;

      const Symbol a = w[t];
      if (dead || !s.contains(a)) {
        dead = true;
        continue;
      }
      if (!in_result && (a == equals_ || (op_ && a == *op_))) {
        operands.push_back(decode(w.subspan(operand_start, t - operand_start)));
        operand_start = t + 1;
        if (a == equals_) {
          in_result = true;
          result_start = t + 1;
          expected = encode(result(operands));
        }
      }
    }
    return out;
  }

  std::optional<Symbol> op_;
  Symbol equals_;
};

class BinaryAddition final : public ArithmeticLanguage {
 public:
  BinaryAddition()
      : ArithmeticLanguage("binary-addition", {"0", "1", "+", "="}, 2, 3) {}

 protected:
  cpp_int result(const std::vector<cpp_int>& v) const override { return v[0] + v[1]; }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto n = draw_in_range(std::max(5, n_min), n_max, rng, name(), n_min, n_max);
    static constexpr int kAlpha[] = {1, 1, 1};
    const auto parts = dirichlet_split(n - 5, kAlpha, rng);
    std::int64_t nx = parts[0] + 1, ny = parts[1] + 1;
    const std::int64_t nz = parts[2] + 1;
    if (nx > ny) std::swap(nx, ny);
    const cpp_int x = uniform_big(min_big(pow2(nx) - 1, pow2(nz) - 1), rng);
    const cpp_int y = uniform_big(min_big(pow2(ny) - 1, pow2(nz) - 1 - x), rng);
    std::vector<Word> operands{encode_padded(x, nx), encode_padded(y, ny)};
    if (rng.coin()) std::swap(operands[0], operands[1]);
    return assemble(operands, encode_padded(x + y, nz));
  }
};

class BinaryMultiplication final : public ArithmeticLanguage {
 public:
  BinaryMultiplication()
      : ArithmeticLanguage("binary-multiplication", {"0", "1", "×", "="}, 2, 3) {}

 protected:
  cpp_int result(const std::vector<cpp_int>& v) const override { return v[0] * v[1]; }

  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto n = draw_in_range(std::max(5, n_min), n_max, rng, name(), n_min, n_max);
    static constexpr int kAlpha[] = {1, 1, 2};
    const auto parts = dirichlet_split(n - 5, kAlpha, rng);
    std::int64_t nx = parts[0] + 1, ny = parts[1] + 1;
    const std::int64_t nz = parts[2] + 1;
    if (nx > ny) std::swap(nx, ny);
    const cpp_int x = uniform_big(pow2(nx) - 1, rng);
    const cpp_int y_max =
        x > 0 ? min_big(pow2(ny) - 1, (pow2(nz) - 1) / x) : cpp_int(pow2(ny) - 1);
    const cpp_int y = uniform_big(y_max, rng);
    std::vector<Word> operands{encode_padded(x, nx), encode_padded(y, ny)};
    if (rng.coin()) std::swap(operands[0], operands[1]);
    return assemble(operands, encode_padded(x * y, nz));
  }
};

class ComputeSqrt final : public ArithmeticLanguage {
 public:
  ComputeSqrt() : ArithmeticLanguage("compute-sqrt", {"0", "1", "="}, std::nullopt, 2) {}

 protected:
  cpp_int result(const std::vector<cpp_int>& v) const override {
    return boost::multiprecision::sqrt(v[0]);
  }

  // |u_x| + |u_z| = n - 1, so the Dirichlet part sizes total n - 3.
  Word sample_impl(int n_min, int n_max, Rng& rng) const override {
    const auto n = draw_in_range(std::max(3, n_min), n_max, rng, name(), n_min, n_max);
    static constexpr int kAlpha[] = {2, 1};
    const auto parts = dirichlet_split(n - 3, kAlpha, rng);
    const std::int64_t nx = parts[0] + 1, nz = parts[1] + 1;
    const cpp_int x = uniform_big(min_big(pow2(nx) - 1, pow2(2 * nz) - 1), rng);
    const cpp_int z = boost::multiprecision::sqrt(x);
    return assemble({encode_padded(x, nx)}, encode_padded(z, nz));
  }
};

}  // namespace

std::unique_ptr<Language> make_binary_addition() {
  return std::make_unique<BinaryAddition>();
}
std::unique_ptr<Language> make_binary_multiplication() {
  return std::make_unique<BinaryMultiplication>();
}
std::unique_ptr<Language> make_compute_sqrt() { return std::make_unique<ComputeSqrt>(); }

}  // namespace langgen::detail
