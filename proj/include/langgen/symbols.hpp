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

#ifndef LANGGEN_SYMBOLS_HPP_
#define LANGGEN_SYMBOLS_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langgen {

// Symbols are dense ids 0..|alphabet|-1. Multi-character tokens such as
// PUSH are single symbols.
using Symbol = std::int32_t;
using Word = std::vector<Symbol>;

// End-of-string marker. Never a member of an alphabet.
inline constexpr Symbol kEos = 31;
inline constexpr int kMaxAlphabetSize = 31;
inline constexpr std::string_view kEosGlyph = "</s>";

// Subset of an alphabet plus EOS, stored as a bit mask.
class SymbolSet {
 public:
  constexpr SymbolSet() = default;
  SymbolSet(std::initializer_list<Symbol> symbols) {
    for (Symbol s : symbols) insert(s);
  }

  static constexpr SymbolSet from_bits(std::uint32_t bits) {
    SymbolSet set;
    set.bits_ = bits;
    return set;
  }
  // {0, ..., size-1}
  static constexpr SymbolSet first_n(int size) {
    return from_bits(size >= 32 ? ~0u : ((1u << size) - 1u));
  }

  void insert(Symbol s) { bits_ |= 1u << s; }
  void erase(Symbol s) { bits_ &= ~(1u << s); }
  bool contains(Symbol s) const { return (bits_ >> s) & 1u; }
  bool has_eos() const { return contains(kEos); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }

  // Members in increasing id order, EOS last.
  std::vector<Symbol> members() const;

  SymbolSet& operator|=(SymbolSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend SymbolSet operator|(SymbolSet a, SymbolSet b) { return a |= b; }
  friend bool operator==(SymbolSet, SymbolSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Display glyphs for symbol ids.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> glyphs);

  int size() const { return static_cast<int>(glyphs_.size()); }
  const std::string& glyph(Symbol s) const;
  const std::vector<std::string>& glyphs() const { return glyphs_; }
  std::optional<Symbol> find(std::string_view glyph) const;
  bool contains(Symbol s) const { return s >= 0 && s < size(); }
  SymbolSet all() const { return SymbolSet::first_n(size()); }

  // Throws UsageError naming the first symbol outside the alphabet.
  void check(std::span<const Symbol> word) const;

  // Glyphs joined with single spaces. The empty word renders as "".
  std::string render(std::span<const Symbol> word) const;
  // Glyph list for a next-symbol set, EOS rendered as "</s>".
  std::vector<std::string> render_set(SymbolSet set) const;

  // Tokenizes text by greedy longest glyph match; whitespace separates
  // tokens and is otherwise ignored. Throws UsageError on unknown input.
  Word parse(std::string_view text) const;
  // Inverse of render_set.
  SymbolSet parse_set(std::span<const std::string> glyphs) const;

 private:
  std::vector<std::string> glyphs_;
};

}  // namespace langgen

#endif  // LANGGEN_SYMBOLS_HPP_
