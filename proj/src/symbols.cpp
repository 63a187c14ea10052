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

#include "langgen/symbols.hpp"

#include <cctype>

#include "langgen/errors.hpp"

namespace langgen {

std::vector<Symbol> SymbolSet::members() const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < 32; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty() || size() > kMaxAlphabetSize) {
    throw UsageError("alphabet must have between 1 and 31 symbols");
  }
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    if (glyphs_[i].empty() || glyphs_[i] == kEosGlyph) {
      throw UsageError("invalid glyph '" + glyphs_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (glyphs_[i] == glyphs_[j]) {
        throw UsageError("duplicate glyph '" + glyphs_[i] + "'");
      }
    }
  }
}

const std::string& Alphabet::glyph(Symbol s) const {
  if (!contains(s)) {
    throw UsageError("symbol id " + std::to_string(s) + " not in alphabet");
  }
  return glyphs_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view glyph) const {
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    if (glyphs_[i] == glyph) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

void Alphabet::check(std::span<const Symbol> word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!contains(word[i])) {
      throw UsageError("symbol id " + std::to_string(word[i]) +
                       " at position " + std::to_string(i) +
                       " is not in the alphabet");
    }
  }
}

std::string Alphabet::render(std::span<const Symbol> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += glyph(word[i]);
  }
  return out;
}

std::vector<std::string> Alphabet::render_set(SymbolSet set) const {
  std::vector<std::string> out;
  for (Symbol s : set.members()) {
    out.emplace_back(s == kEos ? std::string(kEosGlyph) : glyph(s));
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t best_len = 0;
    Symbol best = -1;
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
      const std::string& g = glyphs_[i];
      if (g.size() > best_len && text.substr(pos, g.size()) == g) {
        best_len = g.size();
        best = static_cast<Symbol>(i);
      }
    }
    if (best < 0) {
      throw UsageError("unrecognized symbol at byte " + std::to_string(pos) +
                       " of '" + std::string(text) + "'");
    }
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

SymbolSet Alphabet::parse_set(std::span<const std::string> glyphs) const {
  SymbolSet set;
  for (const std::string& g : glyphs) {
    if (g == kEosGlyph) {
      set.insert(kEos);
    } else if (auto s = find(g)) {
      set.insert(*s);
    } else {
      throw UsageError("unrecognized glyph '" + g + "'");
    }
  }
  return set;
}

}  // namespace langgen
