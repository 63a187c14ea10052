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
// Negative sampling by rejection: propose either a uniformly random string
// or a randomly edited positive string, and keep the first non-member.

#ifndef LANGGEN_PERTURB_HPP_
#define LANGGEN_PERTURB_HPP_

#include <cstdint>
#include <vector>

#include "langgen/language.hpp"
#include "langgen/rng.hpp"
#include "langgen/symbols.hpp"

namespace langgen {

enum class EditKind { kInsert, kReplace, kDelete };

struct Edit {
  EditKind kind;
  std::size_t position;
  Symbol symbol = 0;  // unused for kDelete
};

// K >= 1 with P(K = k) = 2^-k.
int sample_edit_count(Rng& rng);

// Applies `count` random edits in sequence. Each edit's kind is uniform over
// the kinds that are legal for the current string: insertion needs
// |w| < n_max, deletion needs |w| > n_min, replacement needs a nonempty
// string and at least two symbols. Throws GenerationError when no kind is
// legal. Applied edits are appended to `log` when given.
Word apply_edits(Word w, int count, const Alphabet& alphabet, int n_min,
                 int n_max, Rng& rng, std::vector<Edit>* log = nullptr);

struct NegativeOptions {
  int max_attempts = 10000;
};

// Throws GenerationError("complement too small") once max_attempts
// proposals were all members.
Word sample_negative(const Language& language, int n_min, int n_max, Rng& rng,
                     const NegativeOptions& options = {});

}  // namespace langgen

#endif  // LANGGEN_PERTURB_HPP_
