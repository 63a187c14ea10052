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

#include "langgen/perturb.hpp"

#include <string>

#include "langgen/errors.hpp"

namespace langgen {

int sample_edit_count(Rng& rng) {
  int k = 1;
  while (rng.coin()) ++k;
  return k;
}

Word apply_edits(Word w, int count, const Alphabet& alphabet, int n_min,
                 int n_max, Rng& rng, std::vector<Edit>* log) {
  const int sigma = alphabet.size();
  for (int e = 0; e < count; ++e) {
    const int n = static_cast<int>(w.size());
    EditKind legal[3];
    int num_legal = 0;
    if (n < n_max) legal[num_legal++] = EditKind::kInsert;
    if (n > 0 && sigma > 1) legal[num_legal++] = EditKind::kReplace;
    if (n > n_min) legal[num_legal++] = EditKind::kDelete;
    if (num_legal == 0) {
      throw GenerationError("no legal edit for a string of length " +
                            std::to_string(n));
    }
    Edit edit{legal[rng.uniform_below(num_legal)], 0, 0};
    switch (edit.kind) {
      case EditKind::kInsert:
        edit.position = rng.uniform_below(n + 1);
        edit.symbol = static_cast<Symbol>(rng.uniform_below(sigma));
        w.insert(w.begin() + edit.position, edit.symbol);
        break;
      case EditKind::kReplace: {
        edit.position = rng.uniform_below(n);
        // Uniform over the sigma - 1 symbols other than the current one.
        Symbol s = static_cast<Symbol>(rng.uniform_below(sigma - 1));
        if (s >= w[edit.position]) ++s;
        edit.symbol = s;
        w[edit.position] = s;
        break;
      }
      case EditKind::kDelete:
        edit.position = rng.uniform_below(n);
        w.erase(w.begin() + edit.position);
        break;
    }
    if (log != nullptr) log->push_back(edit);
  }
  return w;
}

Word sample_negative(const Language& language, int n_min, int n_max, Rng& rng,
                     const NegativeOptions& options) {
  if (n_min < 0 || n_min > n_max) {
    throw ConfigError("length range [" + std::to_string(n_min) + ", " +
                      std::to_string(n_max) + "] is malformed");
  }
  const Alphabet& alphabet = language.alphabet();
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Word w;
    if (rng.coin()) {
      const auto n = rng.uniform_int(n_min, n_max);
      w.resize(n);
      for (Symbol& s : w) s = static_cast<Symbol>(rng.uniform_below(alphabet.size()));
    } else {
      w = apply_edits(language.sample_positive(n_min, n_max, rng),
                      sample_edit_count(rng), alphabet, n_min, n_max, rng);
    }
    if (!language.contains(w)) return w;
  }
  throw GenerationError(language.name() +
                        ": complement too small, no negative found in " +
                        std::to_string(options.max_attempts) + " proposals");
}

}  // namespace langgen
