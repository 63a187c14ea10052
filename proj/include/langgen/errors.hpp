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

#ifndef LANGGEN_ERRORS_HPP_
#define LANGGEN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace langgen {

// Caller violated a documented precondition (bad symbol, mismatched orders,
// non-trim automaton, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A semiring operation left its domain, e.g. a divergent star.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested language/range combination cannot be satisfied.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized generator gave up (rejection cap, no legal edit).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace langgen

#endif  // LANGGEN_ERRORS_HPP_
