// Copyright 2026 The Authors.
//
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

#ifndef LEXIMIN_ERRORS_H_
#define LEXIMIN_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace leximin {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (length mismatch, o already in S,
// order that is not a permutation, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A valuation that cannot be evaluated, e.g. an explicit table with a hole.
class MalformedValuation : public Error {
 public:
  using Error::Error;
};

// The solver only handles {-1, 0, c} order-neutral submodular valuations.
class UnsupportedValuation : public Error {
 public:
  using Error::Error;
};

// Structurally invalid instance: values out of range, overlapping groups, ...
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Firing means a bug or an input that violates
// the hypotheses the algorithm relies on.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A tri-decomposition failed verification; `clause` is one of 'a'..'d'.
class DecompositionFailure : public InvariantViolation {
 public:
  DecompositionFailure(char clause, const std::string& what)
      : InvariantViolation(what), clause_(clause) {}
  char clause() const { return clause_; }

 private:
  char clause_;
};

// A binary oracle produced a marginal outside {0, 1}.
class OracleViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed JSON document. `location` is a JSON-pointer-like path.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace leximin

#endif  // LEXIMIN_ERRORS_H_
