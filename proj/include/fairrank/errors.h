// Copyright 2026 The fairrank Authors.
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

#ifndef FAIRRANK_ERRORS_H_
#define FAIRRANK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairrank {

// Base class for the library's recoverable failures. Precondition
// violations on arguments use the standard std::invalid_argument and
// std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No ranking satisfies the requested prefix constraints. `prefix()` is the
// first prefix length at which the constraint system cannot be met, or 0
// when no single prefix can be blamed.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::size_t prefix)
      : Error(what), prefix_(prefix) {}

  std::size_t prefix() const { return prefix_; }

 private:
  std::size_t prefix_;
};

// Malformed or inconsistent input data (files, rows, cardinalities).
class DataError : public Error {
 public:
  using Error::Error;
};

// A metric whose value is not defined for the given input, e.g. NDCG when
// every score is zero.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairrank

#endif  // FAIRRANK_ERRORS_H_
