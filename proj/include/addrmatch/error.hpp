// Copyright 2026 The addrmatch Authors
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

#ifndef ADDRMATCH_ERROR_HPP_
#define ADDRMATCH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace addrmatch {

// Precondition violations on caller-supplied values (empty strings, bad n,
// mismatched representations).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or missing external data: city tables, lexicons, dataset files.
class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An AlgorithmConfig that breaks the chaining constraints.
class ConfigRejectedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace addrmatch

#endif  // ADDRMATCH_ERROR_HPP_
