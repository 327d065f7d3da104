// Copyright 2026 The Orthograph Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace orthograph {

/// Bad input: out-of-range vertex, violated precondition, exceeded cap.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap (vertex width, automorphism search limits) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check between two independent computations failed.
/// Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace orthograph
