// Copyright 2026 The streamsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace streamsel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vector or component count does not match the key parameters.
struct LengthMismatchError : Error {
  using Error::Error;
};

// An index (cell, column) is outside [1, n] or similar.
struct OutOfRangeError : Error {
  using Error::Error;
};

// Malformed serialized input; distinct from a failed decryption.
struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

// No admissible row exists (or the resampling budget ran out).
struct IncompatibleConstraintsError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace streamsel
