// Copyright 2026 The hiddenqutrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data breaks a documented invariant (normalization, hermiticity,
// positivity, exchange symmetry, value ranges).
struct ValidationError : Error {
  using Error::Error;
};

// Mismatched vector/matrix dimensions.
struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

// A measurement design is too rank-deficient to invert.
struct DesignRankError : Error {
  using Error::Error;
};

// A reconstruction cannot be carried out on the given records.
struct ReconstructionError : Error {
  using Error::Error;
};

// File or serialization failures in the I/O layer.
struct IoError : Error {
  using Error::Error;
};

}  // namespace hq
