// Copyright 2026 The circq Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace circq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad widths, non-unitary matrices, invalid specs.
class InputError : public Error {
  public:
    using Error::Error;
};

/// The requested post-selection outcome has probability below the noise floor.
class PostSelectionError : public Error {
  public:
    using Error::Error;
};

/// A dense simulation would exceed the qubit cap.
class ResourceError : public Error {
  public:
    using Error::Error;
};

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw InputError(message);
    }
}

} // namespace circq
