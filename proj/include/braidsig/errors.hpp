// Copyright 2026 The braidsig Authors
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

namespace braidsig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's preconditions
/// (mismatched strand counts, parameters out of range).
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Serialized data is malformed or violates a normal-form invariant.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// Protocol message arrived out of order, or a session is in the wrong state.
class ProtocolError : public Error {
  public:
    using Error::Error;
};

/// A one-time signing key was presented a second time.
class KeyReuseError : public Error {
  public:
    using Error::Error;
};

}  // namespace braidsig
