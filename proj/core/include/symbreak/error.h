// Copyright 2026 The symbreak Authors
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

#ifndef SYMBREAK_ERROR_H_
#define SYMBREAK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symbreak {

// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: loops, out-of-range indices, disconnected
// graphs handed to an operation that needs connectivity.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// A graph6 line that cannot be decoded.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A safety cap (vertex count, group order, search size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (domain mismatch, a
// permutation that is not an automorphism, an unsupported graph).
class ContractError : public Error {
 public:
  using Error::Error;
};

// The requested invariant does not exist for this graph, e.g. the
// distinguishing index of K2.
class UndefinedInvariantError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace symbreak

#endif  // SYMBREAK_ERROR_H_
