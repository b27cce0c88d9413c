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

#include "symbreak/limits.h"

#include <cstdlib>
#include <string>

namespace symbreak {
namespace {

Limits FromEnvironment() {
  Limits limits;
  if (const char* raw = std::getenv("SYMBREAK_MAX_VERTICES")) {
    try {
      const int value = std::stoi(raw);
      if (value > 0) limits.max_vertices = value;
    } catch (const std::exception&) {
      // Unparseable override: keep the default.
    }
  }
  return limits;
}

}  // namespace

const Limits& Limits::Default() {
  static const Limits limits = FromEnvironment();
  return limits;
}

}  // namespace symbreak
