// Copyright 2026 The toystab Authors
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

#ifndef TOYSTAB_ERRORS_HPP
#define TOYSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toystab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A brute-force operation was asked to exceed its size guard.
struct GuardExceeded : Error {
  GuardExceeded(const std::string& what, size_t n, size_t max_n)
      : Error(what + ": n=" + std::to_string(n) + " exceeds guard " +
              std::to_string(max_n)) {}
};

/// A random measurement outcome was required but no seed was supplied.
struct SeedRequired : Error {
  SeedRequired() : Error("random measurement requires a seed") {}
};

}  // namespace toystab

#endif  // TOYSTAB_ERRORS_HPP
