// Copyright 2026 The genalg authors
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

namespace genalg {

// Input could not be parsed (bad rational literal, bad JSON shape, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A piecewise definition does not cover its domain exactly once.
struct MalformedPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was invoked outside its stated precondition.
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An evaluation point lies outside the function's domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant broke; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace genalg
