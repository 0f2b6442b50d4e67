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

#include <string>
#include <vector>

#include "genalg/json_io.hpp"

namespace genalg {

// The bundled example corpus: each file in the fixtures directory describes
// a generator (plus optional semigroup and mode) together with expected
// analysis outcomes, and running the corpus re-derives every expectation
// from scratch and compares exactly.

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description, or the value reproduced
};

struct FixtureResult {
  std::string id;
  std::string note;
  std::vector<FixtureCheck> checks;
  bool all_pass() const;
};

struct CorpusResult {
  std::vector<FixtureResult> fixtures;
  bool all_pass = false;
};

// GENALG_FIXTURES_DIR when set, the build-time bundled directory otherwise.
std::string default_fixtures_dir();

// Runs one fixture description (already parsed).
FixtureResult run_fixture(const ojson& spec);

// Loads and runs every *.json file in the directory, sorted by file name.
// Throws ParseError when the directory cannot be read or a file is invalid.
CorpusResult run_corpus(const std::string& dir);

ojson corpus_to_json(const CorpusResult& r);

}  // namespace genalg
