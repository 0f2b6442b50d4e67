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

#include <optional>
#include <string>
#include <vector>

#include "genalg/interval_set.hpp"
#include "genalg/rational.hpp"

namespace genalg {

enum class SemigroupKind { SUM, MAX, LINPROD, TABLE };

// A commutative, monotone, max-dominating semigroup operation on [0, inf].
// Built-in kinds are total on the carrier; TABLE kinds are defined on a
// finite subset and validated exhaustively at construction.
struct Semigroup {
  SemigroupKind kind = SemigroupKind::SUM;
  // Strictly increasing in each argument while the other stays below inf.
  bool strict = false;
  bool continuous = false;
  bool has_neutral = false;
  Ext neutral;

  // TABLE only: sorted distinct carrier and the full operation table,
  // table[i][j] = F(carrier[i], carrier[j]).
  std::vector<Ext> carrier;
  std::vector<std::vector<Ext>> table;

  std::string name() const;
};

Semigroup make_sum();
Semigroup make_max();
// x + y + x*y, the product 1+z transported from multiplication on [1, inf].
Semigroup make_linprod();
// Validates closure, associativity, commutativity, monotonicity and
// domination of max on the finite carrier; derives the strict and neutral
// flags. Throws PreconditionViolated on any failed axiom.
Semigroup make_table(std::vector<Ext> carrier,
                     std::vector<std::vector<Ext>> table);

Ext f_eval(const Semigroup& f, const Ext& x, const Ext& y);

// Exact image set {F(a,b) : a in A, b in B}. For TABLE, A and B are
// restricted to carrier members. Empty if either set is empty.
IntervalPointSet f_image(const Semigroup& f, const IntervalPointSet& a,
                         const IntervalPointSet& b);

// A pair (u, v) with u in a, v in b and F(u, v) = z, when one exists.
// Complete for every kind: z in f_image(f, a, b) guarantees a result.
std::optional<std::pair<Ext, Ext>> f_solve_pair(const Semigroup& f,
                                                const IntervalPointSet& a,
                                                const IntervalPointSet& b,
                                                const Ext& z);

struct EvidenceViolation {
  std::string axiom;
  std::vector<Ext> where;
};

// Sampled evidence that F satisfies the semigroup axioms on the carrier:
// associativity and commutativity on all triples/pairs from a deterministic
// probe set (finite rationals plus inf), monotonicity, and F >= max.
struct EvidenceReport {
  long pairs_checked = 0;
  long triples_checked = 0;
  bool all_ok = false;
  std::vector<EvidenceViolation> violations;
};

// budget bounds the probe set size (clamped to [3, 64]).
EvidenceReport gamma_evidence(const Semigroup& f, int budget);

// Members a of probe with F(a,a) = a, as an exact set. For built-in kinds
// this is solved in closed form; for TABLE by enumeration.
IntervalPointSet idempotents_of(const Semigroup& f,
                                const IntervalPointSet& probe);

}  // namespace genalg
