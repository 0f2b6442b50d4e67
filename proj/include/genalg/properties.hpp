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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genalg/associativity.hpp"
#include "genalg/interval_set.hpp"
#include "genalg/rational.hpp"

namespace genalg {

// Analyzers for the generated operation T(x,y) = tinv(F(t(x), t(y))):
// idempotent points, the limit behaviour of diagonal powers, conditional
// cancellation, the join-operation equivalence under cancellation, and
// pointwise/global continuity. All verdicts are exact.

// ---------------------------------------------------------------------------
// Idempotence.
// ---------------------------------------------------------------------------

// The exact set {x in [0,1] : T(x,x) = x}, for the join orientation
// (PreconditionViolated in NORM mode). A point qualifies exactly when the
// weak pseudo-inverse maps t(x) back to x and no range member separates
// t(x) from F(t(x), t(x)); 1 always qualifies.
IntervalPointSet idempotent_points(const GeneratedOp& op);

struct IdempotenceReport {
  IntervalPointSet points;
  // points == [0,1]; equivalent to t strictly increasing with
  // F(t(x), t(x)) never overtaking the next attained value.
  bool fully_idempotent = false;
};

IdempotenceReport idempotence_report(const GeneratedOp& op);

// ---------------------------------------------------------------------------
// Diagonal powers and the limit property.
// ---------------------------------------------------------------------------

enum class OrbitClass { REACHES_ONE, FIXED_BELOW_ONE, UNDECIDED };

// The orbit of a point under repeated application against itself:
// p(1) = x, p(n+1) = T(x, p(n)).
struct DiagonalOrbit {
  Ext x;
  // powers[n-1] holds p(n); the list stops at the deciding step or n_max.
  std::vector<Ext> powers;
  OrbitClass classification = OrbitClass::UNDECIDED;
  // The exact fixed point v < 1 with T(x, v) = v, when classified fixed.
  std::optional<Ext> limit;
  // 1-based index of the power at which the classification fired.
  std::optional<int> decided_at;
};

// Computes the orbit up to n_max steps, stopping early on reaching 1
// exactly or on an exact fixed point below 1. No numerical stagnation
// heuristics: an orbit that merely approaches a limit stays UNDECIDED.
// Requires 0 < x < 1 and n_max >= 2 (PreconditionViolated otherwise).
DiagonalOrbit diagonal_powers(const GeneratedOp& op, const Ext& x,
                              int n_max = 64);

enum class LimitVerdict { HOLDS, FAILS, INCONCLUSIVE };

struct LimitCriterion {
  bool holds = false;
  // A point of (0,1) where the criterion fails.
  std::optional<Ext> witness;
};

// Decision data for the limit property "every orbit of an interior point
// tends to 1". The three classical criteria are reported individually and
// combined through a ladder of exact sufficient and necessary conditions;
// a FAILS verdict always carries a point whose orbit provably stays below
// 1, and grid orbits cross-check every verdict.
struct LimitReport {
  // (a) F(t(0+), t(x)) > t(x+) for all x in (0,1). Sufficient for HOLDS
  // when t is left-continuous.
  LimitCriterion strict_bound;
  // (b) tinv(t(x)) = tinv(t(x+)) for all x in (0,1).
  LimitCriterion inverse_stable;
  // (c) F(t(x), t(x)) >= t(x+) for all x in (0,1). Necessary for HOLDS.
  LimitCriterion weak_bound;
  LimitVerdict verdict = LimitVerdict::INCONCLUSIVE;
  std::optional<Ext> witness;
  // Which rung of the decision ladder produced the verdict.
  std::string reason;
  // Orbits at the interior default-grid points.
  std::vector<DiagonalOrbit> orbits;
};

// Requires the join orientation and continuous F (PreconditionViolated
// otherwise).
LimitReport limit_property_check(const GeneratedOp& op);

// ---------------------------------------------------------------------------
// Conditional cancellation.
// ---------------------------------------------------------------------------

struct CancellationSets {
  // The collapse-value set the test runs against; defaults to the plateau
  // values of t.
  IntervalPointSet c;
  // Least collapse value, when c has an attained minimum.
  std::optional<Ext> beta;
  // inf{x : t(x) = beta}; t is strictly increasing on [0, alpha].
  std::optional<Ext> alpha;
  // Order hull of t(0) together with the products of members falling
  // strictly below t(0).
  IntervalPointSet h_kappa;
  // Per range gap: order hull of the gap's attained left end together with
  // the products of members falling strictly inside the gap.
  std::vector<IntervalPointSet> h_k;
};

struct CancellationReport {
  // T(x1,y) = T(x2,y) < 1 forces x1 = x2.
  bool conditionally_cancellative = false;
  // T(x1,y) = T(x2,y) forces x1 = x2 outright.
  bool cancellative = false;
  // t(0) itself is a collapse value; the operation then cancels
  // conditionally exactly when it is constantly 1.
  bool degenerate = false;
  // (i) products of non-collapse members with members stay in the range or
  // at or above t(1).
  bool stays_in_range = false;
  // (ii) products of collapse members with members land at or above t(1).
  bool collapse_saturates = false;
  CancellationSets sets;
  // Range-side member pairs violating (i) resp. (ii).
  std::optional<std::pair<Ext, Ext>> range_escape;
  std::optional<std::pair<Ext, Ext>> collapse_escape;
  // Domain-side witness {x1, x2, y} with x1 < x2 and T(x1,y) = T(x2,y) < 1,
  // found by direct search over the default grid; absent when the grid has
  // no violating triple.
  std::optional<std::array<Ext, 3>> merge_witness;
};

// Requires the join orientation, a left-continuous generator and strict F
// (PreconditionViolated otherwise). The collapse set is the plateau values
// of t unless overridden.
CancellationReport cancellation_check(
    const GeneratedOp& op,
    std::optional<IntervalPointSet> c_override = std::nullopt);

// True when every product of the per-gap collapse hulls with range members
// collapses back onto the anchor structure, i.e. the hull products miss
// M minus t(0). Under conditional cancellativity this is equivalent to T
// satisfying the join-operation axioms outright. Requires the join
// orientation, a left-continuous generator, and strict F with t(0) neutral
// (PreconditionViolated otherwise).
bool supconorm_equivalence_check(const GeneratedOp& op);

// ---------------------------------------------------------------------------
// Continuity.
// ---------------------------------------------------------------------------

struct ContinuityPairFlag {
  Ext x, y;
  bool left_ok = false;
  bool right_ok = false;
};

struct ContinuityReport {
  // T is left (right) continuous on all of [0,1]^2, approaching within the
  // square; decided exactly, with a witness pair on failure.
  bool left_continuous = false;
  bool right_continuous = false;
  bool continuous = false;
  std::optional<std::pair<Ext, Ext>> left_witness;
  std::optional<std::pair<Ext, Ext>> right_witness;
  // One-sided continuity of T at every breakpoint pair of t.
  std::vector<ContinuityPairFlag> breakpoint_pairs;
  // T is a continuous join operation: continuous, associative, commutative,
  // monotone, with neutral element 0.
  bool continuous_t_conorm = false;
  std::string conorm_reason;
};

// Requires the join orientation, a left-continuous generator and
// continuous F (PreconditionViolated otherwise).
ContinuityReport continuity_check(const GeneratedOp& op);

}  // namespace genalg
