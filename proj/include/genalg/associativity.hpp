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

#include "genalg/decomposition.hpp"
#include "genalg/generator.hpp"
#include "genalg/interval_set.hpp"
#include "genalg/rational.hpp"
#include "genalg/semigroup.hpp"

namespace genalg {

// Orientation of the generated operation. SUPCONORM pairs a non-decreasing
// generator with the join-like reading T(x,y) = tinv(F(t(x), t(y)));
// NORM pairs a non-increasing generator with the meet-like reading of the
// same expression.
enum class OpMode { NORM, SUPCONORM };

// A two-place operation on [0,1] generated from a one-place monotone t and
// a two-place F through the weak pseudo-inverse.
struct GeneratedOp {
  PiecewiseMonotone t;
  Semigroup f;
  // Weak pseudo-inverse of t, used by eval for both orientations.
  PiecewiseMonotone tinv;
  // Present exactly when t is non-decreasing and left-continuous; carries
  // the gap structure of the value range that the checker operates on.
  std::optional<RangeDecomposition> dec;
  OpMode mode = OpMode::SUPCONORM;

  // T(x,y) = tinv(F(t(x), t(y))). DomainError outside [0,1] x [0,1].
  Ext eval(const Ext& x, const Ext& y) const;
};

// Validates t, checks that mode matches the direction of t, and assembles
// the generated operation. For a TABLE operation the range of t must lie
// inside the table carrier. Throws PreconditionViolated on any mismatch.
GeneratedOp build_generated_op(const PiecewiseMonotone& t, const Semigroup& f,
                               OpMode mode);

// Result of the closure test "F maps range x range into range union the
// top tail": F(t(x),t(y)) must lie in Ran(t) or at or above the threshold
// (the one-sided limit of t at the far domain end for the given mode).
struct ConditionOutcome {
  bool holds = false;
  Ext threshold;
  // On failure: a domain pair whose generated value escapes, and the
  // escaping value itself.
  std::optional<std::pair<Ext, Ext>> witness;
  std::optional<Ext> witness_value;
};

ConditionOutcome check_generator_condition(const PiecewiseMonotone& t,
                                           const Semigroup& f, OpMode mode);

enum class AssocVerdict { ASSOCIATIVE, NOT_ASSOCIATIVE, UNKNOWN };

// A verified counterexample to associativity: domain points with the two
// bracketings, plus the corresponding range members.
struct AssocWitness {
  Ext x, y, z;
  Ext lhs;  // T(T(x,y), z)
  Ext rhs;  // T(x, T(y,z))
  Ext mx, my, mz;  // t(x), t(y), t(z)
};

// Per-gap data of one checker record, displayed at the cell representative.
// "lower" sets collapse the first product F(., y); "upper" sets collapse the
// second product F(y, .). For commutative F the two sides coincide.
struct GapRecord {
  std::string gap;  // "gap <k>" or "tau" for the below-range stretch
  Ext anchor;       // surviving value of the collapse (gap left end, or t0)
  IntervalPointSet m_lower;  // members x with F(x,y) inside the gap stretch
  IntervalPointSet m_upper;  // members x with F(y,x) inside the gap stretch
  IntervalPointSet h_lower;  // order hull of {anchor} u F(m_lower, y)
  IntervalPointSet h_upper;  // order hull of {anchor} u F(y, m_upper)
  bool i_lower_nonempty = false;  // some pair separates the collapsed value
  bool i_upper_nonempty = false;
  bool hit_lower = false;  // collapse windows meet M \ {t0} on this cell
  bool hit_upper = false;
};

// Data of one two-gap record: both products collapse, one per gap.
struct PairRecord {
  std::string left_gap, right_gap;
  IntervalPointSet j;  // order hull of F(m-left, r-anchor) u F(l-anchor, m-right)
  bool i_nonempty = false;
  bool hit = false;  // j meets M \ {t0} on this cell
};

// One cell of the y-sweep: a maximal stretch of members on which every
// record keeps a single shape, with all sets displayed at a representative.
struct CellRecord {
  IntervalPart cell;
  Ext rep;
  IntervalPointSet m_lower;      // members x with F(x,y) again a member
  IntervalPointSet m_upper;      // members x with F(y,x) again a member
  IntervalPointSet m_tau_lower;  // members x with F(x,y) below t0
  IntervalPointSet m_tau_upper;
  std::vector<GapRecord> gaps;
  std::vector<PairRecord> pairs;
};

// The violation hulls of the sweep. The val* sets live in the value space
// [0, inf] and drive the verdict: the operation is associative exactly when
// val_union misses M \ {t0}. The t* sets are their display form in the
// generator's domain: order hulls of the weak-inverse image, the third one
// built from the literal gap stretches (top end included) clipped to finite
// values.
struct FrakSets {
  IntervalPointSet t1, t2, t3, t_union;
  IntervalPointSet val1, val2, val3, val_union;
};

struct ConditionReport {
  AssocVerdict verdict = AssocVerdict::UNKNOWN;
  std::optional<AssocWitness> witness;
  std::vector<CellRecord> cells;
  FrakSets frak;
};

// Decides associativity of the generated operation by the gap-collapse
// criterion. Requires a left-continuous non-decreasing generator in
// SUPCONORM orientation (PreconditionViolated otherwise). A NOT_ASSOCIATIVE
// verdict always carries a witness re-verified by direct evaluation.
ConditionReport f_condition_check(const GeneratedOp& op);

// The violation hulls alone (same sweep as f_condition_check).
FrakSets frak_t(const GeneratedOp& op);

// Sorted grid for brute-force scans: domain breakpoints of t, weak-inverse
// images of the gap endpoints, 0 and 1, and midpoints of all consecutive
// pairs.
std::vector<Ext> default_grid(const GeneratedOp& op);

// First lexicographic triple (x,y,z) from the grid with
// T(T(x,y),z) != T(x,T(y,z)), or nothing.
std::optional<AssocWitness> brute_force_assoc(const GeneratedOp& op,
                                              const std::vector<Ext>& grid);

}  // namespace genalg
