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

enum class SegmentKind { CONSTANT, AFFINE, RECIPROCAL, MOEBIUS, POINT_INF };
enum class Direction { NON_DECREASING, NON_INCREASING };

// Rational Moebius form (a*x + b) / (c*x + d), or constantly infinity.
// Closed under inversion, which keeps every derived inverse function in the
// same representation. Public segment kinds embed as:
//   CONSTANT(v):      (0*x + v) / (0*x + 1)
//   AFFINE(a,b):      (a*x + b) / (0*x + 1)
//   RECIPROCAL(c,d):  (0*x + c) / (-1*x + d)
struct Formula {
  bool inf_const = false;
  Rat a, b, c, d;

  static Formula constant(const Rat& v);
  static Formula affine(const Rat& slope, const Rat& intercept);
  static Formula reciprocal(const Rat& num, const Rat& pole);
  static Formula point_inf();
  static Formula moebius(Rat a, Rat b, Rat c, Rat d);

  // Exact value, with poles and x = inf evaluated as one-sided limits.
  // Callers must have validated that any pole touching the evaluation
  // domain approaches +inf.
  Ext eval(const Ext& x) const;

  // Sign of the derivative: -1, 0, +1. Zero for constants (incl. inf).
  int monotonicity() const;
  bool is_constant() const;

  // The x with eval(x) = y for a non-constant formula, in the extended
  // sense: the pole maps to y = inf, the asymptote value maps to x = inf.
  Ext solve(const Ext& y) const;

  // The inverse Moebius map y -> x. Requires non-constant.
  Formula inverse() const;

  // x of the pole, when the denominator can vanish.
  std::optional<Rat> pole() const;
};

// The canonical segment label for a formula: CONSTANT, AFFINE, RECIPROCAL
// when expressible as c/(d - x), MOEBIUS otherwise, POINT_INF for inf.
SegmentKind kind_of(const Formula& f);

// outer(inner(x)) as a single formula; constants and inf propagate.
Formula compose_formulas(const Formula& outer, const Formula& inner);

struct Segment {
  Ext lo;
  bool lo_closed = true;
  Ext hi;
  bool hi_closed = true;
  SegmentKind kind = SegmentKind::CONSTANT;
  Formula formula;

  bool contains(const Ext& x) const;
  bool degenerate() const { return lo == hi; }
};

struct ValidationViolation {
  std::string what;
  Ext where;
};

struct ValidationReport {
  Direction direction = Direction::NON_DECREASING;
  bool monotone = false;
  bool left_continuous = false;
  bool right_continuous = false;
  bool strictly_monotone = false;
  std::vector<ValidationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// A piecewise function from [dom_lo, dom_hi] into [0, inf] whose segments
// partition the domain exactly. Generators live on [0,1]; derived inverse
// functions reuse the same form on [0, inf] with codomain [0,1].
class PiecewiseMonotone {
 public:
  PiecewiseMonotone(std::vector<Segment> segments, Direction direction,
                    const Ext& dom_lo, const Ext& dom_hi);

  const std::vector<Segment>& segments() const { return segments_; }
  Direction direction() const { return direction_; }
  const Ext& domain_lo() const { return dom_lo_; }
  const Ext& domain_hi() const { return dom_hi_; }

  Ext eval(const Ext& x) const;
  // One-sided limits; at the domain ends they fall back to the value.
  Ext limit_left(const Ext& x) const;
  Ext limit_right(const Ext& x) const;

  // Sorted distinct segment boundary points, domain ends included.
  std::vector<Ext> breakpoints() const;

  // The segment whose interval contains x.
  const Segment& owner_of(const Ext& x) const;

 private:
  std::vector<Segment> segments_;
  Direction direction_;
  Ext dom_lo_, dom_hi_;
};

ValidationReport validate(const PiecewiseMonotone& t);

struct Limits {
  Ext left, value, right;
};

// Generator-domain evaluation with the boundary conventions: the left limit
// at 0 is t(0), and the right limit at the top is inf for non-decreasing t
// (the value itself for non-increasing t).
Limits eval_with_limits(const PiecewiseMonotone& t, const Ext& x);

// Exact range M = t([dom_lo, dom_hi]) including inf when attained.
IntervalPointSet range_of(const PiecewiseMonotone& t);

// Exact preimage {x in [dom_lo, dom_hi] : t(x) in values}.
IntervalPointSet preimage_of(const PiecewiseMonotone& t,
                             const IntervalPointSet& values);

struct PlateauData {
  IntervalPointSet H;  // values attained on an interval of positive length
  IntervalPointSet G;  // right suprema of those plateaus, as domain points
  IntervalPointSet W;  // domain points mapping to range values outside H
  IntervalPointSet D;  // G union W; t restricted to D is injective
};

PlateauData plateau_data(const PiecewiseMonotone& t);

}  // namespace genalg
