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

#include "genalg/generator.hpp"

namespace genalg {

// Inverse-like companions of a monotone t: [0,1] -> [0,inf], materialized as
// closed-form piecewise functions on [0,inf] with values in [0,1]. All sups
// and infs over empty sets use the domain-end conventions sup {} = 0 and
// inf {} = 1.

// The pseudo-inverse t^(-1)(y) = sup{x : (t(x) - y)(t(1) - t(0)) < 0}.
// Constant t collapses the product to zero, so t^(-1) is constantly 0.
PiecewiseMonotone pseudo_inverse(const PiecewiseMonotone& t);

// The weak pseudo-inverse t^[-1]: sup{x : t(x) <= y} for non-decreasing t,
// sup{x : t(x) >= y} for non-increasing t, and constantly 1 for constant t.
// For non-decreasing t the result is non-decreasing and right-continuous.
PiecewiseMonotone weak_pseudo_inverse(const PiecewiseMonotone& t);

struct QuasiInverseBounds {
  PiecewiseMonotone wedge;  // sup{x : t(x) < y}
  PiecewiseMonotone vee;    // inf{x : t(x) > y}
};

// The two quasi-inverse bounds of a non-decreasing t. For non-constant t
// they coincide with the pseudo- and weak pseudo-inverse; for constant t
// they follow the literal sup/inf formulas instead of the conventions above
// (wedge jumps to 1 past the constant value). Throws MalformedPartition for
// non-increasing input.
QuasiInverseBounds quasi_inverse_bounds(const PiecewiseMonotone& t);

// Largest delta > 0 such that t is constant on [x0, x0 + delta) and then
// jumps strictly past t(x0) at x0 + delta; none when no such delta exists.
// Equivalently: non-none iff t(t^[-1](t(x0))) != t(x0). Throws DomainError
// unless x0 lies in [domain_lo, domain_hi).
std::optional<Rat> plateau_witness(const PiecewiseMonotone& t, const Ext& x0);

struct IdentityReport {
  // t(t^[-1](t(x))) == t(x) for every x in the domain.
  bool round_trip_holds = false;
  std::optional<Ext> round_trip_counterexample;
  // t^[-1](t(x)) >= x for every x in the domain (always true).
  bool above_identity_holds = false;
  std::optional<Ext> above_identity_counterexample;
  // t^[-1] == t^(-1) as functions on [0,inf]; holds iff t is strictly
  // monotone.
  bool weak_equals_pseudo = false;
  std::optional<Ext> weak_equals_pseudo_counterexample;
  bool strictly_monotone = false;
  bool left_continuous = false;
  // No x0 admits a plateau witness; equivalent to round_trip_holds.
  bool plateau_set_empty = false;
  std::optional<Ext> plateau_point;
  bool equivalence_holds = false;
};

// Exact pointwise verification of the inverse identities, with
// counterexample points where an identity fails.
IdentityReport inverse_identities_report(const PiecewiseMonotone& t);

}  // namespace genalg
