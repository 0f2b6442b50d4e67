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

#include <vector>

#include "genalg/generator.hpp"
#include "genalg/interval_set.hpp"
#include "genalg/rational.hpp"
#include "genalg/semigroup.hpp"

namespace genalg {

// One closed gap [b, d] of the value range: a maximal stretch of missing
// values, with its attained left end b (= the anchor value c).
struct Gap {
  Ext b;
  Ext d;
  Ext c;  // always equal to b: left continuity attains the left end
};

// The unique gap decomposition of the range M of a left-continuous
// non-decreasing generator: M = anchors union ([t0, inf] minus all gaps).
class RangeDecomposition {
 public:
  RangeDecomposition(Ext t0, std::vector<Gap> gaps, std::vector<Ext> extra,
                     IntervalPointSet m);

  const Ext& t0() const { return t0_; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  // Anchor values that sit at the unattained top of some gap without being
  // another gap's left end.
  const std::vector<Ext>& extra_points() const { return extra_; }
  const IntervalPointSet& m() const { return m_; }

  // Whole-range case M = [t0, inf]: represented by the single frozen gap
  // [inf, inf] with anchor set {inf}.
  bool degenerate() const;

  // All anchor values: gap left ends plus extra points ({inf} when
  // degenerate).
  IntervalPointSet anchors() const;

  // Rebuilds M from (gaps, anchors, t0) alone; equals m() by construction
  // and is exposed so tests can close the loop.
  IntervalPointSet reconstruct() const;

 private:
  Ext t0_;
  std::vector<Gap> gaps_;
  std::vector<Ext> extra_;
  IntervalPointSet m_;
};

// Requires t non-decreasing and left-continuous (PreconditionViolated
// otherwise); returns the unique decomposition of range_of(t).
RangeDecomposition decompose(const PiecewiseMonotone& t);

// The retraction of [0, inf] onto M: fixed on M, t0 below t0, and the gap's
// attained left end inside each gap.
Ext g_m(const RangeDecomposition& dec, const Ext& x);

// The induced operation on M: g_m applied to F. Arguments must be members
// of M (DomainError otherwise); the result is again a member.
Ext otimes(const RangeDecomposition& dec, const Semigroup& f, const Ext& x,
           const Ext& y);

// The generator restricted to its injectivity core D together with the
// transported operation f_star(x,y) = winv(F(t(x), t(y))) on D^2.
class StarSystem {
 public:
  StarSystem(PiecewiseMonotone t, PiecewiseMonotone winv, IntervalPointSet d,
             Semigroup f);

  const IntervalPointSet& core() const { return d_; }

  // t restricted to the core; DomainError off the core. Strictly monotone.
  Ext t_star(const Ext& x) const;

  // Transported operation on the core; DomainError off the core. The result
  // lies in the core again.
  Ext f_star(const Ext& x, const Ext& y) const;

  // The weak pseudo-inverse used for the transport, exposed for round-trip
  // identities.
  const PiecewiseMonotone& weak_inverse() const { return winv_; }

 private:
  PiecewiseMonotone t_;
  PiecewiseMonotone winv_;
  IntervalPointSet d_;
  Semigroup f_;
};

// Requires t non-decreasing and left-continuous (PreconditionViolated
// otherwise).
StarSystem star_system(const PiecewiseMonotone& t, const Semigroup& f);

}  // namespace genalg
