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

#include "genalg/decomposition.hpp"

#include <algorithm>
#include <utility>

#include "genalg/errors.hpp"
#include "genalg/inverses.hpp"

namespace genalg {

RangeDecomposition::RangeDecomposition(Ext t0, std::vector<Gap> gaps,
                                       std::vector<Ext> extra,
                                       IntervalPointSet m)
    : t0_(std::move(t0)),
      gaps_(std::move(gaps)),
      extra_(std::move(extra)),
      m_(std::move(m)) {}

bool RangeDecomposition::degenerate() const {
  return gaps_.size() == 1 && gaps_[0].b.is_inf();
}

IntervalPointSet RangeDecomposition::anchors() const {
  IntervalPointSet v;
  for (const Gap& g : gaps_) v = unite(v, IntervalPointSet::point(g.b));
  for (const Ext& e : extra_) v = unite(v, IntervalPointSet::point(e));
  return v;
}

IntervalPointSet RangeDecomposition::reconstruct() const {
  if (degenerate()) {
    return IntervalPointSet::interval(t0_, true, Ext::inf(), true);
  }
  IntervalPointSet m =
      IntervalPointSet::interval(t0_, true, Ext::inf(), true);
  for (const Gap& g : gaps_) {
    m = subtract(m, IntervalPointSet::interval(g.b, true, g.d, true));
  }
  return unite(m, anchors());
}

RangeDecomposition decompose(const PiecewiseMonotone& t) {
  if (t.direction() != Direction::NON_DECREASING) {
    throw PreconditionViolated("decompose requires a non-decreasing input");
  }
  const ValidationReport vr = validate(t);
  if (!vr.left_continuous) {
    throw PreconditionViolated("decompose requires a left-continuous input");
  }
  const IntervalPointSet m = range_of(t);
  const Ext t0 = t.eval(t.domain_lo());
  const IntervalPointSet missing =
      subtract(IntervalPointSet::interval(t0, true, Ext::inf(), true), m);
  if (missing.is_empty()) {
    // Whole-range case: the frozen [inf, inf] gap with anchor set {inf}.
    return RangeDecomposition(t0, {Gap{Ext::inf(), Ext::inf(), Ext::inf()}},
                              {}, m);
  }
  std::vector<Gap> gaps;
  std::vector<Ext> ds_in_m;
  for (const IntervalPart& p : missing.parts()) {
    // Left continuity attains the supremum below every missing stretch, so
    // each maximal component starts right after a member.
    if (p.lo_closed) {
      throw InternalError("gap opens at a value outside the range");
    }
    gaps.push_back(Gap{p.lo, p.hi, p.lo});
    // The gap closure's top end belongs to M exactly when the missing
    // component does not contain it.
    if (!p.hi_closed) ds_in_m.push_back(p.hi);
  }
  std::vector<Ext> extra;
  for (const Ext& d : ds_in_m) {
    bool is_some_b = false;
    for (const Gap& g : gaps) {
      if (g.b == d) {
        is_some_b = true;
        break;
      }
    }
    if (!is_some_b) extra.push_back(d);
  }
  return RangeDecomposition(t0, std::move(gaps), std::move(extra), m);
}

Ext g_m(const RangeDecomposition& dec, const Ext& x) {
  if (x <= dec.t0()) return dec.t0();
  if (dec.m().member(x)) return x;
  for (const Gap& g : dec.gaps()) {
    if (g.b <= x && x <= g.d) return g.b;
  }
  throw InternalError("value escapes both the range and its gaps");
}

Ext otimes(const RangeDecomposition& dec, const Semigroup& f, const Ext& x,
           const Ext& y) {
  if (!dec.m().member(x) || !dec.m().member(y)) {
    throw DomainError("otimes arguments must lie in the generated range");
  }
  return g_m(dec, f_eval(f, x, y));
}

StarSystem::StarSystem(PiecewiseMonotone t, PiecewiseMonotone winv,
                       IntervalPointSet d, Semigroup f)
    : t_(std::move(t)),
      winv_(std::move(winv)),
      d_(std::move(d)),
      f_(std::move(f)) {}

Ext StarSystem::t_star(const Ext& x) const {
  if (!d_.member(x)) {
    throw DomainError("t_star argument must lie in the core");
  }
  return t_.eval(x);
}

Ext StarSystem::f_star(const Ext& x, const Ext& y) const {
  return winv_.eval(f_eval(f_, t_star(x), t_star(y)));
}

StarSystem star_system(const PiecewiseMonotone& t, const Semigroup& f) {
  if (t.direction() != Direction::NON_DECREASING) {
    throw PreconditionViolated("star system requires a non-decreasing input");
  }
  if (!validate(t).left_continuous) {
    throw PreconditionViolated("star system requires a left-continuous input");
  }
  return StarSystem(t, weak_pseudo_inverse(t), plateau_data(t).D, f);
}

}  // namespace genalg
