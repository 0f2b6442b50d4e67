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

#include "genalg/inverses.hpp"

#include <vector>

#include "doctest.h"
#include "genalg/errors.hpp"
#include "genalg/fixtures.hpp"
#include "genalg/interval_set.hpp"

namespace genalg {
namespace {

// ---------------------------------------------------------------------------
// Independent oracle: sup{x : t(x) op y} computed segment by segment as an
// explicit set, with no shared code with the sweep construction under test.
// ---------------------------------------------------------------------------

enum class Relop { LT, LE, GT, GE };

bool rel_holds(const Ext& v, Relop op, const Ext& y) {
  switch (op) {
    case Relop::LT:
      return v < y;
    case Relop::LE:
      return v <= y;
    case Relop::GT:
      return v > y;
    case Relop::GE:
      return v >= y;
  }
  return false;
}

// The x-set {x in segment : f(x) op y} for one segment of a monotone map.
IntervalPointSet segment_solutions(const Segment& s, Relop op, const Ext& y) {
  const bool flat = s.kind == SegmentKind::POINT_INF ||
                    s.formula.is_constant();
  if (flat) {
    const Ext v = s.kind == SegmentKind::POINT_INF ? Ext::inf()
                                                   : s.formula.eval(s.lo);
    if (!rel_holds(v, op, y)) return IntervalPointSet::empty_set();
    return IntervalPointSet::interval(s.lo, s.lo_closed, s.hi, s.hi_closed);
  }
  const Ext at_lo = s.formula.eval(s.lo);
  const Ext at_hi = s.formula.eval(s.hi);
  const bool rising = at_lo < at_hi;
  const Ext vlo = rising ? at_lo : at_hi;
  const Ext vhi = rising ? at_hi : at_lo;
  // Values at open ends (poles included) are limits, not attained.
  const bool att_lo = rising ? s.lo_closed : s.hi_closed;
  const bool att_hi = rising ? s.hi_closed : s.lo_closed;

  bool whole = false, none = false, keep_low_values = true;
  bool include_boundary = false;
  switch (op) {
    case Relop::LE:
      whole = y >= vhi;
      none = y < vlo || (y == vlo && !att_lo);
      include_boundary = true;
      break;
    case Relop::LT:
      whole = y > vhi || (y == vhi && !att_hi);
      none = y <= vlo;
      break;
    case Relop::GE:
      whole = y <= vlo;
      none = y > vhi || (y == vhi && !att_hi);
      keep_low_values = false;
      include_boundary = true;
      break;
    case Relop::GT:
      whole = y < vlo || (y == vlo && !att_lo);
      none = y >= vhi;
      keep_low_values = false;
      break;
  }
  if (whole) {
    return IntervalPointSet::interval(s.lo, s.lo_closed, s.hi, s.hi_closed);
  }
  if (none) return IntervalPointSet::empty_set();
  const Ext cut = s.formula.solve(y);
  // keep_low_values selects the side of the cut with small f-values.
  const bool keep_left = keep_low_values == rising;
  if (keep_left) {
    return IntervalPointSet::interval(s.lo, s.lo_closed, cut,
                                      include_boundary);
  }
  return IntervalPointSet::interval(cut, include_boundary, s.hi, s.hi_closed);
}

Ext oracle_sup(const PiecewiseMonotone& t, Relop op, const Ext& y) {
  IntervalPointSet sol;
  for (const Segment& s : t.segments()) {
    sol = unite(sol, segment_solutions(s, op, y));
  }
  return sol.is_empty() ? t.domain_lo() : sol.sup_value();
}

Relop pseudo_op(const PiecewiseMonotone& t) {
  return t.direction() == Direction::NON_DECREASING ? Relop::LT : Relop::GT;
}

Relop weak_op(const PiecewiseMonotone& t) {
  return t.direction() == Direction::NON_DECREASING ? Relop::LE : Relop::GE;
}

// Probe values covering range boundaries, nearby offsets, a coarse grid,
// and infinity.
std::vector<Ext> probe_values(const PiecewiseMonotone& t) {
  std::vector<Ext> ys;
  for (long k = 0; k <= 40; ++k) ys.push_back(Ext(Rat(k, 8)));
  const IntervalPointSet range = range_of(t);
  for (const IntervalPart& p : range.parts()) {
    for (const Ext& e : {p.lo, p.hi}) {
      if (e.is_inf()) continue;
      ys.push_back(e);
      ys.push_back(Ext(Rat(e.rat() + Rat(1, 64))));
      if (e.rat() > Rat(1, 64)) ys.push_back(Ext(Rat(e.rat() - Rat(1, 64))));
    }
    if (p.lo.is_finite() && p.hi.is_finite()) {
      ys.push_back(Ext(Rat((p.lo.rat() + p.hi.rat()) / 2)));
    }
  }
  ys.push_back(Ext::inf());
  ys.push_back(Ext(1000L));
  return ys;
}

const std::vector<PiecewiseMonotone>& all_fixtures() {
  static const std::vector<PiecewiseMonotone> fs = {
      gen_staircase(),          gen_half_slope(),
      gen_shifted_reciprocal(), gen_pinch_inf(),
      gen_double_identity(),    gen_plateau_between_slopes(),
      gen_flat_then_step(),     gen_flat_then_slope(),
      gen_slope_two_plateaus(), gen_kinked_doubling(),
      gen_const_then_affine(),  gen_right_continuous_steps(),
      gen_one_minus_x()};
  return fs;
}

// ---------------------------------------------------------------------------
// Structural comparison of a computed inverse against an expected table.
// Intervals and kinds must match exactly; formulas are compared by value at
// enough points to pin a Moebius map (three) plus both ends.
// ---------------------------------------------------------------------------

struct ExpSeg {
  Ext lo;
  bool lo_closed;
  Ext hi;
  bool hi_closed;
  SegmentKind kind;
  Formula f;
};

void check_segments(const PiecewiseMonotone& got,
                    const std::vector<ExpSeg>& want) {
  REQUIRE(got.segments().size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const Segment& g = got.segments()[i];
    const ExpSeg& w = want[i];
    CAPTURE(i);
    CHECK(g.lo == w.lo);
    CHECK(g.lo_closed == w.lo_closed);
    CHECK(g.hi == w.hi);
    CHECK(g.hi_closed == w.hi_closed);
    CHECK(g.kind == w.kind);
    std::vector<Ext> pts = {g.lo, g.hi};
    if (g.lo.is_inf()) {
      // Degenerate [inf, inf] piece: the ends are the only sample points.
    } else if (g.hi.is_inf()) {
      pts.push_back(Ext(Rat(g.lo.rat() + 1)));
      pts.push_back(Ext(Rat(g.lo.rat() + 2)));
    } else {
      pts.push_back(Ext(Rat((3 * g.lo.rat() + g.hi.rat()) / 4)));
      pts.push_back(Ext(Rat((g.lo.rat() + 3 * g.hi.rat()) / 4)));
    }
    for (const Ext& x : pts) CHECK(g.formula.eval(x) == w.f.eval(x));
  }
}

PiecewiseMonotone identity_generator() {
  return PiecewiseMonotone({Segment{Ext(0L), true, Ext(1L), true,
                                    SegmentKind::AFFINE,
                                    Formula::affine(Rat(1), Rat(0))}},
                           Direction::NON_DECREASING, Ext(0L), Ext(1L));
}

PiecewiseMonotone constant_generator(const Rat& c) {
  return PiecewiseMonotone({Segment{Ext(0L), true, Ext(1L), true,
                                    SegmentKind::CONSTANT,
                                    Formula::constant(c)}},
                           Direction::NON_DECREASING, Ext(0L), Ext(1L));
}

PiecewiseMonotone infinite_generator() {
  return PiecewiseMonotone({Segment{Ext(0L), true, Ext(1L), true,
                                    SegmentKind::POINT_INF,
                                    Formula::point_inf()}},
                           Direction::NON_DECREASING, Ext(0L), Ext(1L));
}

}  // namespace

TEST_CASE("sup-inverses match the direct per-segment set oracle") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    const PiecewiseMonotone p = pseudo_inverse(t);
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    for (const Ext& y : probe_values(t)) {
      CAPTURE(ext_to_string(y));
      CHECK(p.eval(y) == oracle_sup(t, pseudo_op(t), y));
      CHECK(w.eval(y) == oracle_sup(t, weak_op(t), y));
    }
  }
}

TEST_CASE("staircase pseudo-inverse has the canonical seven-piece table") {
  const PiecewiseMonotone p = pseudo_inverse(gen_staircase());
  const Formula id = Formula::affine(Rat(1), Rat(0));
  check_segments(
      p, {{Ext(0L), true, Ext(1, 4), true, SegmentKind::AFFINE, id},
          {Ext(1, 4), false, Ext(1L), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(1, 2))},
          {Ext(1L), false, Ext(5, 4), false, SegmentKind::AFFINE,
           Formula::affine(Rat(1), Rat(-1, 2))},
          {Ext(5, 4), true, Ext(2L), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(3, 4))},
          {Ext(2L), false, Ext(17, 8), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(7, 8))},
          {Ext(17, 8), false, Ext(9, 4), false, SegmentKind::AFFINE,
           Formula::affine(Rat(1), Rat(-5, 4))},
          {Ext(9, 4), true, Ext::inf(), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(1))}});
}

TEST_CASE("staircase weak inverse has the canonical seven-piece table") {
  const PiecewiseMonotone w = weak_pseudo_inverse(gen_staircase());
  const Formula id = Formula::affine(Rat(1), Rat(0));
  check_segments(
      w, {{Ext(0L), true, Ext(1, 4), false, SegmentKind::AFFINE, id},
          {Ext(1, 4), true, Ext(1L), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(1, 2))},
          {Ext(1L), false, Ext(5, 4), false, SegmentKind::AFFINE,
           Formula::affine(Rat(1), Rat(-1, 2))},
          {Ext(5, 4), true, Ext(2L), false, SegmentKind::CONSTANT,
           Formula::constant(Rat(3, 4))},
          {Ext(2L), true, Ext(17, 8), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(7, 8))},
          {Ext(17, 8), false, Ext(9, 4), false, SegmentKind::AFFINE,
           Formula::affine(Rat(1), Rat(-5, 4))},
          {Ext(9, 4), true, Ext::inf(), true, SegmentKind::CONSTANT,
           Formula::constant(Rat(1))}});
}

TEST_CASE("staircase inverses take the documented spot values") {
  const PiecewiseMonotone t = gen_staircase();
  const PiecewiseMonotone p = pseudo_inverse(t);
  const PiecewiseMonotone w = weak_pseudo_inverse(t);
  CHECK(p.eval(Ext(2L)) == Ext(3, 4));
  CHECK(w.eval(Ext(2L)) == Ext(7, 8));
  CHECK(w.eval(Ext(1, 4)) == Ext(1, 2));
  // Pointwise checks across the whole table, junctions included.
  const std::vector<std::pair<Ext, std::pair<Ext, Ext>>> table = {
      {Ext(0L), {Ext(0L), Ext(0L)}},
      {Ext(1, 8), {Ext(1, 8), Ext(1, 8)}},
      {Ext(1, 4), {Ext(1, 4), Ext(1, 2)}},
      {Ext(1, 2), {Ext(1, 2), Ext(1, 2)}},
      {Ext(3, 4), {Ext(1, 2), Ext(1, 2)}},
      {Ext(1L), {Ext(1, 2), Ext(1, 2)}},
      {Ext(9, 8), {Ext(5, 8), Ext(5, 8)}},
      {Ext(5, 4), {Ext(3, 4), Ext(3, 4)}},
      {Ext(3, 2), {Ext(3, 4), Ext(3, 4)}},
      {Ext(7, 4), {Ext(3, 4), Ext(3, 4)}},
      {Ext(2L), {Ext(3, 4), Ext(7, 8)}},
      {Ext(33, 16), {Ext(7, 8), Ext(7, 8)}},
      {Ext(17, 8), {Ext(7, 8), Ext(7, 8)}},
      {Ext(35, 16), {Ext(15, 16), Ext(15, 16)}},
      {Ext(9, 4), {Ext(1L), Ext(1L)}},
      {Ext(5, 2), {Ext(1L), Ext(1L)}},
      {Ext::inf(), {Ext(1L), Ext(1L)}}};
  for (const auto& [y, expected] : table) {
    CAPTURE(ext_to_string(y));
    CHECK(p.eval(y) == expected.first);
    CHECK(w.eval(y) == expected.second);
  }
}

TEST_CASE("quasi-inverse bounds coincide with the sup-inverses") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    if (t.direction() != Direction::NON_DECREASING) continue;
    const QuasiInverseBounds qb = quasi_inverse_bounds(t);
    const PiecewiseMonotone p = pseudo_inverse(t);
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    for (const Ext& y : probe_values(t)) {
      CHECK(qb.wedge.eval(y) == p.eval(y));
      CHECK(qb.vee.eval(y) == w.eval(y));
    }
  }
  const QuasiInverseBounds qb = quasi_inverse_bounds(gen_staircase());
  CHECK(qb.wedge.eval(Ext(1L)) == Ext(1, 2));
  CHECK(qb.vee.eval(Ext(1L)) == Ext(1, 2));
  CHECK(qb.wedge.eval(Ext(2L)) == Ext(3, 4));
  CHECK(qb.vee.eval(Ext(2L)) == Ext(7, 8));
  CHECK_THROWS_AS(quasi_inverse_bounds(gen_one_minus_x()),
                  MalformedPartition);
}

TEST_CASE("constant generators use the degenerate conventions") {
  const PiecewiseMonotone t = constant_generator(Rat(1, 2));
  check_segments(pseudo_inverse(t),
                 {{Ext(0L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))}});
  check_segments(weak_pseudo_inverse(t),
                 {{Ext(0L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});
  // The literal sup/inf bounds differ from the conventional inverses here.
  const QuasiInverseBounds qb = quasi_inverse_bounds(t);
  check_segments(qb.wedge,
                 {{Ext(0L), true, Ext(1, 2), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))},
                  {Ext(1, 2), false, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});
  check_segments(qb.vee,
                 {{Ext(0L), true, Ext(1, 2), false, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))},
                  {Ext(1, 2), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});

  const PiecewiseMonotone ti = infinite_generator();
  check_segments(pseudo_inverse(ti),
                 {{Ext(0L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))}});
  check_segments(weak_pseudo_inverse(ti),
                 {{Ext(0L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});
  const QuasiInverseBounds qi = quasi_inverse_bounds(ti);
  check_segments(qi.wedge,
                 {{Ext(0L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))}});
  check_segments(qi.vee,
                 {{Ext(0L), true, Ext::inf(), false, SegmentKind::CONSTANT,
                   Formula::constant(Rat(0))},
                  {Ext::inf(), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});
}

TEST_CASE("identity and complement generators invert to clamped maps") {
  const Formula id = Formula::affine(Rat(1), Rat(0));
  const Formula one_minus = Formula::affine(Rat(-1), Rat(1));
  const PiecewiseMonotone tid = identity_generator();
  check_segments(pseudo_inverse(tid),
                 {{Ext(0L), true, Ext(1L), false, SegmentKind::AFFINE, id},
                  {Ext(1L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});
  check_segments(weak_pseudo_inverse(tid),
                 {{Ext(0L), true, Ext(1L), false, SegmentKind::AFFINE, id},
                  {Ext(1L), true, Ext::inf(), true, SegmentKind::CONSTANT,
                   Formula::constant(Rat(1))}});

  const PiecewiseMonotone trev = gen_one_minus_x();
  const PiecewiseMonotone prev = pseudo_inverse(trev);
  const PiecewiseMonotone wrev = weak_pseudo_inverse(trev);
  CHECK(prev.direction() == Direction::NON_INCREASING);
  CHECK(wrev.direction() == Direction::NON_INCREASING);
  check_segments(
      prev, {{Ext(0L), true, Ext(1L), false, SegmentKind::AFFINE, one_minus},
             {Ext(1L), true, Ext::inf(), true, SegmentKind::CONSTANT,
              Formula::constant(Rat(0))}});
  check_segments(
      wrev, {{Ext(0L), true, Ext(1L), false, SegmentKind::AFFINE, one_minus},
             {Ext(1L), true, Ext::inf(), true, SegmentKind::CONSTANT,
              Formula::constant(Rat(0))}});
}

TEST_CASE("inverse outputs are valid partitions of the value carrier") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    for (const PiecewiseMonotone& g :
         {pseudo_inverse(t), weak_pseudo_inverse(t)}) {
      CHECK(g.domain_lo() == Ext(0L));
      CHECK(g.domain_hi() == Ext::inf());
      CHECK(validate(g).ok());
      CHECK(subset_of(range_of(g),
                      IntervalPointSet::interval(t.domain_lo(), true,
                                                 t.domain_hi(), true)));
    }
  }
}

TEST_CASE("weak inverse is right-continuous and never below the pseudo") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    const PiecewiseMonotone p = pseudo_inverse(t);
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    if (t.direction() == Direction::NON_DECREASING) {
      const ValidationReport vr = validate(w);
      CHECK(w.direction() == Direction::NON_DECREASING);
      CHECK(vr.right_continuous);
      // Below the first generated value the weak inverse is still zero.
      const Ext t0 = t.eval(t.domain_lo());
      if (t0 > Ext(0L)) {
        CHECK(w.eval(Ext(0L)) == Ext(0L));
        CHECK(w.eval(Ext(Rat(t0.rat() / 2))) == Ext(0L));
      }
    }
    for (const Ext& y : probe_values(t)) {
      CHECK(p.eval(y) <= w.eval(y));
    }
  }
}

TEST_CASE("applying the weak inverse never lowers the generated value") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    std::vector<Ext> xs = t.breakpoints();
    for (long k = 0; k <= 100; ++k) xs.push_back(Ext(Rat(k, 100)));
    for (const Ext& x : xs) {
      const Ext v = t.eval(x);
      CHECK(t.eval(w.eval(v)) >= v);
    }
  }
}

TEST_CASE("plateau witnesses exist exactly where the round trip overshoots") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    for (long k = 0; k < 40; ++k) {
      const Ext x0{Rat(k, 40)};
      const Ext v = t.eval(x0);
      const Ext alpha = w.eval(v);
      const auto wit = plateau_witness(t, x0);
      CAPTURE(k);
      CHECK(wit.has_value() == (t.eval(alpha) != v));
      if (wit.has_value()) {
        CHECK(*wit > 0);
        const Ext xw{Rat(x0.rat() + *wit)};
        // t stays level from x0 up to the witness offset, then has jumped.
        CHECK(t.eval(xw) != v);
        if (t.direction() == Direction::NON_DECREASING) {
          CHECK(t.eval(Ext(Rat(x0.rat() + *wit / 2))) == v);
          CHECK(t.eval(xw) > v);
        }
      }
    }
  }
}

TEST_CASE("plateau witness spot values and domain guards") {
  const PiecewiseMonotone t = gen_staircase();
  CHECK(plateau_witness(t, Ext(1, 4)) == std::nullopt);
  CHECK(plateau_witness(t, Ext(3, 10)) == std::nullopt);
  const auto w1 = plateau_witness(t, Ext(3, 4));
  REQUIRE(w1.has_value());
  CHECK(*w1 == Rat(1, 8));
  const auto w2 = plateau_witness(t, Ext(4, 5));
  REQUIRE(w2.has_value());
  CHECK(*w2 == Rat(3, 40));

  // Flat stretch ending exactly at the generator value: no witness.
  const PiecewiseMonotone td = gen_double_identity();
  CHECK(plateau_witness(td, Ext(3, 10)) == std::nullopt);
  CHECK(plateau_witness(td, Ext(1, 4)) == std::nullopt);

  CHECK_THROWS_AS(plateau_witness(t, Ext(1L)), DomainError);
  CHECK_THROWS_AS(plateau_witness(t, Ext(2L)), DomainError);
  CHECK_THROWS_AS(plateau_witness(t, Ext::inf()), DomainError);
  CHECK_THROWS_AS(plateau_witness(t, Ext(Rat(-1))), DomainError);
}

TEST_CASE("identity report classifies every fixture consistently") {
  for (const PiecewiseMonotone& t : all_fixtures()) {
    const IdentityReport rep = inverse_identities_report(t);
    const PiecewiseMonotone w = weak_pseudo_inverse(t);
    const PiecewiseMonotone p = pseudo_inverse(t);
    // The two sides of the equivalence are computed independently and must
    // agree for every fixture.
    CHECK(rep.equivalence_holds);
    CHECK(rep.above_identity_holds);
    CHECK_FALSE(rep.above_identity_counterexample.has_value());
    if (rep.round_trip_counterexample.has_value()) {
      CHECK_FALSE(rep.round_trip_holds);
      const Ext x = *rep.round_trip_counterexample;
      const Ext v = t.eval(x);
      CHECK(t.eval(w.eval(v)) != v);
    }
    if (rep.weak_equals_pseudo_counterexample.has_value()) {
      CHECK_FALSE(rep.weak_equals_pseudo);
      const Ext y = *rep.weak_equals_pseudo_counterexample;
      CHECK(w.eval(y) != p.eval(y));
    }
    if (rep.plateau_point.has_value()) {
      CHECK_FALSE(rep.plateau_set_empty);
      // The reported point sits on a flat stretch whose supremum escapes.
      const Ext x = *rep.plateau_point;
      const auto wit = plateau_witness(t, x);
      CHECK(wit.has_value());
    }
    const ValidationReport vr = validate(t);
    CHECK(rep.strictly_monotone == vr.strictly_monotone);
    CHECK(rep.left_continuous == vr.left_continuous);
  }
}

TEST_CASE("identity report flags for specific generators") {
  const IdentityReport stair = inverse_identities_report(gen_staircase());
  CHECK_FALSE(stair.round_trip_holds);
  CHECK_FALSE(stair.plateau_set_empty);
  CHECK_FALSE(stair.weak_equals_pseudo);
  CHECK(stair.equivalence_holds);
  REQUIRE(stair.plateau_point.has_value());
  CHECK(Ext(3, 4) <= *stair.plateau_point);
  CHECK(*stair.plateau_point < Ext(7, 8));

  const IdentityReport dbl = inverse_identities_report(gen_double_identity());
  CHECK(dbl.round_trip_holds);
  CHECK(dbl.plateau_set_empty);
  CHECK_FALSE(dbl.weak_equals_pseudo);
  CHECK(dbl.equivalence_holds);

  const IdentityReport kink = inverse_identities_report(gen_kinked_doubling());
  CHECK(kink.round_trip_holds);
  CHECK(kink.plateau_set_empty);
  CHECK(kink.weak_equals_pseudo);
  CHECK(kink.strictly_monotone);

  const IdentityReport rev = inverse_identities_report(gen_one_minus_x());
  CHECK(rev.round_trip_holds);
  CHECK(rev.weak_equals_pseudo);
  CHECK(rev.strictly_monotone);

  const IdentityReport steps =
      inverse_identities_report(gen_right_continuous_steps());
  CHECK_FALSE(steps.round_trip_holds);
  CHECK_FALSE(steps.plateau_set_empty);
  CHECK(steps.equivalence_holds);
}

}  // namespace genalg
