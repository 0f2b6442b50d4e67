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

#include "genalg/fixtures.hpp"

namespace genalg {
namespace {

Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Segment seg(const Ext& lo, bool lc, const Ext& hi, bool hc, SegmentKind kind,
            const Formula& f) {
  return Segment{lo, lc, hi, hc, kind, f};
}

Segment s_const(const Ext& lo, bool lc, const Ext& hi, bool hc, const Rat& v) {
  return seg(lo, lc, hi, hc, SegmentKind::CONSTANT, Formula::constant(v));
}

Segment s_affine(const Ext& lo, bool lc, const Ext& hi, bool hc, const Rat& a,
                 const Rat& b) {
  return seg(lo, lc, hi, hc, SegmentKind::AFFINE, Formula::affine(a, b));
}

PiecewiseMonotone on_unit(std::vector<Segment> segs,
                          Direction dir = Direction::NON_DECREASING) {
  return PiecewiseMonotone(std::move(segs), dir, Ext(0L), Ext(1L));
}

}  // namespace

PiecewiseMonotone gen_staircase() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 4), true, Rat(1), Rat(0)),
      s_const(Ext(1, 4), false, Ext(1, 2), true, q(1, 4)),
      s_affine(Ext(1, 2), false, Ext(3, 4), false, Rat(1), q(1, 2)),
      s_const(Ext(3, 4), true, Ext(7, 8), false, Rat(2)),
      s_affine(Ext(7, 8), true, Ext(1L), true, Rat(1), q(5, 4)),
  });
}

PiecewiseMonotone gen_half_slope() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 2), true, q(1, 2), Rat(0)),
      s_const(Ext(1, 2), false, Ext(3, 4), true, q(1, 2)),
      s_affine(Ext(3, 4), false, Ext(1L), true, Rat(1), Rat(0)),
  });
}

PiecewiseMonotone gen_shifted_reciprocal() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 5), true, Rat(1), Rat(1)),
      s_const(Ext(1, 5), false, Ext(1, 4), true, q(6, 5)),
      s_const(Ext(1, 4), false, Ext(1, 2), true, q(3, 2)),
      s_affine(Ext(1, 2), false, Ext(3, 4), true, Rat(1), Rat(2)),
      seg(Ext(3, 4), false, Ext(1L), false, SegmentKind::RECIPROCAL,
          Formula::reciprocal(Rat(1), Rat(1))),
      seg(Ext(1L), true, Ext(1L), true, SegmentKind::POINT_INF,
          Formula::point_inf()),
  });
}

PiecewiseMonotone gen_pinch_inf() {
  return on_unit({
      s_const(Ext(0L), true, Ext(0L), true, Rat(1)),
      seg(Ext(0L), false, Ext(1L), true, SegmentKind::POINT_INF,
          Formula::point_inf()),
  });
}

PiecewiseMonotone gen_double_identity() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 4), true, Rat(1), Rat(0)),
      s_const(Ext(1, 4), false, Ext(1, 2), true, q(1, 4)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(1), Rat(0)),
  });
}

PiecewiseMonotone gen_plateau_between_slopes() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 5), true, Rat(5), Rat(0)),
      s_const(Ext(1, 5), false, Ext(1, 2), true, Rat(2)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(10), Rat(0)),
  });
}

PiecewiseMonotone gen_flat_then_step() {
  return on_unit({
      s_const(Ext(0L), true, Ext(1, 2), true, Rat(1)),
      s_const(Ext(1, 2), false, Ext(1L), true, Rat(2)),
  });
}

PiecewiseMonotone gen_flat_then_slope() {
  return on_unit({
      s_const(Ext(0L), true, Ext(1, 2), true, Rat(1)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(4), Rat(0)),
  });
}

PiecewiseMonotone gen_slope_two_plateaus() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(2, 5), true, Rat(5), Rat(0)),
      s_const(Ext(2, 5), false, Ext(1, 2), true, Rat(2)),
      s_const(Ext(1, 2), false, Ext(1L), true, Rat(4)),
  });
}

PiecewiseMonotone gen_kinked_doubling() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 2), true, Rat(2), Rat(0)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(4), Rat(0)),
  });
}

PiecewiseMonotone gen_const_then_affine() {
  return on_unit({
      s_const(Ext(0L), true, Ext(1, 2), true, Rat(4)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(2), Rat(4)),
  });
}

PiecewiseMonotone gen_right_continuous_steps() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 2), true, Rat(1), Rat(0)),
      s_const(Ext(1, 2), false, Ext(3, 4), false, q(1, 2)),
      s_const(Ext(3, 4), true, Ext(1L), true, q(3, 4)),
  });
}

PiecewiseMonotone gen_one_minus_x() {
  return on_unit({s_affine(Ext(0L), true, Ext(1L), true, Rat(-1), Rat(1))},
                 Direction::NON_INCREASING);
}

PiecewiseMonotone gen_identity() {
  return on_unit({s_affine(Ext(0L), true, Ext(1L), true, Rat(1), Rat(0))});
}

PiecewiseMonotone gen_moebius_ramp() {
  return on_unit({
      seg(Ext(0L), true, Ext(1L), false, SegmentKind::MOEBIUS,
          Formula::moebius(Rat(1), Rat(0), Rat(-1), Rat(1))),
      seg(Ext(1L), true, Ext(1L), true, SegmentKind::POINT_INF,
          Formula::point_inf()),
  });
}

PiecewiseMonotone gen_split_shift() {
  return on_unit({
      s_affine(Ext(0L), true, Ext(1, 2), true, Rat(1), Rat(0)),
      s_affine(Ext(1, 2), false, Ext(1L), true, Rat(1), Rat(1)),
  });
}

}  // namespace genalg
