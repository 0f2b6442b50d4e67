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

#include "genalg/generator.hpp"

namespace genalg {

// Bundled example generators exercising every segment kind and continuity
// mix. Each is a valid piecewise monotone function on [0,1].

// x | 1/4 | x+1/2 | 2 | x+5/4 with mixed open/closed ends and jumps.
PiecewiseMonotone gen_staircase();
// x/2, a plateau at 1/2, then the identity tail.
PiecewiseMonotone gen_half_slope();
// 1+x, two plateaus, 2+x, reciprocal blow-up 1/(1-x), inf at the top point.
PiecewiseMonotone gen_shifted_reciprocal();
// 1 at x=0 only, inf on (0,1].
PiecewiseMonotone gen_pinch_inf();
// Identity with a flat stretch: x | 1/4 on (1/4,1/2] | x.
PiecewiseMonotone gen_double_identity();
// 5x | 2 | 10x: one interior plateau between two slopes.
PiecewiseMonotone gen_plateau_between_slopes();
// 1 on [0,1/2], 2 on (1/2,1]: two plateaus only.
PiecewiseMonotone gen_flat_then_step();
// 1 on [0,1/2], 4x on (1/2,1]: bottom plateau, then a slope.
PiecewiseMonotone gen_flat_then_slope();
// 5x | 2 | 4: slope then two plateaus.
PiecewiseMonotone gen_slope_two_plateaus();
// 2x on [0,1/2], 4x on (1/2,1]: strictly increasing with one jump.
PiecewiseMonotone gen_kinked_doubling();
// 4 on [0,1/2], 2x+4 on (1/2,1]: constant bottom, affine top.
PiecewiseMonotone gen_const_then_affine();
// x | 1/2 on (1/2,3/4) | 3/4 on [3/4,1]: right-continuous step placement.
PiecewiseMonotone gen_right_continuous_steps();
// 1-x on [0,1], non-increasing.
PiecewiseMonotone gen_one_minus_x();
// x on [0,1]: the identity, continuous and strictly increasing.
PiecewiseMonotone gen_identity();
// x/(1-x) on [0,1]: strictly increasing onto [0,inf], inf attained at 1.
PiecewiseMonotone gen_moebius_ramp();
// x on [0,1/2], x+1 on (1/2,1]: strictly increasing with one range gap.
PiecewiseMonotone gen_split_shift();

}  // namespace genalg
