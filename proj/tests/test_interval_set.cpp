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

#include <doctest.h>

#include <vector>

#include "genalg/interval_set.hpp"

using namespace genalg;

namespace {

IntervalPointSet iv(const char* lo, bool loc, const char* hi, bool hic) {
  return IntervalPointSet::interval(ext_from_string(lo), loc,
                                    ext_from_string(hi), hic);
}

// Probe values around every endpoint of both operand sets, used to compare
// set operations against pointwise boolean logic.
std::vector<Ext> probes_for(const IntervalPointSet& a,
                            const IntervalPointSet& b) {
  std::vector<Ext> ends;
  for (const auto* s : {&a, &b}) {
    for (const auto& p : s->parts()) {
      ends.push_back(p.lo);
      ends.push_back(p.hi);
    }
  }
  std::vector<Ext> out = {Ext(0L), Ext::inf()};
  const Rat eps(1, 1000000);
  for (const auto& e : ends) {
    if (e.is_inf()) continue;
    out.push_back(e);
    out.push_back(Ext(e.rat() - eps));
    out.push_back(Ext(e.rat() + eps));
    out.push_back(Ext(e.rat() + Rat(12345, 10000)));
  }
  return out;
}

}  // namespace

TEST_CASE("normalization produces a unique merged form") {
  auto s = IntervalPointSet::from_parts({
      IntervalPart{Ext(2L), true, Ext(1L), true},     // inverted: dropped
      IntervalPart{Ext(0L), true, Ext(1L), false},    // [0,1)
      IntervalPart{Ext(1L), true, Ext(2L), true},     // [1,2] merges
      IntervalPart{Ext(3L), false, Ext(3L), true},    // (3,3]: empty
      IntervalPart{Ext(4L), true, Ext(4L), true},     // point
      IntervalPart{Ext(5L), false, Ext::inf(), false} // (5,inf)
  });
  REQUIRE(s.parts().size() == 3);
  CHECK(s.parts()[0] == IntervalPart{Ext(0L), true, Ext(2L), true});
  CHECK(s.parts()[1] == IntervalPart{Ext(4L), true, Ext(4L), true});
  CHECK(s.parts()[2] == IntervalPart{Ext(5L), false, Ext::inf(), false});
  CHECK(s == IntervalPointSet::from_parts(s.parts()));
  CHECK(s.to_string() == "[0,2] u {4} u (5,inf)");

  // (1,2) u (2,3) keeps the hole at 2; adding {2} closes it.
  auto holed = unite(iv("1", false, "2", false), iv("2", false, "3", false));
  CHECK(holed.parts().size() == 2);
  auto filled = unite(holed, IntervalPointSet::point(Ext(2L)));
  CHECK(filled == iv("1", false, "3", false));
}

TEST_CASE("membership honors end closedness and infinity") {
  auto s = unite(iv("0", true, "1", false),
                 IntervalPointSet::point(Ext::inf()));
  CHECK(s.member(Ext(0L)));
  CHECK(s.member(Ext(1L, 2L)));
  CHECK(!s.member(Ext(1L)));
  CHECK(s.member(Ext::inf()));
  CHECK(!s.member(Ext(-1L)));
  auto t = iv("1", false, "inf", false);
  CHECK(!t.member(Ext(1L)));
  CHECK(t.member(Ext(1000000L)));
  CHECK(!t.member(Ext::inf()));
}

TEST_CASE("set operations agree with pointwise logic on probes") {
  const std::vector<IntervalPointSet> cases = {
      unite(iv("0", true, "1/4", true), iv("1", false, "5/4", false)),
      unite(IntervalPointSet::point(Ext(2L)), iv("17/8", true, "9/4", true)),
      unite(iv("1/2", false, "3/4", true),
            IntervalPointSet::point(Ext::inf())),
      iv("0", true, "inf", true),
      IntervalPointSet::empty_set(),
      unite(iv("5/2", false, "11/4", true), iv("4", false, "inf", true)),
  };
  for (const auto& a : cases) {
    for (const auto& b : cases) {
      auto u = unite(a, b);
      auto n = intersect(a, b);
      auto d = subtract(a, b);
      auto c = complement(a);
      for (const auto& x : probes_for(a, b)) {
        if (x.is_finite() && x.rat() < 0) continue;
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CAPTURE(ext_to_string(x));
        CHECK(u.member(x) == (a.member(x) || b.member(x)));
        CHECK(n.member(x) == (a.member(x) && b.member(x)));
        CHECK(d.member(x) == (a.member(x) && !b.member(x)));
        CHECK(c.member(x) == !a.member(x));
      }
      CHECK(subset_of(n, a));
      CHECK(subset_of(a, u));
      CHECK(intersect(a, c).is_empty());
      CHECK(unite(a, c) == IntervalPointSet::carrier());
    }
  }
}

TEST_CASE("order hull keeps supremum attainment") {
  // Nonempty sets hull to a single left-open interval.
  auto s = unite(iv("1/4", true, "1/2", false), IntervalPointSet::point(Ext(2L)));
  auto h = o_hull(s);
  REQUIRE(h.parts().size() == 1);
  CHECK(h.parts()[0] == IntervalPart{Ext(1L, 4L), false, Ext(2L), true});

  // Unattained supremum stays excluded.
  auto s2 = iv("0", true, "1", false);
  CHECK(o_hull(s2) == iv("0", false, "1", false));

  // Singletons and the empty set hull to nothing.
  CHECK(o_hull(IntervalPointSet::point(Ext(3L))).is_empty());
  CHECK(o_hull(IntervalPointSet::empty_set()).is_empty());

  // Unbounded set including infinity.
  auto s3 = unite(iv("1", false, "2", true), IntervalPointSet::point(Ext::inf()));
  CHECK(o_hull(s3) == iv("1", false, "inf", true));
}

TEST_CASE("extrema and representative points") {
  auto s = unite(iv("1/2", false, "3/4", true), IntervalPointSet::point(Ext::inf()));
  CHECK(s.inf_value() == Ext(1L, 2L));
  CHECK(!s.inf_attained());
  CHECK(s.sup_value().is_inf());
  CHECK(s.sup_attained());
  CHECK(s.member(s.pick_point()));
  CHECK(s.pick_point().is_finite());
  CHECK(IntervalPointSet::point(Ext::inf()).pick_point().is_inf());
  auto unbounded = iv("3", false, "inf", false);
  CHECK(unbounded.member(unbounded.pick_point()));
  CHECK(unbounded.pick_point().is_finite());
}
