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

#include "genalg/errors.hpp"
#include "genalg/semigroup.hpp"

using namespace genalg;

namespace {

IntervalPointSet iv(const char* lo, bool loc, const char* hi, bool hic) {
  return IntervalPointSet::interval(ext_from_string(lo), loc,
                                    ext_from_string(hi), hic);
}

// Dense-ish sample of members of a set, for image oracles.
std::vector<Ext> members_of(const IntervalPointSet& s) {
  std::vector<Ext> out;
  for (const auto& p : s.parts()) {
    if (p.lo_closed) out.push_back(p.lo);
    if (p.hi_closed) out.push_back(p.hi);
    if (p.lo == p.hi) continue;
    if (p.hi.is_inf()) {
      for (int i = 1; i <= 5; ++i) out.push_back(Ext(p.lo.rat() + i));
      continue;
    }
    const Rat w = p.hi.rat() - p.lo.rat();
    for (int i = 1; i <= 7; ++i) out.push_back(Ext(p.lo.rat() + w * i / 8));
  }
  return out;
}

}  // namespace

TEST_CASE("built-in evaluation including infinity") {
  auto sum = make_sum();
  auto mx = make_max();
  auto lp = make_linprod();
  CHECK(f_eval(sum, Ext(1L, 4L), Ext(1L, 2L)) == Ext(3L, 4L));
  CHECK(f_eval(sum, Ext(2L), Ext::inf()).is_inf());
  CHECK(f_eval(mx, Ext(1L, 4L), Ext(1L, 2L)) == Ext(1L, 2L));
  CHECK(f_eval(mx, Ext::inf(), Ext(0L)).is_inf());
  CHECK(f_eval(lp, Ext(1L), Ext(1L)) == Ext(3L));
  CHECK(f_eval(lp, Ext(1L, 2L), Ext(2L)) == Ext(7L, 2L));
  CHECK(f_eval(lp, Ext(0L), Ext(5L)) == Ext(5L));
  // Limit convention at the corner: the absorbing element wins.
  CHECK(f_eval(lp, Ext(0L), Ext::inf()).is_inf());
  CHECK(sum.strict);
  CHECK(lp.strict);
  CHECK(!mx.strict);
  CHECK(sum.has_neutral);
  CHECK(sum.neutral == Ext(0L));
}

TEST_CASE("image of interval sets matches sampled evaluation") {
  const std::vector<IntervalPointSet> cases = {
      unite(iv("0", true, "1/4", true), iv("1/2", false, "1", true)),
      unite(IntervalPointSet::point(Ext(2L)), iv("3", false, "inf", false)),
      unite(iv("0", true, "1", false), IntervalPointSet::point(Ext::inf())),
      IntervalPointSet::point(Ext(0L)),
  };
  for (const auto& f : {make_sum(), make_max(), make_linprod()}) {
    for (const auto& a : cases) {
      for (const auto& b : cases) {
        auto img = f_image(f, a, b);
        for (const auto& x : members_of(a)) {
          for (const auto& y : members_of(b)) {
            CAPTURE(f.name());
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            CHECK(img.member(f_eval(f, x, y)));
          }
        }
      }
    }
  }
}

TEST_CASE("image endpoint attainment is exact") {
  auto sum = make_sum();
  // [0,1) + (2,3] = (2,4): neither corner is attained.
  CHECK(f_image(sum, iv("0", true, "1", false), iv("2", false, "3", true)) ==
        iv("2", false, "4", false));
  // [1,inf) + [0,2]: supremum inf is not attained.
  CHECK(f_image(sum, iv("1", true, "inf", false), iv("0", true, "2", true)) ==
        iv("1", true, "inf", false));
  // {inf} absorbs everything.
  CHECK(f_image(sum, IntervalPointSet::point(Ext::inf()),
                iv("0", true, "1", false)) ==
        IntervalPointSet::point(Ext::inf()));

  auto mx = make_max();
  // max over [0,2] x (1,3) = (1,3).
  CHECK(f_image(mx, iv("0", true, "2", true), iv("1", false, "3", false)) ==
        iv("1", false, "3", false));
  // max over [0,1) x {2} = {2}.
  CHECK(f_image(mx, iv("0", true, "1", false), IntervalPointSet::point(Ext(2L))) ==
        IntervalPointSet::point(Ext(2L)));
  // Equal open suprema stay open: [0,1) x [0,1) -> [0,1).
  CHECK(f_image(mx, iv("0", true, "1", false), iv("0", true, "1", false)) ==
        iv("0", true, "1", false));

  auto lp = make_linprod();
  // phi-product on points: F(1,2) = 1+2+2 = 5.
  CHECK(f_image(lp, IntervalPointSet::point(Ext(1L)),
                IntervalPointSet::point(Ext(2L))) ==
        IntervalPointSet::point(Ext(5L)));
}

TEST_CASE("table construction validates the axioms") {
  const Ext zero(0L), one(1L), two(2L);
  // max on {0,1,2}.
  auto f = make_table({zero, one, two},
                      {{zero, one, two}, {one, one, two}, {two, two, two}});
  CHECK(f.kind == SemigroupKind::TABLE);
  CHECK(!f.strict);
  CHECK(f.has_neutral);
  CHECK(f.neutral == zero);
  CHECK(f_eval(f, one, two) == two);

  // Breaking associativity: F(F(1,1),1) would need F(2,1)=2 vs F(1,2)=1.
  CHECK_THROWS_AS(make_table({zero, one, two}, {{zero, one, two},
                                                {one, two, two},
                                                {two, two, one}}),
                  PreconditionViolated);
  // Value below max.
  CHECK_THROWS_AS(make_table({zero, one}, {{zero, zero}, {zero, one}}),
                  PreconditionViolated);
  // Value outside the carrier.
  CHECK_THROWS_AS(make_table({zero, one}, {{zero, one}, {one, Ext(3L)}}),
                  PreconditionViolated);
}

TEST_CASE("axiom evidence finds no violations for built-ins") {
  for (const auto& f : {make_sum(), make_max(), make_linprod()}) {
    auto rep = gamma_evidence(f, 12);
    CAPTURE(f.name());
    CHECK(rep.all_ok);
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.triples_checked > 0);
  }
}

TEST_CASE("idempotent elements in the probe set") {
  auto probe = unite(iv("0", true, "1", true), IntervalPointSet::point(Ext::inf()));
  CHECK(idempotents_of(make_max(), probe) == probe);
  auto fixed = idempotents_of(make_sum(), probe);
  CHECK(fixed == unite(IntervalPointSet::point(Ext(0L)),
                       IntervalPointSet::point(Ext::inf())));
  CHECK(idempotents_of(make_linprod(), iv("1/2", true, "1", true)).is_empty());
}
