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

#include "genalg/rational.hpp"

using namespace genalg;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_to_string(rat_from_string("2/6")) == "1/3");
  CHECK(rat_to_string(rat_from_string("7")) == "7");
  CHECK(rat_to_string(rat_from_string("-3/9")) == "-1/3");
  CHECK(rat_from_string("17/8") == Rat(17, 8));
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("inf"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
}

TEST_CASE("extended values order and arithmetic") {
  const Ext half(1L, 2L);
  const Ext two(2L);
  const Ext inf = Ext::inf();
  CHECK(half < two);
  CHECK(two < inf);
  CHECK(!(inf < inf));
  CHECK(inf == inf);
  CHECK(ext_add(two, inf).is_inf());
  CHECK(ext_add(half, half) == Ext(1L));
  CHECK(ext_sub(inf, two).is_inf());
  CHECK(ext_sub(half, two) == Ext(-3L, 2L));
  CHECK(ext_max(half, inf).is_inf());
  CHECK(ext_min(half, inf) == half);
  CHECK(ext_from_string("inf").is_inf());
  CHECK(ext_from_string("5/4") == Ext(5L, 4L));
  CHECK(ext_to_string(inf) == "inf");
  CHECK(ext_to_string(Ext(9L, 4L)) == "9/4");
}

TEST_CASE("decimal rendering uses the exact rational") {
  CHECK(rat_to_decimal(Rat(1, 2)) == "0.5");
  CHECK(rat_to_decimal(Rat(1, 3)) == "0.333333333333");
  CHECK(rat_to_decimal(Rat(1, 7)) == "0.142857142857");
  CHECK(rat_to_decimal(Rat(0)) == "0");
  CHECK(rat_to_decimal(Rat(2)) == "2");
  CHECK(rat_to_decimal(Rat(10)) == "10");
  CHECK(rat_to_decimal(Rat(19, 20)) == "0.95");
  CHECK(rat_to_decimal(Rat(-7, 8)) == "-0.875");
  CHECK(rat_to_decimal(Rat(2, 3), 3) == "0.667");
}
