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

#include "genalg/rational.hpp"

namespace genalg {

// One maximal run of a set: an interval with open or closed ends. Isolated
// points are degenerate parts with lo == hi and both ends closed. lo == inf
// only for the point {inf}; hi == inf with hi_closed false means the part
// approaches but excludes infinity.
struct IntervalPart {
  Ext lo;
  bool lo_closed = true;
  Ext hi;
  bool hi_closed = true;
};

bool operator==(const IntervalPart& a, const IntervalPart& b);

// A finite union of intervals and isolated points over the extended line,
// kept in a unique normal form: parts sorted, pairwise disjoint, and
// non-adjacent (no two parts can merge). Equality of normal forms is
// semantic set equality.
class IntervalPointSet {
 public:
  IntervalPointSet() = default;

  static IntervalPointSet empty_set() { return IntervalPointSet(); }
  static IntervalPointSet point(const Ext& x);
  // Normalizes; an order-empty description yields the empty set.
  static IntervalPointSet interval(const Ext& lo, bool lo_closed,
                                   const Ext& hi, bool hi_closed);
  static IntervalPointSet from_parts(std::vector<IntervalPart> parts);
  // The whole carrier [0, inf].
  static IntervalPointSet carrier();

  const std::vector<IntervalPart>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_single_point() const;
  bool member(const Ext& x) const;

  // Smallest element and whether it is attained (always attained here since
  // parts carry their own endpoints; attained == lo_closed of first part).
  // Requires nonempty.
  Ext inf_value() const;
  bool inf_attained() const;
  Ext sup_value() const;
  bool sup_attained() const;

  // Some member of the set; finite whenever a finite member exists.
  Ext pick_point() const;

  friend bool operator==(const IntervalPointSet& a, const IntervalPointSet& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const IntervalPointSet& a, const IntervalPointSet& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  std::vector<IntervalPart> parts_;
};

IntervalPointSet unite(const IntervalPointSet& a, const IntervalPointSet& b);
IntervalPointSet intersect(const IntervalPointSet& a,
                           const IntervalPointSet& b);
// Complement relative to [0, inf]. Requires a subset of the carrier.
IntervalPointSet complement(const IntervalPointSet& a);
// a minus b. Requires both subsets of the carrier.
IntervalPointSet subtract(const IntervalPointSet& a, const IntervalPointSet& b);
bool subset_of(const IntervalPointSet& inner, const IntervalPointSet& outer);

// Open-closed order hull (inf S, sup S], right end included only when the
// supremum is attained in S. Empty for the empty set and for singletons.
IntervalPointSet o_hull(const IntervalPointSet& s);

}  // namespace genalg
