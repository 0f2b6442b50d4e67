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

#include "genalg/interval_set.hpp"

#include <algorithm>
#include <sstream>

#include "genalg/errors.hpp"

namespace genalg {

namespace {

// A part is nonempty iff lo < hi, or lo == hi with both ends closed.
bool part_valid(const IntervalPart& p) {
  if (p.lo < p.hi) return true;
  if (p.lo == p.hi) return p.lo_closed && p.hi_closed;
  return false;
}

// True when a part ending at (hi, hi_closed) and a part starting at
// (lo, lo_closed) with hi == lo overlap or touch without a hole.
bool can_merge_at(const Ext& hi, bool hi_closed, const Ext& lo,
                  bool lo_closed) {
  if (lo < hi) return true;
  if (lo == hi) return hi_closed || lo_closed;
  return false;
}

}  // namespace

bool operator==(const IntervalPart& a, const IntervalPart& b) {
  return a.lo == b.lo && a.lo_closed == b.lo_closed && a.hi == b.hi &&
         a.hi_closed == b.hi_closed;
}

IntervalPointSet IntervalPointSet::point(const Ext& x) {
  return from_parts({IntervalPart{x, true, x, true}});
}

IntervalPointSet IntervalPointSet::interval(const Ext& lo, bool lo_closed,
                                            const Ext& hi, bool hi_closed) {
  return from_parts({IntervalPart{lo, lo_closed, hi, hi_closed}});
}

IntervalPointSet IntervalPointSet::carrier() {
  return interval(Ext(0L), true, Ext::inf(), true);
}

IntervalPointSet IntervalPointSet::from_parts(std::vector<IntervalPart> parts) {
  std::vector<IntervalPart> kept;
  kept.reserve(parts.size());
  for (auto& p : parts) {
    if (p.lo.is_inf() && p.hi.is_inf()) {
      // Only the point {inf} survives at the top.
      if (p.lo_closed && p.hi_closed) kept.push_back(p);
      continue;
    }
    if (part_valid(p)) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(),
            [](const IntervalPart& a, const IntervalPart& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              if (a.lo_closed != b.lo_closed) return a.lo_closed;
              if (a.hi != b.hi) return a.hi < b.hi;
              return b.hi_closed;
            });
  IntervalPointSet out;
  for (auto& p : kept) {
    if (!out.parts_.empty()) {
      IntervalPart& last = out.parts_.back();
      if (can_merge_at(last.hi, last.hi_closed, p.lo, p.lo_closed)) {
        if (p.hi > last.hi) {
          last.hi = p.hi;
          last.hi_closed = p.hi_closed;
        } else if (p.hi == last.hi) {
          last.hi_closed = last.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.parts_.push_back(std::move(p));
  }
  return out;
}

bool IntervalPointSet::is_single_point() const {
  return parts_.size() == 1 && parts_[0].lo == parts_[0].hi;
}

bool IntervalPointSet::member(const Ext& x) const {
  for (const auto& p : parts_) {
    if (x < p.lo) return false;
    if (x == p.lo && !p.lo_closed) continue;
    if (x < p.hi) return true;
    if (x == p.hi && p.hi_closed) return true;
  }
  return false;
}

Ext IntervalPointSet::inf_value() const {
  if (parts_.empty()) throw InternalError("inf_value of empty set");
  return parts_.front().lo;
}

bool IntervalPointSet::inf_attained() const {
  if (parts_.empty()) throw InternalError("inf_attained of empty set");
  return parts_.front().lo_closed;
}

Ext IntervalPointSet::sup_value() const {
  if (parts_.empty()) throw InternalError("sup_value of empty set");
  return parts_.back().hi;
}

bool IntervalPointSet::sup_attained() const {
  if (parts_.empty()) throw InternalError("sup_attained of empty set");
  return parts_.back().hi_closed;
}

Ext IntervalPointSet::pick_point() const {
  if (parts_.empty()) throw InternalError("pick_point of empty set");
  for (const auto& p : parts_) {
    if (p.lo.is_inf()) break;  // the {inf} point; prefer a finite member
    if (p.lo == p.hi) return p.lo;
    if (p.lo_closed) return p.lo;
    if (p.hi.is_inf()) return Ext(p.lo.rat() + 1);
    return Ext((p.lo.rat() + p.hi.rat()) / 2);
  }
  return Ext::inf();
}

std::string IntervalPointSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : parts_) {
    if (!first) os << " u ";
    first = false;
    if (p.lo == p.hi) {
      os << "{" << p.lo << "}";
    } else {
      os << (p.lo_closed ? "[" : "(") << p.lo << "," << p.hi
         << (p.hi_closed ? "]" : ")");
    }
  }
  return os.str();
}

IntervalPointSet unite(const IntervalPointSet& a, const IntervalPointSet& b) {
  std::vector<IntervalPart> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalPointSet::from_parts(std::move(parts));
}

IntervalPointSet intersect(const IntervalPointSet& a,
                           const IntervalPointSet& b) {
  std::vector<IntervalPart> parts;
  for (const auto& pa : a.parts()) {
    for (const auto& pb : b.parts()) {
      IntervalPart p;
      if (pa.lo > pb.lo) {
        p.lo = pa.lo;
        p.lo_closed = pa.lo_closed;
      } else if (pb.lo > pa.lo) {
        p.lo = pb.lo;
        p.lo_closed = pb.lo_closed;
      } else {
        p.lo = pa.lo;
        p.lo_closed = pa.lo_closed && pb.lo_closed;
      }
      if (pa.hi < pb.hi) {
        p.hi = pa.hi;
        p.hi_closed = pa.hi_closed;
      } else if (pb.hi < pa.hi) {
        p.hi = pb.hi;
        p.hi_closed = pb.hi_closed;
      } else {
        p.hi = pa.hi;
        p.hi_closed = pa.hi_closed && pb.hi_closed;
      }
      parts.push_back(std::move(p));
    }
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

IntervalPointSet complement(const IntervalPointSet& a) {
  std::vector<IntervalPart> parts;
  Ext cursor(0L);
  bool cursor_closed = true;
  for (const auto& p : a.parts()) {
    parts.push_back(IntervalPart{cursor, cursor_closed, p.lo, !p.lo_closed});
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  if (cursor.is_inf()) {
    // The set reached infinity; the point {inf} remains iff it was excluded.
    if (cursor_closed) {
      parts.push_back(IntervalPart{Ext::inf(), true, Ext::inf(), true});
    }
  } else {
    parts.push_back(IntervalPart{cursor, cursor_closed, Ext::inf(), true});
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

IntervalPointSet subtract(const IntervalPointSet& a,
                          const IntervalPointSet& b) {
  return intersect(a, complement(b));
}

bool subset_of(const IntervalPointSet& inner, const IntervalPointSet& outer) {
  return subtract(inner, outer).is_empty();
}

IntervalPointSet o_hull(const IntervalPointSet& s) {
  if (s.is_empty()) return IntervalPointSet::empty_set();
  return IntervalPointSet::interval(s.inf_value(), false, s.sup_value(),
                                    s.sup_attained());
}

}  // namespace genalg
