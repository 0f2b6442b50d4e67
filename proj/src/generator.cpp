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

#include "genalg/generator.hpp"

#include <algorithm>

#include "genalg/errors.hpp"

namespace genalg {

Formula Formula::constant(const Rat& v) {
  return Formula{false, Rat(0), v, Rat(0), Rat(1)};
}

Formula Formula::affine(const Rat& slope, const Rat& intercept) {
  return Formula{false, slope, intercept, Rat(0), Rat(1)};
}

Formula Formula::reciprocal(const Rat& num, const Rat& pole) {
  return Formula{false, Rat(0), num, Rat(-1), pole};
}

Formula Formula::point_inf() { return Formula{true, 0, 0, 0, 1}; }

Formula Formula::moebius(Rat a, Rat b, Rat c, Rat d) {
  if (c == 0 && d == 0) throw InternalError("moebius with zero denominator");
  Formula f{false, std::move(a), std::move(b), std::move(c), std::move(d)};
  return f;
}

Ext Formula::eval(const Ext& x) const {
  if (inf_const) return Ext::inf();
  if (x.is_inf()) {
    if (c != 0) return Ext(a / c);
    if (a == 0) return Ext(b / d);
    if ((a > 0) == (d > 0)) return Ext::inf();
    throw InternalError("formula diverges to -inf at x = inf");
  }
  const Rat den = c * x.rat() + d;
  if (den == 0) return Ext::inf();  // validated pole; +inf one-sided limit
  return Ext((a * x.rat() + b) / den);
}

int Formula::monotonicity() const {
  if (inf_const) return 0;
  const Rat det = a * d - b * c;
  return det == 0 ? 0 : (det > 0 ? 1 : -1);
}

bool Formula::is_constant() const { return monotonicity() == 0; }

Ext Formula::solve(const Ext& y) const {
  if (is_constant()) throw InternalError("solve on a constant formula");
  if (y.is_inf()) {
    if (c != 0) return Ext(-d / c);
    return Ext::inf();
  }
  const Rat den = a - c * y.rat();
  if (den == 0) return Ext::inf();  // asymptote value, reached in the limit
  return Ext((d * y.rat() - b) / den);
}

Formula Formula::inverse() const {
  if (is_constant()) throw InternalError("inverse of a constant formula");
  return moebius(d, -b, -c, a);
}

std::optional<Rat> Formula::pole() const {
  if (inf_const || c == 0) return std::nullopt;
  return -d / c;
}

SegmentKind kind_of(const Formula& f) {
  if (f.inf_const) return SegmentKind::POINT_INF;
  if (f.is_constant()) return SegmentKind::CONSTANT;
  if (f.c == 0) return SegmentKind::AFFINE;
  if (f.a == 0) return SegmentKind::RECIPROCAL;
  return SegmentKind::MOEBIUS;
}

Formula compose_formulas(const Formula& outer, const Formula& inner) {
  if (outer.inf_const) return Formula::point_inf();
  if (inner.inf_const || inner.is_constant()) {
    Ext x0(0L);
    if (auto p = inner.pole(); p && *p == 0) x0 = Ext(1L);
    const Ext v = outer.eval(inner.eval(x0));
    return v.is_inf() ? Formula::point_inf() : Formula::constant(v.rat());
  }
  return Formula::moebius(outer.a * inner.a + outer.b * inner.c,
                          outer.a * inner.b + outer.b * inner.d,
                          outer.c * inner.a + outer.d * inner.c,
                          outer.c * inner.b + outer.d * inner.d);
}

bool Segment::contains(const Ext& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

namespace {

// Ensures any pole touches the segment only at an open end approaching +inf,
// so Formula::eval's pole convention is sound on this domain.
void check_pole(const Segment& s) {
  auto p = s.formula.pole();
  if (!p) return;
  const Ext pole(*p);
  if (pole < s.lo || pole > s.hi) return;
  const bool at_open_lo = (pole == s.lo && !s.lo_closed);
  const bool at_open_hi = (pole == s.hi && !s.hi_closed);
  if (!at_open_lo && !at_open_hi) {
    throw MalformedPartition("formula pole inside a segment domain");
  }
  const int mon = s.formula.monotonicity();
  // Approaching the pole must run upward to +inf: increasing into a right
  // pole, or decreasing away from a left pole.
  if ((at_open_hi && mon <= 0) || (at_open_lo && mon >= 0)) {
    throw MalformedPartition("formula approaches -inf on its domain");
  }
}

}  // namespace

PiecewiseMonotone::PiecewiseMonotone(std::vector<Segment> segments,
                                     Direction direction, const Ext& dom_lo,
                                     const Ext& dom_hi)
    : segments_(std::move(segments)),
      direction_(direction),
      dom_lo_(dom_lo),
      dom_hi_(dom_hi) {
  if (segments_.empty()) throw MalformedPartition("no segments");
  if (!(dom_lo_ < dom_hi_)) throw MalformedPartition("empty domain");
  for (const auto& s : segments_) {
    if (s.lo > s.hi || (s.lo == s.hi && !(s.lo_closed && s.hi_closed))) {
      throw MalformedPartition("empty segment domain");
    }
    if (s.kind == SegmentKind::POINT_INF) {
      if (!s.formula.inf_const) throw InternalError("POINT_INF formula");
    } else {
      check_pole(s);
    }
  }
  if (segments_.front().lo != dom_lo_ || !segments_.front().lo_closed) {
    throw MalformedPartition("segments do not start at the domain bottom");
  }
  if (segments_.back().hi != dom_hi_ || !segments_.back().hi_closed) {
    throw MalformedPartition("segments do not end at the domain top");
  }
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const Segment& a = segments_[i];
    const Segment& b = segments_[i + 1];
    if (a.hi != b.lo) {
      throw MalformedPartition("segment domains leave a gap or overlap at " +
                               ext_to_string(a.hi));
    }
    if (a.hi_closed == b.lo_closed) {
      throw MalformedPartition(
          a.hi_closed ? "segment domains overlap at " + ext_to_string(a.hi)
                      : "segment domains leave a hole at " +
                            ext_to_string(a.hi));
    }
  }
}

const Segment& PiecewiseMonotone::owner_of(const Ext& x) const {
  for (const auto& s : segments_) {
    if (s.contains(x)) return s;
  }
  throw DomainError("evaluation outside the domain at " + ext_to_string(x));
}

Ext PiecewiseMonotone::eval(const Ext& x) const {
  return owner_of(x).formula.eval(x);
}

Ext PiecewiseMonotone::limit_left(const Ext& x) const {
  if (x <= dom_lo_) {
    if (x == dom_lo_) return eval(x);
    throw DomainError("limit outside the domain");
  }
  for (const auto& s : segments_) {
    // The segment covering (x - eps, x).
    if (s.lo < x && x <= s.hi) return s.formula.eval(x);
  }
  throw InternalError("no segment to the left");
}

Ext PiecewiseMonotone::limit_right(const Ext& x) const {
  if (x >= dom_hi_) {
    if (x == dom_hi_) return eval(x);
    throw DomainError("limit outside the domain");
  }
  for (const auto& s : segments_) {
    // The segment covering (x, x + eps).
    if (s.lo <= x && x < s.hi) return s.formula.eval(x);
  }
  throw InternalError("no segment to the right");
}

std::vector<Ext> PiecewiseMonotone::breakpoints() const {
  std::vector<Ext> out;
  for (const auto& s : segments_) {
    out.push_back(s.lo);
    out.push_back(s.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport validate(const PiecewiseMonotone& t) {
  ValidationReport rep;
  rep.direction = t.direction();
  const bool up = t.direction() == Direction::NON_DECREASING;
  rep.monotone = true;
  rep.left_continuous = true;
  rep.right_continuous = true;
  rep.strictly_monotone = true;

  const auto& segs = t.segments();
  for (const auto& s : segs) {
    const int mon = s.formula.monotonicity();
    if (!s.degenerate()) {
      if ((up && mon < 0) || (!up && mon > 0)) {
        rep.monotone = false;
        rep.violations.push_back(
            {"segment runs against the declared direction", s.lo});
      }
      if (mon == 0) rep.strictly_monotone = false;
    }
    // Values must stay in [0, inf]: monotone segment, endpoint limits bound.
    for (const Ext& end : {s.formula.eval(s.lo), s.formula.eval(s.hi)}) {
      if (end.is_finite() && end.rat() < 0) {
        rep.violations.push_back({"value below 0", s.lo});
        break;
      }
    }
    // inf as a finite-point value is reserved to POINT_INF segments.
    if (s.kind != SegmentKind::POINT_INF) {
      for (const Ext& x : {s.lo, s.hi}) {
        if (s.contains(x) && x.is_finite() && s.formula.eval(x).is_inf()) {
          rep.violations.push_back({"non-limit value inf", x});
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const Ext j = segs[i].hi;
    const Ext from_left = segs[i].formula.eval(j);
    const Ext from_right = segs[i + 1].formula.eval(j);
    if ((up && from_left > from_right) || (!up && from_left < from_right)) {
      rep.monotone = false;
      rep.violations.push_back({"monotonicity breaks across a junction", j});
    }
  }
  // A positive-length segment with constant value (finite or inf) breaks
  // strictness; a second segment attaining inf after a POINT_INF does too,
  // but abutting POINT_INF segments already fail the junction rule above
  // only when monotone is violated, so check attained-inf multiplicity.
  int inf_attained = 0;
  for (const auto& s : segs) {
    if (s.kind == SegmentKind::POINT_INF) {
      inf_attained += s.degenerate() ? 1 : 2;
    }
  }
  if (inf_attained > 1) rep.strictly_monotone = false;

  const Ext lo = t.domain_lo(), hi = t.domain_hi();
  for (const auto& x : t.breakpoints()) {
    if (x > lo && t.limit_left(x) != t.eval(x)) {
      rep.left_continuous = false;
    }
    if (x < hi && t.limit_right(x) != t.eval(x)) {
      rep.right_continuous = false;
    }
  }
  return rep;
}

Limits eval_with_limits(const PiecewiseMonotone& t, const Ext& x) {
  Limits lim;
  lim.value = t.eval(x);
  lim.left = (x == t.domain_lo()) ? lim.value : t.limit_left(x);
  if (x == t.domain_hi()) {
    lim.right = (t.direction() == Direction::NON_DECREASING) ? Ext::inf()
                                                             : lim.value;
  } else {
    lim.right = t.limit_right(x);
  }
  return lim;
}

IntervalPointSet range_of(const PiecewiseMonotone& t) {
  std::vector<IntervalPart> parts;
  for (const auto& s : t.segments()) {
    const Ext vlo = s.formula.eval(s.lo);
    const Ext vhi = s.formula.eval(s.hi);
    if (s.formula.is_constant()) {
      parts.push_back(IntervalPart{vlo, true, vlo, true});
      continue;
    }
    // Strictly monotone on the segment: the image is the interval between
    // the endpoint limits, attained exactly at closed domain ends.
    IntervalPart p;
    if (s.formula.monotonicity() > 0) {
      p = IntervalPart{vlo, s.lo_closed, vhi, s.hi_closed};
    } else {
      p = IntervalPart{vhi, s.hi_closed, vlo, s.lo_closed};
    }
    parts.push_back(p);
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

IntervalPointSet preimage_of(const PiecewiseMonotone& t,
                             const IntervalPointSet& values) {
  std::vector<IntervalPart> parts;
  for (const auto& s : t.segments()) {
    const Ext vlo = s.formula.eval(s.lo);
    const Ext vhi = s.formula.eval(s.hi);
    if (s.formula.is_constant()) {
      if (values.member(vlo)) {
        parts.push_back(IntervalPart{s.lo, s.lo_closed, s.hi, s.hi_closed});
      }
      continue;
    }
    // Strictly monotone on the segment: pull each hit interval back through
    // the inverse map, swapping ends when the segment falls.
    const bool rising = s.formula.monotonicity() > 0;
    const IntervalPart image =
        rising ? IntervalPart{vlo, s.lo_closed, vhi, s.hi_closed}
               : IntervalPart{vhi, s.hi_closed, vlo, s.lo_closed};
    const IntervalPointSet hits =
        intersect(values, IntervalPointSet::from_parts({image}));
    for (const auto& p : hits.parts()) {
      const Ext xa = s.formula.solve(p.lo);
      const Ext xb = s.formula.solve(p.hi);
      if (rising) {
        parts.push_back(IntervalPart{xa, p.lo_closed, xb, p.hi_closed});
      } else {
        parts.push_back(IntervalPart{xb, p.hi_closed, xa, p.lo_closed});
      }
    }
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

PlateauData plateau_data(const PiecewiseMonotone& t) {
  PlateauData out;
  const auto& segs = t.segments();

  std::vector<Ext> plateau_values;
  for (const auto& s : segs) {
    if (!s.degenerate() && s.formula.is_constant()) {
      plateau_values.push_back(s.formula.eval(s.lo));
    }
  }
  std::sort(plateau_values.begin(), plateau_values.end());
  plateau_values.erase(
      std::unique(plateau_values.begin(), plateau_values.end()),
      plateau_values.end());

  std::vector<IntervalPart> h_parts, g_parts, w_parts;
  for (const auto& v : plateau_values) {
    h_parts.push_back(IntervalPart{v, true, v, true});
    // sup{x : t(x) = v} across all segments.
    Ext best = t.domain_lo();
    bool found = false;
    for (const auto& s : segs) {
      if (s.formula.is_constant()) {
        if (s.formula.eval(s.lo) == v) {
          best = found ? ext_max(best, s.hi) : s.hi;
          found = true;
        }
        continue;
      }
      const Ext x = s.formula.solve(v);
      if (s.contains(x)) {
        best = found ? ext_max(best, x) : x;
        found = true;
      }
    }
    if (found) g_parts.push_back(IntervalPart{best, true, best, true});
  }
  out.H = IntervalPointSet::from_parts(std::move(h_parts));
  out.G = IntervalPointSet::from_parts(std::move(g_parts));

  for (const auto& s : segs) {
    if (s.formula.is_constant()) {
      if (s.degenerate() && !out.H.member(s.formula.eval(s.lo))) {
        w_parts.push_back(IntervalPart{s.lo, true, s.lo, true});
      }
      continue;
    }
    // Strictly monotone piece: remove the finitely many preimages of H.
    IntervalPointSet piece =
        IntervalPointSet::interval(s.lo, s.lo_closed, s.hi, s.hi_closed);
    for (const auto& hp : out.H.parts()) {
      const Ext x = s.formula.solve(hp.lo);
      if (s.contains(x)) {
        piece = subtract(piece, IntervalPointSet::point(x));
      }
    }
    for (const auto& pp : piece.parts()) w_parts.push_back(pp);
  }
  out.W = IntervalPointSet::from_parts(std::move(w_parts));
  out.D = unite(out.G, out.W);
  return out;
}

}  // namespace genalg
