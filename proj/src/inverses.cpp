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

#include <algorithm>
#include <vector>

#include "genalg/errors.hpp"
#include "genalg/interval_set.hpp"

namespace genalg {
namespace {

bool is_flat(const Segment& s) {
  return s.kind == SegmentKind::POINT_INF || s.formula.is_constant();
}

// Value limits over a segment, low end first. Poles evaluate to their
// one-sided +inf limit, so eval at the ends is exactly the limit pair.
struct ValueEnds {
  Ext lo, hi;
};

ValueEnds value_ends(const Segment& s) {
  if (s.kind == SegmentKind::POINT_INF) return {Ext::inf(), Ext::inf()};
  Ext a = s.formula.eval(s.lo);
  Ext b = s.formula.eval(s.hi);
  return a <= b ? ValueEnds{a, b} : ValueEnds{b, a};
}

Ext midpoint(const Ext& a, const Ext& b) {
  if (b.is_inf()) return Ext(Rat(a.rat() + 1));
  return Ext(Rat((a.rat() + b.rat()) / 2));
}

// Emits consecutive pieces of an inverse function over [0, inf] in
// increasing y order, tracking which boundary point is still unassigned.
class Walk {
 public:
  void emit(const Ext& hi, bool hi_closed, const Formula& f) {
    if (hi < ycur_) throw InternalError("inverse walk went backwards");
    if (ycur_ == hi && !(pending_ && hi_closed)) return;
    out_.push_back(Segment{ycur_, pending_, hi, hi_closed, kind_of(f), f});
    ycur_ = hi;
    pending_ = !hi_closed;
  }

  PiecewiseMonotone finish() {
    fold_degenerate_constants();
    absorb_continuous_junctions();
    merge_equal_constants();
    return PiecewiseMonotone(std::move(out_), Direction::NON_DECREASING,
                             Ext(0L), Ext::inf());
  }

 private:
  static bool monotone_piece(const Segment& s) {
    return s.kind != SegmentKind::CONSTANT && s.kind != SegmentKind::POINT_INF;
  }
  static Ext const_value(const Segment& s) { return s.formula.eval(s.lo); }

  // A single-point constant piece whose value continues an adjacent
  // monotone piece is part of that piece.
  void fold_degenerate_constants() {
    std::vector<Segment> kept;
    for (std::size_t i = 0; i < out_.size(); ++i) {
      Segment& p = out_[i];
      if (p.degenerate() && p.kind == SegmentKind::CONSTANT) {
        const Ext v = const_value(p);
        if (i + 1 < out_.size() && monotone_piece(out_[i + 1]) &&
            out_[i + 1].formula.eval(p.lo) == v) {
          out_[i + 1].lo = p.lo;
          out_[i + 1].lo_closed = true;
          continue;
        }
        if (!kept.empty() && monotone_piece(kept.back()) &&
            kept.back().formula.eval(p.lo) == v) {
          kept.back().hi_closed = true;
          continue;
        }
      }
      kept.push_back(p);
    }
    out_ = std::move(kept);
  }

  // At a junction where the function is continuous, a flat piece owns the
  // junction point; monotone pieces keep only jump boundaries.
  void absorb_continuous_junctions() {
    for (std::size_t i = 0; i + 1 < out_.size(); ++i) {
      Segment& a = out_[i];
      Segment& b = out_[i + 1];
      if (a.kind == SegmentKind::CONSTANT && monotone_piece(b)) {
        if (b.lo_closed && b.formula.eval(b.lo) == const_value(a)) {
          a.hi_closed = true;
          b.lo_closed = false;
        }
      } else if (monotone_piece(a) && b.kind == SegmentKind::CONSTANT) {
        if (a.hi_closed && a.formula.eval(a.hi) == const_value(b)) {
          a.hi_closed = false;
          b.lo_closed = true;
        }
      }
    }
  }

  void merge_equal_constants() {
    std::vector<Segment> kept;
    for (const Segment& p : out_) {
      if (!kept.empty() && kept.back().kind == SegmentKind::CONSTANT &&
          p.kind == SegmentKind::CONSTANT &&
          const_value(kept.back()) == const_value(p)) {
        kept.back().hi = p.hi;
        kept.back().hi_closed = p.hi_closed;
        continue;
      }
      kept.push_back(p);
    }
    out_ = std::move(kept);
  }

  std::vector<Segment> out_;
  Ext ycur_{0L};
  bool pending_ = true;
};

// sup{x : t(x) <= y} (weak) or sup{x : t(x) < y} (strict) for non-decreasing
// t, built by walking the completed graph of t in increasing y. Flat gaps in
// the value range map to the junction point where t jumps past them.
PiecewiseMonotone nondecreasing_sup_inverse(const PiecewiseMonotone& t,
                                            bool weak) {
  Walk w;
  const Ext t0 = t.eval(t.domain_lo());
  const Formula bottom = Formula::constant(t.domain_lo().rat());
  const Formula top = Formula::constant(t.domain_hi().rat());
  // Below every value of t the sup runs over the empty set.
  w.emit(t0, !weak, bottom);
  for (const Segment& s : t.segments()) {
    const ValueEnds ve = value_ends(s);
    w.emit(ve.lo, !weak, Formula::constant(s.lo.rat()));
    if (!is_flat(s)) w.emit(ve.hi, !weak, s.formula.inverse());
  }
  w.emit(Ext::inf(), true, top);
  return w.finish();
}

// x -> 1 - x on the generator domain; reverses segments, keeps validity.
PiecewiseMonotone reflect_domain(const PiecewiseMonotone& t) {
  std::vector<Segment> segs;
  const Rat width = t.domain_hi().rat() + t.domain_lo().rat();
  for (auto it = t.segments().rbegin(); it != t.segments().rend(); ++it) {
    const Segment& s = *it;
    const Formula& f = s.formula;
    Formula nf = f.inf_const ? Formula::point_inf()
                             : Formula::moebius(-f.a, f.a * width + f.b, -f.c,
                                                f.c * width + f.d);
    segs.push_back(Segment{Ext(Rat(width - s.hi.rat())), s.hi_closed,
                           Ext(Rat(width - s.lo.rat())), s.lo_closed,
                           kind_of(nf), nf});
  }
  Direction nd = t.direction() == Direction::NON_DECREASING
                     ? Direction::NON_INCREASING
                     : Direction::NON_DECREASING;
  return PiecewiseMonotone(std::move(segs), nd, t.domain_lo(), t.domain_hi());
}

// g -> 1 - g on [0, inf]; flips the output side of a reflected problem back.
PiecewiseMonotone reflect_values(const PiecewiseMonotone& g, const Rat& one) {
  std::vector<Segment> segs;
  for (const Segment& s : g.segments()) {
    const Formula& f = s.formula;
    Formula nf =
        Formula::moebius(f.c * one - f.a, f.d * one - f.b, f.c, f.d);
    segs.push_back(
        Segment{s.lo, s.lo_closed, s.hi, s.hi_closed, kind_of(nf), nf});
  }
  Direction nd = g.direction() == Direction::NON_DECREASING
                     ? Direction::NON_INCREASING
                     : Direction::NON_DECREASING;
  return PiecewiseMonotone(std::move(segs), nd, g.domain_lo(), g.domain_hi());
}

bool constant_function(const PiecewiseMonotone& t) {
  return range_of(t).is_single_point();
}

PiecewiseMonotone constant_on_carrier(const Rat& v) {
  return PiecewiseMonotone({Segment{Ext(0L), true, Ext::inf(), true,
                                    SegmentKind::CONSTANT,
                                    Formula::constant(v)}},
                           Direction::NON_DECREASING, Ext(0L), Ext::inf());
}

}  // namespace

PiecewiseMonotone pseudo_inverse(const PiecewiseMonotone& t) {
  if (constant_function(t)) return constant_on_carrier(t.domain_lo().rat());
  if (t.direction() == Direction::NON_DECREASING) {
    return nondecreasing_sup_inverse(t, /*weak=*/false);
  }
  // sup{x : t(x) > y} = 1 - sup{z : t(1-z) <= y} via the domain reflection.
  return reflect_values(
      nondecreasing_sup_inverse(reflect_domain(t), /*weak=*/true),
      t.domain_hi().rat());
}

PiecewiseMonotone weak_pseudo_inverse(const PiecewiseMonotone& t) {
  if (constant_function(t)) return constant_on_carrier(t.domain_hi().rat());
  if (t.direction() == Direction::NON_DECREASING) {
    return nondecreasing_sup_inverse(t, /*weak=*/true);
  }
  // sup{x : t(x) >= y} = 1 - sup{z : t(1-z) < y} via the domain reflection.
  return reflect_values(
      nondecreasing_sup_inverse(reflect_domain(t), /*weak=*/false),
      t.domain_hi().rat());
}

QuasiInverseBounds quasi_inverse_bounds(const PiecewiseMonotone& t) {
  if (t.direction() != Direction::NON_DECREASING) {
    throw MalformedPartition(
        "quasi-inverse bounds are defined for non-decreasing functions");
  }
  // The literal sup/inf formulas; they agree with pseudo_inverse and
  // weak_pseudo_inverse except for constant t, which has no convention
  // shortcut here.
  return QuasiInverseBounds{nondecreasing_sup_inverse(t, /*weak=*/false),
                            nondecreasing_sup_inverse(t, /*weak=*/true)};
}

std::optional<Rat> plateau_witness(const PiecewiseMonotone& t, const Ext& x0) {
  if (x0.is_inf() || x0 < t.domain_lo() || !(x0 < t.domain_hi())) {
    throw DomainError("plateau witness point must lie in [" +
                      ext_to_string(t.domain_lo()) + ", " +
                      ext_to_string(t.domain_hi()) + ")");
  }
  const Ext v = t.eval(x0);
  const Ext alpha = weak_pseudo_inverse(t).eval(v);
  if (t.eval(alpha) == v) return std::nullopt;
  // alpha > x0 whenever the values differ, so delta is positive.
  return Rat(alpha.rat() - x0.rat());
}

namespace {

std::vector<Ext> sorted_unique(std::vector<Ext> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Adds three interior points per gap so that two Moebius pieces agreeing on
// every sample agree identically on each refined cell.
std::vector<Ext> with_interior_samples(std::vector<Ext> xs) {
  std::vector<Ext> out = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Ext &a = xs[i], &b = xs[i + 1];
    if (!(a < b)) continue;
    if (b.is_inf()) {
      for (long k = 1; k <= 3; ++k) out.push_back(Ext(Rat(a.rat() + k)));
    } else {
      for (long k = 1; k <= 3; ++k) {
        out.push_back(Ext(Rat(a.rat() + (b.rat() - a.rat()) * k / 4)));
      }
    }
  }
  return sorted_unique(std::move(out));
}

// x values where t crosses a breakpoint of the outer function, so that
// compositions stay single-formula between consecutive sample points.
void add_pullbacks(const PiecewiseMonotone& t, const std::vector<Ext>& betas,
                   std::vector<Ext>& xs) {
  for (const Segment& s : t.segments()) {
    if (is_flat(s)) continue;
    for (const Ext& b : betas) {
      const Ext x = s.formula.solve(b);
      if (x.is_finite() && s.contains(x)) xs.push_back(x);
    }
  }
}

// Refinement making x -> t(w(t(x))) a single Moebius formula between
// consecutive points: t's breakpoints, pullbacks of w's, and pullbacks of
// t's through the composed inner map on each first-order cell.
std::vector<Ext> composition_refinement(const PiecewiseMonotone& t,
                                        const PiecewiseMonotone& w) {
  std::vector<Ext> xs = t.breakpoints();
  add_pullbacks(t, w.breakpoints(), xs);
  xs = sorted_unique(std::move(xs));
  std::vector<Ext> more = xs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) continue;
    const Ext mid = midpoint(xs[i], xs[i + 1]);
    const Segment& st = t.owner_of(mid);
    if (is_flat(st)) continue;
    const Segment& sw = w.owner_of(t.eval(mid));
    const Formula m = compose_formulas(sw.formula, st.formula);
    if (m.inf_const || m.is_constant()) continue;
    for (const Ext& g : t.breakpoints()) {
      const Ext x = m.solve(g);
      if (x.is_finite() && xs[i] < x && x < xs[i + 1]) more.push_back(x);
    }
  }
  return sorted_unique(std::move(more));
}

// Exact pointwise equality of two piecewise functions on [0, inf]: sample
// all breakpoints plus three interior points per cell.
std::optional<Ext> functions_differ_at(const PiecewiseMonotone& f,
                                       const PiecewiseMonotone& g) {
  std::vector<Ext> xs = f.breakpoints();
  for (const Ext& x : g.breakpoints()) xs.push_back(x);
  xs = with_interior_samples(sorted_unique(std::move(xs)));
  for (const Ext& x : xs) {
    if (f.eval(x) != g.eval(x)) return x;
  }
  return std::nullopt;
}

// A x^2 + B x + C >= 0 on [lo, hi], decided exactly in rationals.
bool quadratic_nonneg_on(const Rat& A, const Rat& B, const Rat& C,
                         const Rat& lo, const Rat& hi, Rat* where) {
  // Explicit result type: gmpxx expression templates must not escape.
  auto val = [&](const Rat& x) -> Rat { return A * x * x + B * x + C; };
  if (val(lo) < 0) {
    *where = lo;
    return false;
  }
  if (val(hi) < 0) {
    *where = hi;
    return false;
  }
  if (A > 0) {
    const Rat v = -B / (2 * A);
    if (lo < v && v < hi && val(v) < 0) {
      *where = v;
      return false;
    }
  }
  return true;
}

struct AboveCheck {
  bool holds = true;
  std::optional<Ext> where;
};

// w(t(x)) >= x on the whole domain, decided per cell: between consecutive
// samples the composition is one Moebius map, and the comparison reduces to
// a rational quadratic sign test.
AboveCheck check_above_identity(const PiecewiseMonotone& t,
                                const PiecewiseMonotone& w,
                                const std::vector<Ext>& xs) {
  for (const Ext& x : xs) {
    if (w.eval(t.eval(x)) < x) return {false, x};
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) continue;
    const Rat lo = xs[i].rat(), hi = xs[i + 1].rat();
    const Ext mid = midpoint(xs[i], xs[i + 1]);
    const Segment& st = t.owner_of(mid);
    Formula m = Formula::constant(Rat(0));
    if (is_flat(st)) {
      const Ext k = w.eval(t.eval(mid));
      if (k.is_inf() || k.rat() >= hi) continue;
      return {false, Ext(Rat((std::max(lo, k.rat()) + hi) / 2))};
    }
    m = compose_formulas(w.owner_of(t.eval(mid)).formula, st.formula);
    if (m.inf_const) continue;
    if (m.is_constant()) {
      const Ext k = m.eval(mid);
      if (k.rat() >= hi) continue;
      return {false, Ext(Rat((std::max(lo, k.rat()) + hi) / 2))};
    }
    // (m.a x + m.b)/(m.c x + m.d) - x >= 0; the denominator keeps one sign.
    const Rat den_mid = m.c * mid.rat() + m.d;
    const Rat sgn = den_mid > 0 ? Rat(1) : Rat(-1);
    Rat bad;
    if (!quadratic_nonneg_on(-m.c * sgn, (m.a - m.d) * sgn, m.b * sgn, lo, hi,
                             &bad)) {
      const Ext x{Rat(bad)};
      if (w.eval(t.eval(x)) < x) return {false, x};
    }
  }
  return {true, std::nullopt};
}

// The x-interval where t attains exactly the value v.
IntervalPointSet preimage_of_value(const PiecewiseMonotone& t, const Ext& v) {
  std::vector<IntervalPart> parts;
  for (const Segment& s : t.segments()) {
    if (s.kind == SegmentKind::POINT_INF) {
      if (v.is_inf()) parts.push_back({s.lo, s.lo_closed, s.hi, s.hi_closed});
      continue;
    }
    if (s.formula.is_constant()) {
      if (s.formula.eval(s.lo) == v) {
        parts.push_back({s.lo, s.lo_closed, s.hi, s.hi_closed});
      }
      continue;
    }
    const Ext x = s.formula.solve(v);
    if (x.is_finite() && s.contains(x)) parts.push_back({x, true, x, true});
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

struct PlateauScan {
  bool empty = true;
  std::optional<Ext> point;
};

// A plateau witness exists iff some flat stretch does not attain its own
// supremum, i.e. t jumps strictly past the flat value there.
PlateauScan scan_plateaus(const PiecewiseMonotone& t) {
  const PlateauData pd = plateau_data(t);
  for (const IntervalPart& hp : pd.H.parts()) {
    const IntervalPointSet pre = preimage_of_value(t, hp.lo);
    if (pre.is_empty() || pre.sup_attained()) continue;
    return {false, midpoint(pre.inf_value(), pre.sup_value())};
  }
  return {true, std::nullopt};
}

}  // namespace

IdentityReport inverse_identities_report(const PiecewiseMonotone& t) {
  IdentityReport rep;
  const ValidationReport vr = validate(t);
  rep.strictly_monotone = vr.strictly_monotone;
  rep.left_continuous = vr.left_continuous;

  const PiecewiseMonotone w = weak_pseudo_inverse(t);
  const PiecewiseMonotone p = pseudo_inverse(t);
  const std::vector<Ext> xs =
      with_interior_samples(composition_refinement(t, w));

  rep.round_trip_holds = true;
  for (const Ext& x : xs) {
    const Ext tx = t.eval(x);
    if (t.eval(w.eval(tx)) != tx) {
      rep.round_trip_holds = false;
      rep.round_trip_counterexample = x;
      break;
    }
  }

  const AboveCheck above = check_above_identity(t, w, xs);
  rep.above_identity_holds = above.holds;
  rep.above_identity_counterexample = above.where;

  const auto diff = functions_differ_at(w, p);
  rep.weak_equals_pseudo = !diff.has_value();
  rep.weak_equals_pseudo_counterexample = diff;

  const PlateauScan scan = scan_plateaus(t);
  rep.plateau_set_empty = scan.empty;
  rep.plateau_point = scan.point;
  rep.equivalence_holds = (rep.plateau_set_empty == rep.round_trip_holds);
  return rep;
}

}  // namespace genalg
