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

#include "genalg/properties.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "genalg/errors.hpp"

namespace genalg {
namespace {

void require_join(const GeneratedOp& op, const char* analysis) {
  if (op.mode != OpMode::SUPCONORM) {
    throw PreconditionViolated(std::string(analysis) +
                               " covers the join orientation only");
  }
}

void require_decomposed(const GeneratedOp& op, const char* analysis) {
  if (!op.dec) {
    throw PreconditionViolated(std::string(analysis) +
                               " requires a left-continuous generator");
  }
}

IntervalPointSet level_of(const PiecewiseMonotone& t, const Ext& v) {
  return preimage_of(t, IntervalPointSet::point(v));
}

// A breakpoint whose right limit strictly exceeds the value there.
struct JumpPoint {
  Ext at, value, right;
};

std::vector<JumpPoint> jump_points(const PiecewiseMonotone& t) {
  std::vector<JumpPoint> out;
  for (const Ext& b : t.breakpoints()) {
    if (b == t.domain_hi()) continue;
    const Ext v = t.eval(b);
    const Ext r = t.limit_right(b);
    if (r > v) out.push_back(JumpPoint{b, v, r});
  }
  return out;
}

// u with F(u, v) = z for the strict built-ins, when z and v are finite and
// a solution exists on [0, inf].
std::optional<Ext> unapply_builtin(const Semigroup& f, const Ext& z,
                                   const Ext& v) {
  if (z.is_inf() || v.is_inf() || v > z) return std::nullopt;
  if (f.kind == SemigroupKind::SUM) {
    const Rat r = z.rat() - v.rat();
    return Ext(r);
  }
  const Rat r = (Rat(1) + z.rat()) / (Rat(1) + v.rat()) - Rat(1);
  return Ext(r);
}

// Shape-change points of v -> winv(F(v, p)) and v -> winv(F(v, q)): the
// preimages of the weak-inverse breakpoints under F(., p) and F(., q), plus
// the kink arguments themselves for MAX.
std::vector<Ext> compose_cuts(const Semigroup& f,
                              const PiecewiseMonotone& winv, const Ext& p,
                              const Ext& q) {
  std::vector<Ext> cuts;
  for (const Ext& z : winv.breakpoints()) {
    if (f.kind == SemigroupKind::MAX) {
      cuts.push_back(z);
    } else {
      for (const Ext& arg : {p, q}) {
        const std::optional<Ext> u = unapply_builtin(f, z, arg);
        if (u) cuts.push_back(*u);
      }
    }
  }
  if (f.kind == SemigroupKind::MAX) {
    cuts.push_back(p);
    cuts.push_back(q);
  }
  return cuts;
}

// First point of the domain where the two piecewise forms disagree. The
// cuts must cover every shape change of both forms; between consecutive
// boundaries each form is then a single rational Moebius map, and two such
// maps agreeing at three points agree everywhere, so sampling endpoints,
// cuts, and three interior points per stretch decides equality exactly.
std::optional<Ext> first_difference(
    const IntervalPointSet& domain, std::vector<Ext> cuts,
    const std::function<Ext(const Ext&)>& f1,
    const std::function<Ext(const Ext&)>& f2) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto differs = [&](const Ext& v) -> bool { return f1(v) != f2(v); };
  for (const IntervalPart& p : domain.parts()) {
    if (p.lo_closed && differs(p.lo)) return p.lo;
    if (p.lo == p.hi) continue;
    if (p.hi_closed && differs(p.hi)) return p.hi;
    std::vector<Ext> bounds;
    bounds.push_back(p.lo);
    for (const Ext& c : cuts) {
      if (c > p.lo && c < p.hi) {
        if (differs(c)) return c;
        bounds.push_back(c);
      }
    }
    bounds.push_back(p.hi);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      const Ext& a = bounds[i];
      const Ext& b = bounds[i + 1];
      for (long k = 1; k <= 3; ++k) {
        Rat s;
        if (b.is_inf()) {
          s = a.rat() + k;
        } else {
          const Rat width = b.rat() - a.rat();
          s = a.rat() + width * k / 4;
        }
        const Ext sample(s);
        if (differs(sample)) return sample;
      }
    }
  }
  return std::nullopt;
}

// Order hull of the anchor together with the member products falling
// strictly inside the stretch (lo, hi).
IntervalPointSet collapse_hull(const IntervalPointSet& products,
                               const Ext& anchor, const Ext& lo,
                               const Ext& hi) {
  const IntervalPointSet inside =
      intersect(products, IntervalPointSet::interval(lo, false, hi, false));
  return o_hull(unite(IntervalPointSet::point(anchor), inside));
}

struct CollapseHulls {
  IntervalPointSet h_kappa;
  std::vector<IntervalPointSet> h_k;
};

CollapseHulls collapse_hulls(const RangeDecomposition& dec,
                             const IntervalPointSet& products) {
  CollapseHulls out;
  const IntervalPointSet below = intersect(
      products,
      IntervalPointSet::interval(Ext(0L), true, dec.t0(), false));
  out.h_kappa = o_hull(unite(IntervalPointSet::point(dec.t0()), below));
  if (!dec.degenerate()) {
    for (const Gap& g : dec.gaps()) {
      out.h_k.push_back(collapse_hull(products, g.b, g.b, g.d));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Idempotence.
// ---------------------------------------------------------------------------

IntervalPointSet idempotent_points(const GeneratedOp& op) {
  require_join(op, "idempotence analysis");
  const PiecewiseMonotone& t = op.t;
  const IntervalPointSet m = op.dec ? op.dec->m() : range_of(t);

  // Values whose diagonal product does not climb past them within the
  // range: fixed points of the diagonal, and part tops with no member
  // between the value and its product. T(x,x) = x holds exactly when t(x)
  // is such a value and x is the top of its own level set.
  IntervalPointSet ok = idempotents_of(op.f, m);
  std::vector<IntervalPart> tops;
  for (const IntervalPart& p : m.parts()) {
    if (!p.hi_closed) continue;
    const Ext product = f_eval(op.f, p.hi, p.hi);
    const IntervalPointSet window = intersect(
        m, IntervalPointSet::interval(p.hi, false, product, true));
    if (window.is_empty()) {
      tops.push_back(IntervalPart{p.hi, true, p.hi, true});
    }
  }
  ok = unite(ok, IntervalPointSet::from_parts(std::move(tops)));

  std::vector<IntervalPart> parts;
  std::vector<IntervalPart> dropped;
  for (const Segment& s : t.segments()) {
    if (s.formula.is_constant()) {
      const Ext c = s.formula.eval(s.lo);
      if (!ok.member(c)) continue;
      const Ext r = op.tinv.eval(c);
      if (s.contains(r)) parts.push_back(IntervalPart{r, true, r, true});
      continue;
    }
    const Ext vlo = s.formula.eval(s.lo);
    const Ext vhi = s.formula.eval(s.hi);
    const IntervalPart image{vlo, s.lo_closed, vhi, s.hi_closed};
    const IntervalPointSet hits =
        intersect(ok, IntervalPointSet::from_parts({image}));
    for (const IntervalPart& p : hits.parts()) {
      parts.push_back(IntervalPart{s.formula.solve(p.lo), p.lo_closed,
                                   s.formula.solve(p.hi), p.hi_closed});
    }
    // The top end may continue at the same value into the next piece, in
    // which case it is not the top of its own level set.
    if (s.hi_closed && op.tinv.eval(vhi) != s.hi) {
      dropped.push_back(IntervalPart{s.hi, true, s.hi, true});
    }
  }
  return subtract(IntervalPointSet::from_parts(std::move(parts)),
                  IntervalPointSet::from_parts(std::move(dropped)));
}

IdempotenceReport idempotence_report(const GeneratedOp& op) {
  IdempotenceReport rep;
  rep.points = idempotent_points(op);
  const IntervalPointSet whole = IntervalPointSet::interval(
      op.t.domain_lo(), true, op.t.domain_hi(), true);
  rep.fully_idempotent = (rep.points == whole);
  return rep;
}

// ---------------------------------------------------------------------------
// Diagonal powers and the limit property.
// ---------------------------------------------------------------------------

DiagonalOrbit diagonal_powers(const GeneratedOp& op, const Ext& x,
                              int n_max) {
  if (x.is_inf() || !(x > op.t.domain_lo() && x < op.t.domain_hi())) {
    throw PreconditionViolated("orbit start must lie strictly inside (" +
                               ext_to_string(op.t.domain_lo()) + ", " +
                               ext_to_string(op.t.domain_hi()) + ")");
  }
  if (n_max < 2) {
    throw PreconditionViolated("orbit length must be at least 2");
  }
  DiagonalOrbit orbit;
  orbit.x = x;
  orbit.powers.push_back(x);
  const Ext one = op.t.domain_hi();
  Ext prev = x;
  for (int n = 2; n <= n_max; ++n) {
    const Ext next = op.eval(x, prev);
    orbit.powers.push_back(next);
    if (next == one) {
      orbit.classification = OrbitClass::REACHES_ONE;
      orbit.decided_at = n;
      break;
    }
    if (next == prev) {
      orbit.classification = OrbitClass::FIXED_BELOW_ONE;
      orbit.limit = next;
      orbit.decided_at = n;
      break;
    }
    prev = next;
  }
  return orbit;
}

LimitReport limit_property_check(const GeneratedOp& op) {
  require_join(op, "limit-property analysis");
  if (!op.f.continuous) {
    throw PreconditionViolated("limit-property analysis requires continuous F");
  }
  LimitReport rep;
  const PiecewiseMonotone& t = op.t;
  const Ext zero = t.domain_lo();
  const Ext one = t.domain_hi();
  const Ext u0 = t.limit_right(zero);
  const ValidationReport vr = validate(t);
  const std::vector<JumpPoint> jumps = [&] {
    std::vector<JumpPoint> interior;
    for (const JumpPoint& j : jump_points(t)) {
      if (j.at > zero) interior.push_back(j);
    }
    return interior;
  }();

  // A point strictly inside the first positive-length segment stretch,
  // where one-sided limits coincide with the value.
  auto interior_sample = [&]() -> Ext {
    const std::vector<Ext> bps = t.breakpoints();
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      if (bps[i + 1] > bps[i]) {
        const Rat mid = (bps[i].rat() + bps[i + 1].rat()) / 2;
        return Ext(mid);
      }
    }
    throw InternalError("generator domain has no interior stretch");
  };

  // (a) F(t(0+), t(x)) > t(x+). On segment interiors t(x+) = t(x), so the
  // strict bound can only fail there for MAX (where the product equals the
  // larger argument), for a neutral start of a strict F, or at infinite
  // values; jumps are checked one by one.
  {
    const bool fails_on_interiors =
        (op.f.kind == SemigroupKind::MAX) ||
        (op.f.strict && u0 == Ext(0L));
    const IntervalPointSet inf_interior =
        intersect(preimage_of(t, IntervalPointSet::point(Ext::inf())),
                  IntervalPointSet::interval(zero, false, one, false));
    rep.strict_bound.holds = true;
    if (fails_on_interiors) {
      rep.strict_bound.holds = false;
      rep.strict_bound.witness = interior_sample();
    } else if (!inf_interior.is_empty()) {
      rep.strict_bound.holds = false;
      rep.strict_bound.witness = inf_interior.pick_point();
    } else {
      for (const JumpPoint& j : jumps) {
        if (!(f_eval(op.f, u0, j.value) > j.right)) {
          rep.strict_bound.holds = false;
          rep.strict_bound.witness = j.at;
          break;
        }
      }
    }
  }

  // (b) tinv(t(x)) = tinv(t(x+)): trivial away from jumps.
  rep.inverse_stable.holds = true;
  for (const JumpPoint& j : jumps) {
    if (op.tinv.eval(j.value) != op.tinv.eval(j.right)) {
      rep.inverse_stable.holds = false;
      rep.inverse_stable.witness = j.at;
      break;
    }
  }

  // (c) F(t(x), t(x)) >= t(x+): the product dominates the larger argument,
  // so only jumps can fail.
  rep.weak_bound.holds = true;
  for (const JumpPoint& j : jumps) {
    if (!(f_eval(op.f, j.value, j.value) >= j.right)) {
      rep.weak_bound.holds = false;
      rep.weak_bound.witness = j.at;
      break;
    }
  }

  bool decided = false;
  auto conclude = [&](LimitVerdict v, std::optional<Ext> witness,
                      std::string reason) {
    rep.verdict = v;
    rep.witness = std::move(witness);
    rep.reason = std::move(reason);
    decided = true;
  };

  // Decision ladder, every rung exact. The criteria alone are not a full
  // decision procedure: (a) is sufficient only with a left-continuous
  // generator, (c) is only necessary, and their equality cases decide
  // nothing, so the ladder falls back to trap construction, interior
  // idempotents, and grid orbits.
  if (op.tinv.eval(f_eval(op.f, u0, u0)) == one) {
    // T(x,x) >= tinv(F(t(0+), t(0+))) = 1 for every interior x.
    conclude(LimitVerdict::HOLDS, std::nullopt,
             "every interior orbit reaches 1 at the second power");
  }
  if (!decided && op.dec && rep.strict_bound.holds) {
    conclude(LimitVerdict::HOLDS, std::nullopt,
             "strict lower-push criterion holds");
  }
  if (!decided && op.dec && vr.strictly_monotone && vr.left_continuous &&
      vr.right_continuous && op.f.strict && op.f.has_neutral &&
      u0 == op.f.neutral) {
    conclude(LimitVerdict::HOLDS, std::nullopt,
             "continuous strictly increasing generator with neutral start");
  }
  if (!decided) {
    // A strict failure of the lower push at a jump traps every orbit
    // started low enough: with F(t(x0), t(b)) < t(b+), any power at or
    // below b stays at or below b.
    const JumpPoint* trap = nullptr;
    for (const JumpPoint& j : jumps) {
      if (f_eval(op.f, u0, j.value) < j.right) {
        trap = &j;
        break;
      }
    }
    if (trap != nullptr) {
      IntervalPointSet window;
      if (trap->right.is_inf()) {
        window = IntervalPointSet::interval(Ext(0L), true, Ext::inf(), false);
      } else if (op.f.kind == SemigroupKind::MAX) {
        window = IntervalPointSet::interval(Ext(0L), true, trap->right, false);
      } else if (op.f.kind == SemigroupKind::SUM) {
        const Rat theta = trap->right.rat() - trap->value.rat();
        window = IntervalPointSet::interval(Ext(0L), true, Ext(theta), false);
      } else {
        const Rat theta = (Rat(1) + trap->right.rat()) /
                              (Rat(1) + trap->value.rat()) -
                          Rat(1);
        window = IntervalPointSet::interval(Ext(0L), true, Ext(theta), false);
      }
      const IntervalPointSet starts =
          intersect(preimage_of(t, window),
                    IntervalPointSet::interval(zero, false, trap->at, true));
      if (starts.is_empty()) {
        throw InternalError("trap window has no interior start");
      }
      const Ext x0 = starts.pick_point();
      if (!(f_eval(op.f, t.eval(x0), trap->value) < trap->right)) {
        throw InternalError("trap witness failed verification");
      }
      conclude(LimitVerdict::FAILS, x0,
               "orbit trapped at or below " + ext_to_string(trap->at));
    }
  }
  if (!decided) {
    const IntervalPointSet interior_idem =
        intersect(idempotent_points(op),
                  IntervalPointSet::interval(zero, false, one, false));
    if (!interior_idem.is_empty()) {
      conclude(LimitVerdict::FAILS, interior_idem.pick_point(),
               "interior idempotent point");
    }
  }

  for (const Ext& g : default_grid(op)) {
    if (g > zero && g < one) rep.orbits.push_back(diagonal_powers(op, g));
  }
  if (!decided) {
    for (const DiagonalOrbit& orbit : rep.orbits) {
      if (orbit.classification == OrbitClass::FIXED_BELOW_ONE) {
        conclude(LimitVerdict::FAILS, orbit.x,
                 "grid orbit reaches an exact fixed point below 1");
        break;
      }
    }
  }
  if (!decided) {
    conclude(LimitVerdict::INCONCLUSIVE, std::nullopt,
             "criteria inconclusive and no grid orbit stagnates");
  }
  if (rep.verdict == LimitVerdict::HOLDS) {
    for (const DiagonalOrbit& orbit : rep.orbits) {
      if (orbit.classification == OrbitClass::FIXED_BELOW_ONE) {
        throw InternalError("grid orbit contradicts a HOLDS verdict");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Conditional cancellation.
// ---------------------------------------------------------------------------

CancellationReport cancellation_check(
    const GeneratedOp& op, std::optional<IntervalPointSet> c_override) {
  require_join(op, "cancellation analysis");
  require_decomposed(op, "cancellation analysis");
  if (!op.f.strict) {
    throw PreconditionViolated("cancellation analysis requires strict F");
  }
  const PiecewiseMonotone& t = op.t;
  const RangeDecomposition& dec = *op.dec;
  const IntervalPointSet& m = dec.m();
  const Ext t0 = dec.t0();
  const Ext t1 = t.eval(t.domain_hi());
  const IntervalPointSet hset = plateau_data(t).H;

  CancellationReport rep;
  rep.sets.c = c_override ? std::move(*c_override) : hset;
  const IntervalPointSet& c = rep.sets.c;
  if (!c.is_empty() && c.inf_attained()) {
    rep.sets.beta = c.inf_value();
    const IntervalPointSet beta_level = level_of(t, *rep.sets.beta);
    if (!beta_level.is_empty()) rep.sets.alpha = beta_level.inf_value();
  }
  const IntervalPointSet products = f_image(op.f, m, m);
  CollapseHulls hulls = collapse_hulls(dec, products);
  rep.sets.h_kappa = std::move(hulls.h_kappa);
  rep.sets.h_k = std::move(hulls.h_k);

  // (i) products of non-collapse members with members never land strictly
  // inside a gap or strictly below the range.
  const IntervalPointSet non_collapse = subtract(m, c);
  const IntervalPointSet top_tail =
      IntervalPointSet::interval(t1, true, Ext::inf(), true);
  const IntervalPointSet allowed = unite(m, top_tail);
  const IntervalPointSet img_non_collapse = f_image(op.f, non_collapse, m);
  const IntervalPointSet escape_range =
      subtract(img_non_collapse, allowed);
  rep.stays_in_range = escape_range.is_empty();
  if (!rep.stays_in_range) {
    const Ext z = escape_range.pick_point();
    const auto pair = f_solve_pair(op.f, non_collapse, m, z);
    if (!pair) throw InternalError("escaping product with no generating pair");
    rep.range_escape = *pair;
  }

  // (ii) products of collapse members with members saturate at t(1).
  const IntervalPointSet collapse_members = intersect(c, m);
  const IntervalPointSet img_collapse = f_image(op.f, collapse_members, m);
  const IntervalPointSet escape_collapse = subtract(img_collapse, top_tail);
  rep.collapse_saturates = escape_collapse.is_empty();
  if (!rep.collapse_saturates) {
    const Ext z = escape_collapse.pick_point();
    const auto pair = f_solve_pair(op.f, collapse_members, m, z);
    if (!pair) {
      throw InternalError("collapsing product with no generating pair");
    }
    rep.collapse_escape = *pair;
  }

  rep.degenerate = c.member(t0);
  if (rep.degenerate) {
    // The whole bottom level collapses, so the operation cancels
    // conditionally exactly when it never goes below 1.
    const Ext bottom = op.eval(t.domain_lo(), t.domain_lo());
    rep.conditionally_cancellative = (bottom == t.domain_hi());
  } else {
    rep.conditionally_cancellative =
        rep.stays_in_range && rep.collapse_saturates;
  }
  rep.cancellative =
      hset.is_empty() && subtract(img_non_collapse, m).is_empty();

  if (!rep.conditionally_cancellative) {
    // Direct domain-side search, first hit in (y, x1, x2) order.
    const std::vector<Ext> grid = default_grid(op);
    for (const Ext& y : grid) {
      std::vector<Ext> row;
      row.reserve(grid.size());
      for (const Ext& x : grid) row.push_back(op.eval(x, y));
      bool found = false;
      for (std::size_t i = 0; i < grid.size() && !found; ++i) {
        if (row[i] == t.domain_hi()) continue;
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
          if (row[i] == row[j]) {
            rep.merge_witness = {grid[i], grid[j], y};
            found = true;
            break;
          }
        }
      }
      if (found) break;
    }
  }
  return rep;
}

bool supconorm_equivalence_check(const GeneratedOp& op) {
  require_join(op, "join-equivalence analysis");
  require_decomposed(op, "join-equivalence analysis");
  if (!op.f.strict) {
    throw PreconditionViolated("join-equivalence analysis requires strict F");
  }
  if (!op.f.has_neutral || op.t.eval(op.t.domain_lo()) != op.f.neutral) {
    throw PreconditionViolated(
        "join-equivalence analysis requires t(0) to be the neutral element");
  }
  const RangeDecomposition& dec = *op.dec;
  const IntervalPointSet& m = dec.m();
  const IntervalPointSet products = f_image(op.f, m, m);
  const CollapseHulls hulls = collapse_hulls(dec, products);
  IntervalPointSet all = hulls.h_kappa;
  for (const IntervalPointSet& h : hulls.h_k) all = unite(all, h);
  if (all.is_empty()) return true;
  const IntervalPointSet hull_products = f_image(op.f, all, m);
  const IntervalPointSet offenders = intersect(
      hull_products, subtract(m, IntervalPointSet::point(dec.t0())));
  return offenders.is_empty();
}

// ---------------------------------------------------------------------------
// Continuity.
// ---------------------------------------------------------------------------

ContinuityReport continuity_check(const GeneratedOp& op) {
  require_join(op, "continuity analysis");
  require_decomposed(op, "continuity analysis");
  if (!op.f.continuous) {
    throw PreconditionViolated("continuity analysis requires continuous F");
  }
  const PiecewiseMonotone& t = op.t;
  const PiecewiseMonotone& winv = op.tinv;
  const Semigroup& f = op.f;
  const IntervalPointSet& m = op.dec->m();
  const Ext zero = t.domain_lo();
  const Ext t0 = op.dec->t0();
  const IntervalPointSet hset = plateau_data(t).H;
  const std::vector<JumpPoint> jumps = jump_points(t);

  ContinuityReport rep;

  // Left approach: the limit along the lower-left quadrant is winv of
  // F(t(x), t(y)) when the product value is attained arbitrarily close
  // below, and the left limit of winv there otherwise.
  auto flat_left = [&](const Ext& x, const Ext& vx) -> bool {
    if (x == zero) return true;
    const IntervalPointSet lvl = level_of(t, vx);
    const Ext lo = lvl.inf_value();
    return lo < x;
  };
  auto attained_below = [&](const Ext& x, const Ext& y) -> bool {
    const Ext vx = t.eval(x);
    const Ext vy = t.eval(y);
    const bool fx = flat_left(x, vx);
    const bool fy = flat_left(y, vy);
    if (f.strict) {
      return (fx && fy) || (fx && vx.is_inf()) || (fy && vy.is_inf());
    }
    const Ext s = f_eval(f, vx, vy);
    return (fx && vx == s) || (fy && vy == s);
  };

  const std::vector<Ext> bps = t.breakpoints();
  for (const Ext& x : bps) {
    for (const Ext& y : bps) {
      ContinuityPairFlag flag;
      flag.x = x;
      flag.y = y;
      const Ext upper = f_eval(f, t.limit_right(x), t.limit_right(y));
      flag.right_ok = (winv.eval(upper) == op.eval(x, y));
      const Ext s = f_eval(f, t.eval(x), t.eval(y));
      flag.left_ok =
          attained_below(x, y) || (winv.limit_left(s) == winv.eval(s));
      rep.breakpoint_pairs.push_back(flag);
    }
  }

  // Global left continuity. The weak inverse jumps from the left exactly
  // at plateau values, so a failure needs a product landing on a plateau
  // value without being attained from strictly below.
  if (hset.is_empty()) {
    rep.left_continuous = true;
  } else if (f.strict) {
    // Values reachable with a strictly rising left side: non-plateau
    // values except a start pinned at x = 0, plus plateau values whose
    // level has an attained minimum above 0.
    IntervalPointSet v_strict =
        subtract(m, unite(hset, IntervalPointSet::point(t0)));
    for (const IntervalPart& hp : hset.parts()) {
      const IntervalPointSet lvl = level_of(t, hp.lo);
      if (lvl.inf_attained() && lvl.inf_value() > zero) {
        v_strict = unite(v_strict, IntervalPointSet::point(hp.lo));
      }
    }
    // Values reachable with a flat finite left side.
    IntervalPointSet u_flat =
        subtract(hset, IntervalPointSet::point(Ext::inf()));
    if (!t0.is_inf()) {
      u_flat = unite(u_flat, IntervalPointSet::point(t0));
    }
    const IntervalPointSet sources = unite(u_flat, v_strict);
    const IntervalPointSet hit =
        intersect(f_image(f, sources, v_strict), hset);
    rep.left_continuous = hit.is_empty();
    if (!rep.left_continuous) {
      const Ext s = hit.pick_point();
      const auto pair = f_solve_pair(f, sources, v_strict, s);
      if (!pair) {
        throw InternalError("left-discontinuity value with no pair");
      }
      const Ext yw = level_of(t, pair->second).inf_value();
      Ext xw;
      if (v_strict.member(pair->first)) {
        xw = level_of(t, pair->first).inf_value();
      } else if (pair->first == t0) {
        xw = zero;
      } else {
        const IntervalPointSet lvl = level_of(t, pair->first);
        const Rat lo = lvl.inf_value().rat();
        const Rat hi = lvl.sup_value().rat();
        const Rat mid = (lo + hi) / 2;
        xw = Ext(mid);
      }
      rep.left_witness = std::make_pair(xw, yw);
    }
  } else {
    // MAX: the product equals the larger argument, so a failure needs a
    // plateau value entered exactly at the attained minimum of its level.
    rep.left_continuous = true;
    for (const IntervalPart& hp : hset.parts()) {
      const IntervalPointSet lvl = level_of(t, hp.lo);
      if (lvl.inf_attained() && lvl.inf_value() > zero) {
        const Ext alpha = lvl.inf_value();
        const Rat half = alpha.rat() / 2;
        rep.left_witness = std::make_pair(Ext(half), alpha);
        rep.left_continuous = false;
        break;
      }
    }
  }

  // Global right continuity. winv is right-continuous, so the upper-right
  // limit is winv of F of the right limits; only jump coordinates can
  // change anything. Jump pairs are finitely many; a single jump against a
  // free coordinate quantifies over the values attained off jumps.
  IntervalPointSet off_jump_values = m;
  for (const JumpPoint& j : jumps) {
    const IntervalPointSet lvl = level_of(t, j.value);
    if (lvl.is_single_point()) {
      off_jump_values =
          subtract(off_jump_values, IntervalPointSet::point(j.value));
    }
  }
  rep.right_continuous = true;
  for (const JumpPoint& ja : jumps) {
    for (const JumpPoint& jb : jumps) {
      const Ext above = winv.eval(f_eval(f, ja.right, jb.right));
      const Ext at = winv.eval(f_eval(f, ja.value, jb.value));
      if (above != at) {
        rep.right_continuous = false;
        rep.right_witness = std::make_pair(ja.at, jb.at);
        break;
      }
    }
    if (!rep.right_continuous) break;
  }
  if (rep.right_continuous) {
    for (const JumpPoint& j : jumps) {
      auto lower = [&](const Ext& v) -> Ext {
        return winv.eval(f_eval(f, v, j.value));
      };
      auto upper = [&](const Ext& v) -> Ext {
        return winv.eval(f_eval(f, v, j.right));
      };
      const std::optional<Ext> diff = first_difference(
          off_jump_values, compose_cuts(f, winv, j.value, j.right), lower,
          upper);
      if (diff) {
        rep.right_continuous = false;
        const IntervalPointSet lvl = level_of(t, *diff);
        Ext yw;
        if (lvl.is_single_point()) {
          yw = lvl.inf_value();
        } else {
          const Rat lo = lvl.inf_value().rat();
          const Rat hi = lvl.sup_value().rat();
          const Rat mid = (lo + hi) / 2;
          yw = Ext(mid);
        }
        rep.right_witness = std::make_pair(j.at, yw);
        break;
      }
    }
  }

  rep.continuous = rep.left_continuous && rep.right_continuous;

  // Continuous join operation. For strict F the exact criterion is a
  // continuous strictly increasing generator whose start is idempotent;
  // otherwise the axioms are decided directly: continuity, neutrality of
  // 0, and associativity.
  const ValidationReport vr = validate(t);
  if (f.strict) {
    const bool generator_continuous = vr.strictly_monotone &&
                                      vr.left_continuous &&
                                      vr.right_continuous;
    const bool start_fixed = (f_eval(f, t0, t0) == t0);
    rep.continuous_t_conorm = generator_continuous && start_fixed;
    if (rep.continuous_t_conorm) {
      rep.conorm_reason =
          "continuous strictly increasing generator with idempotent start";
      if (!rep.continuous) {
        throw InternalError("join criterion met by a discontinuous operation");
      }
    } else if (!generator_continuous) {
      rep.conorm_reason = "generator is not continuous strictly increasing";
    } else {
      rep.conorm_reason = "F(t(0), t(0)) differs from t(0)";
    }
  } else {
    bool neutral_ok = hset.is_empty();
    if (neutral_ok) {
      auto with_start = [&](const Ext& v) -> Ext {
        return winv.eval(f_eval(f, v, t0));
      };
      auto plain = [&](const Ext& v) -> Ext { return winv.eval(v); };
      std::vector<Ext> cuts = compose_cuts(f, winv, t0, t0);
      for (const Ext& z : winv.breakpoints()) cuts.push_back(z);
      neutral_ok = !first_difference(m, std::move(cuts), with_start, plain)
                        .has_value();
    }
    if (!rep.continuous) {
      rep.continuous_t_conorm = false;
      rep.conorm_reason = "operation is not continuous";
    } else if (!neutral_ok) {
      rep.continuous_t_conorm = false;
      rep.conorm_reason = "0 is not a neutral element";
    } else {
      const ConditionReport assoc = f_condition_check(op);
      rep.continuous_t_conorm =
          (assoc.verdict == AssocVerdict::ASSOCIATIVE);
      rep.conorm_reason = rep.continuous_t_conorm
                              ? "continuous, associative, with neutral 0"
                              : "operation is not associative";
    }
  }
  return rep;
}

}  // namespace genalg
