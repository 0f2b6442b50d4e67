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

#include "genalg/associativity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genalg/errors.hpp"
#include "genalg/inverses.hpp"

namespace genalg {
namespace {

// ---------------------------------------------------------------------------
// Comparison space. Sums and maxima are compared as written; the linear
// product x+y+xy is order-isomorphic to plain multiplication after the shift
// v -> 1+v, so its sweep runs entirely in that shifted space.
// ---------------------------------------------------------------------------

bool product_space(SemigroupKind k) { return k == SemigroupKind::LINPROD; }

Ext to_space(const Ext& v, bool mul) {
  if (!mul || v.is_inf()) return v;
  Rat shifted = v.rat() + 1;
  return Ext(shifted);
}

Ext from_space(const Ext& v, bool mul) {
  if (!mul || v.is_inf()) return v;
  Rat back = v.rat() - 1;
  return Ext(back);
}

IntervalPointSet to_space_set(const IntervalPointSet& s, bool mul) {
  if (!mul) return s;
  std::vector<IntervalPart> ps;
  for (const IntervalPart& p : s.parts()) {
    ps.push_back(
        {to_space(p.lo, true), p.lo_closed, to_space(p.hi, true), p.hi_closed});
  }
  return IntervalPointSet::from_parts(std::move(ps));
}

IntervalPointSet from_space_set(const IntervalPointSet& s, bool mul) {
  if (!mul) return s;
  std::vector<IntervalPart> ps;
  for (const IntervalPart& p : s.parts()) {
    ps.push_back({from_space(p.lo, true), p.lo_closed, from_space(p.hi, true),
                  p.hi_closed});
  }
  return IntervalPointSet::from_parts(std::move(ps));
}

// ---------------------------------------------------------------------------
// Sweep scalars: values that depend on the cell variable y. In additive
// space a scalar means c + s*y, in product space c * y^s. Slopes stay tiny
// by construction; the guard catches drift.
// ---------------------------------------------------------------------------

struct SplitAt {
  Rat at;
};

struct Sc {
  bool inf = false;
  Rat c;
  int s = 0;
};

Sc sc_inf() { return {true, Rat(0), 0}; }

Sc sc_const(const Ext& v) {
  if (v.is_inf()) return sc_inf();
  return {false, v.rat(), 0};
}

struct Ctx {
  bool mul = false;
  bool point = false;      // singleton cell
  bool inf_point = false;  // the singleton {inf}
  bool unbounded = false;  // open cell (lo, inf)
  Rat lo, hi, rep;
};

void slope_guard(int s) {
  if (s < -2 || s > 2) throw InternalError("sweep slope out of range");
}

Rat value_at(const Sc& a, const Rat& y, const Ctx& cx) {
  if (a.inf) throw InternalError("value_at on an infinite scalar");
  if (a.s == 0) return a.c;
  if (cx.inf_point) throw InternalError("sloped scalar on the infinity cell");
  if (cx.mul) {
    Rat p = y;
    if (a.s == 2 || a.s == -2) {
      Rat sq = y * y;
      p = sq;
    }
    if (a.s > 0) {
      Rat r = a.c * p;
      return r;
    }
    Rat r = a.c / p;
    return r;
  }
  Rat r = a.c + a.s * y;
  return r;
}

int sgn_diff(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

// Three-way comparison sound across the whole cell: if the order of the two
// scalars flips strictly inside, the cell is split at the exact crossing.
int cmp_sc(const Sc& a, const Sc& b, const Ctx& cx) {
  if (a.inf || b.inf) {
    if (a.inf && b.inf) return 0;
    return a.inf ? 1 : -1;
  }
  if (a.s == b.s) {
    if (cx.mul && a.s != 0) return sgn_diff(a.c, b.c);
    return sgn_diff(a.c, b.c);
  }
  if (cx.inf_point) throw InternalError("slope mismatch on the infinity cell");
  Rat va = value_at(a, cx.rep, cx);
  Rat vb = value_at(b, cx.rep, cx);
  int at_rep = sgn_diff(va, vb);
  if (cx.point) return at_rep;
  if (at_rep == 0) throw SplitAt{cx.rep};
  int d = a.s - b.s;
  auto side_sign = [&](const Rat& y, bool from_right) -> int {
    Rat ya = value_at(a, y, cx);
    Rat yb = value_at(b, y, cx);
    int sg = sgn_diff(ya, yb);
    if (sg != 0) return sg;
    // Touching at an end: just inside, the faster-growing side wins on the
    // right and loses on the left.
    return from_right ? (d > 0 ? 1 : -1) : (d > 0 ? -1 : 1);
  };
  int s_lo = side_sign(cx.lo, true);
  int s_hi = cx.unbounded ? (d > 0 ? 1 : -1) : side_sign(cx.hi, false);
  if (s_lo == at_rep && s_hi == at_rep) return at_rep;
  // The order flips inside the cell. Both families cross at most once, so
  // splitting at the crossing stabilizes every comparison.
  if (!cx.mul) {
    Rat num = b.c - a.c;
    Rat den = Rat(a.s - b.s);
    Rat cross = num / den;
    throw SplitAt{cross};
  }
  Rat ratio = b.c / a.c;
  int dd = d;
  if (dd < 0) {
    dd = -dd;
    Rat inv = 1 / ratio;
    ratio = inv;
  }
  if (dd == 1) throw SplitAt{ratio};
  mpz_class num = ratio.get_num();
  mpz_class den = ratio.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) &&
      mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat cross(rn, rd);
    cross.canonicalize();
    throw SplitAt{cross};
  }
  throw InternalError("irrational crossing in the product sweep");
}

Sc sc_add(const Sc& a, const Sc& b) {
  if (a.inf || b.inf) return sc_inf();
  Rat c = a.c + b.c;
  int s = a.s + b.s;
  slope_guard(s);
  return {false, c, s};
}

Sc sc_sub(const Sc& a, const Sc& b) {
  if (b.inf) throw InternalError("subtracting infinity in the sweep");
  if (a.inf) return sc_inf();
  Rat c = a.c - b.c;
  int s = a.s - b.s;
  slope_guard(s);
  return {false, c, s};
}

Sc sc_mul(const Sc& a, const Sc& b) {
  if (a.inf || b.inf) return sc_inf();
  Rat c = a.c * b.c;
  int s = a.s + b.s;
  slope_guard(s);
  return {false, c, s};
}

Sc sc_div(const Sc& a, const Sc& b) {
  if (b.inf) throw InternalError("dividing by infinity in the sweep");
  if (a.inf) return sc_inf();
  Rat c = a.c / b.c;
  int s = a.s - b.s;
  slope_guard(s);
  return {false, c, s};
}

// One interval of a swept set, with scalar ends.
struct SPart {
  Sc lo;
  bool lo_c = true;
  Sc hi;
  bool hi_c = true;
};

bool part_nonempty(const SPart& p, const Ctx& cx) {
  int c = cmp_sc(p.lo, p.hi, cx);
  if (c < 0) return true;
  if (c > 0) return false;
  return p.lo_c && p.hi_c;
}

std::optional<SPart> intersect_parts(const SPart& a, const SPart& b,
                                     const Ctx& cx) {
  SPart r;
  int cl = cmp_sc(a.lo, b.lo, cx);
  r.lo = cl >= 0 ? a.lo : b.lo;
  r.lo_c = cl > 0 ? a.lo_c : (cl < 0 ? b.lo_c : (a.lo_c && b.lo_c));
  int ch = cmp_sc(a.hi, b.hi, cx);
  r.hi = ch <= 0 ? a.hi : b.hi;
  r.hi_c = ch < 0 ? a.hi_c : (ch > 0 ? b.hi_c : (a.hi_c && b.hi_c));
  if (!part_nonempty(r, cx)) return std::nullopt;
  return r;
}

std::vector<SPart> const_parts(const IntervalPointSet& s) {
  std::vector<SPart> out;
  for (const IntervalPart& p : s.parts()) {
    out.push_back({sc_const(p.lo), p.lo_closed, sc_const(p.hi), p.hi_closed});
  }
  return out;
}

// Image of a rectangle under the operation: endpoint arithmetic, with
// per-kind attainment of the ends.
SPart apply_part(SemigroupKind k, const SPart& a, const SPart& b,
                 const Ctx& cx) {
  if (k == SemigroupKind::MAX) {
    SPart r;
    int cl = cmp_sc(a.lo, b.lo, cx);
    r.lo = cl >= 0 ? a.lo : b.lo;
    r.lo_c = cl > 0 ? a.lo_c : (cl < 0 ? b.lo_c : (a.lo_c || b.lo_c));
    int ch = cmp_sc(a.hi, b.hi, cx);
    r.hi = ch >= 0 ? a.hi : b.hi;
    r.hi_c = ch > 0 ? a.hi_c : (ch < 0 ? b.hi_c : (a.hi_c || b.hi_c));
    return r;
  }
  auto op = (k == SemigroupKind::LINPROD) ? sc_mul : sc_add;
  return {op(a.lo, b.lo), a.lo_c && b.lo_c, op(a.hi, b.hi), a.hi_c && b.hi_c};
}

// Parts of {x : F(x, y) in target}. The caller clips against member sets,
// so no carrier clamping happens here.
std::vector<SPart> preimage_parts(SemigroupKind k, const Sc& y,
                                  const SPart& target, const Ctx& cx,
                                  const Rat& bottom) {
  std::vector<SPart> out;
  if (target.lo.inf) {
    // The point {inf}: reached exactly by x = inf for finite y, and by
    // everything for y = inf.
    if (y.inf) {
      out.push_back({{false, bottom, 0}, true, sc_inf(), true});
    } else {
      out.push_back({sc_inf(), true, sc_inf(), true});
    }
    return out;
  }
  if (y.inf) {
    if (target.hi.inf && target.hi_c) {
      out.push_back({{false, bottom, 0}, true, sc_inf(), true});
    }
    return out;
  }
  if (k == SemigroupKind::MAX) {
    int cl = cmp_sc(y, target.lo, cx);
    bool above_lo = cl > 0 || (cl == 0 && target.lo_c);
    bool below_hi;
    if (target.hi.inf) {
      below_hi = true;
    } else {
      int ch = cmp_sc(y, target.hi, cx);
      below_hi = ch < 0 || (ch == 0 && target.hi_c);
    }
    if (above_lo && below_hi) {
      out.push_back({{false, bottom, 0}, true, target.hi, target.hi_c});
    } else if (!above_lo) {
      out.push_back(target);
    }
    return out;
  }
  bool mulk = (k == SemigroupKind::LINPROD);
  Sc lo = mulk ? sc_div(target.lo, y) : sc_sub(target.lo, y);
  Sc hi;
  bool hi_c = target.hi_c;
  if (target.hi.inf) {
    hi = sc_inf();
  } else {
    hi = mulk ? sc_div(target.hi, y) : sc_sub(target.hi, y);
  }
  out.push_back({lo, target.lo_c, hi, hi_c});
  return out;
}

struct Bound {
  Sc v;
  bool att = false;
};

std::optional<Bound> sup_of(const std::vector<SPart>& ps, const Ctx& cx) {
  std::optional<Bound> best;
  for (const SPart& p : ps) {
    Bound cand{p.hi, p.hi_c};
    if (!best) {
      best = cand;
      continue;
    }
    int c = cmp_sc(cand.v, best->v, cx);
    if (c > 0) best = cand;
    else if (c == 0) best->att = best->att || cand.att;
  }
  return best;
}

std::optional<Bound> inf_of(const std::vector<SPart>& ps, const Ctx& cx) {
  std::optional<Bound> best;
  for (const SPart& p : ps) {
    Bound cand{p.lo, p.lo_c};
    if (!best) {
      best = cand;
      continue;
    }
    int c = cmp_sc(cand.v, best->v, cx);
    if (c < 0) best = cand;
    else if (c == 0) best->att = best->att || cand.att;
  }
  return best;
}

// The second factors that actually move a collapse window: for strict kinds
// everything finite, for maxima everything below the window top.
std::optional<SPart> active_part(SemigroupKind k, const SPart& p,
                                 const Bound& u, const Ctx& cx,
                                 const Rat& bottom) {
  if (k == SemigroupKind::MAX) {
    SPart cap{{false, bottom, 0}, true, u.v, false};
    return intersect_parts(p, cap, cx);
  }
  SPart q = p;
  if (q.hi.inf) q.hi_c = false;
  if (!part_nonempty(q, cx)) return std::nullopt;
  return q;
}

// ---------------------------------------------------------------------------
// Cells of the sweep.
// ---------------------------------------------------------------------------

struct Cell {
  enum Kind { OPEN, POINT, POINT_INF } kind = OPEN;
  Rat lo, hi;  // OPEN bounds; POINT stores its value in lo
  bool unbounded = false;
};

Ctx make_ctx(const Cell& c, bool mul) {
  Ctx cx;
  cx.mul = mul;
  if (c.kind == Cell::POINT) {
    cx.point = true;
    cx.rep = c.lo;
    cx.lo = c.lo;
    cx.hi = c.lo;
    return cx;
  }
  if (c.kind == Cell::POINT_INF) {
    cx.point = true;
    cx.inf_point = true;
    cx.rep = 0;
    return cx;
  }
  cx.lo = c.lo;
  cx.hi = c.hi;
  cx.unbounded = c.unbounded;
  if (c.unbounded) {
    Rat r = c.lo + 1;
    cx.rep = r;
  } else {
    Rat sum = c.lo + c.hi;
    Rat r = sum / 2;
    cx.rep = r;
  }
  return cx;
}

Sc make_y(const Cell& c, bool mul) {
  if (c.kind == Cell::POINT) return {false, c.lo, 0};
  if (c.kind == Cell::POINT_INF) return sc_inf();
  if (mul) return {false, Rat(1), 1};
  return {false, Rat(0), 1};
}

Ext cell_rep_value(const Cell& c, const Ctx& cx) {
  if (c.kind == Cell::POINT_INF) return Ext::inf();
  return Ext(cx.rep);
}

IntervalPart cell_as_part(const Cell& c, bool mul) {
  if (c.kind == Cell::POINT) {
    Ext v = from_space(Ext(c.lo), mul);
    return {v, true, v, true};
  }
  if (c.kind == Cell::POINT_INF) return {Ext::inf(), true, Ext::inf(), true};
  Ext lo = from_space(Ext(c.lo), mul);
  Ext hi = c.unbounded ? Ext::inf() : from_space(Ext(c.hi), mul);
  return {lo, false, hi, false};
}

Ext eval_sc(const Sc& a, const Rat& y, const Ctx& cx) {
  if (a.inf) return Ext::inf();
  return Ext(value_at(a, y, cx));
}

// Sliding a window end over the whole cell: extreme value and whether the
// extreme is attained inside the cell.
Ext window_min(const Sc& a, const Ctx& cx) {
  if (a.inf) return Ext::inf();
  if (cx.point) return eval_sc(a, cx.rep, cx);
  if (a.s == 0) return Ext(a.c);
  if (a.s > 0) return eval_sc(a, cx.lo, cx);
  if (cx.unbounded)
    throw InternalError("unbounded decreasing window end in the sweep");
  return eval_sc(a, cx.hi, cx);
}

std::pair<Ext, bool> window_max(const Sc& a, bool att, const Ctx& cx) {
  if (a.inf) return {Ext::inf(), att};
  if (cx.point) return {eval_sc(a, cx.rep, cx), att};
  if (a.s == 0) return {Ext(a.c), att};
  if (a.s > 0) {
    if (cx.unbounded) return {Ext::inf(), false};
    return {eval_sc(a, cx.hi, cx), false};
  }
  return {eval_sc(a, cx.lo, cx), false};
}

IntervalPointSet window_over_cell(const SPart& w, const Ctx& cx) {
  Ext lo = window_min(w.lo, cx);
  auto hi = window_max(w.hi, w.hi_c, cx);
  return IntervalPointSet::interval(lo, false, hi.first, hi.second);
}

// ---------------------------------------------------------------------------
// Sweep data and driver.
// ---------------------------------------------------------------------------

struct TrapData {
  std::string label;
  Ext anchor_value;               // collapse value, in the original space
  IntervalPointSet strict_value;  // missing stretch without its member ends
  IntervalPointSet literal_value;  // missing stretch with the top end kept
};

struct SweepInput {
  SemigroupKind kind = SemigroupKind::SUM;
  bool mul = false;
  Rat bottom;
  IntervalPointSet m_eng, mprime_eng;
  std::vector<TrapData> traps;  // gaps first, then the below-range stretch
  std::vector<std::vector<SPart>> strict_eng, literal_eng;  // per trap
  std::vector<SPart> anchors_eng;                           // per trap
  std::vector<SPart> m_parts, mprime_parts;
};

struct CellFlags {
  std::vector<char> c1_hit;  // per trap
  std::vector<char> c3_hit;  // trap-square, row-major
};

struct CellEval {
  CellFlags flags;
  IntervalPointSet v1, v3s, v3l;  // window accumulations, engine space
  std::vector<std::pair<int, int>> viols;  // (k, -1) collapse; (k, l) pair
};

CellEval evaluate_cell(const Cell& cell, const SweepInput& in) {
  Ctx cx = make_ctx(cell, in.mul);
  Sc y = make_y(cell, in.mul);
  size_t nt = in.traps.size();
  CellEval out;
  out.flags.c1_hit.assign(nt, 0);
  out.flags.c3_hit.assign(nt * nt, 0);

  // Members whose product with y is again a member (the staying factors).
  std::vector<SPart> partner;
  for (const SPart& tgt : in.m_parts) {
    for (const SPart& w : preimage_parts(in.kind, y, tgt, cx, in.bottom)) {
      for (const SPart& mp : in.m_parts) {
        auto frag = intersect_parts(mp, w, cx);
        if (frag) partner.push_back(*frag);
      }
    }
  }

  auto members_into = [&](const std::vector<SPart>& trap_parts) {
    std::vector<SPart> res;
    for (const SPart& tp : trap_parts) {
      for (const SPart& w : preimage_parts(in.kind, y, tp, cx, in.bottom)) {
        for (const SPart& mp : in.m_parts) {
          auto frag = intersect_parts(mp, w, cx);
          if (frag) res.push_back(*frag);
        }
      }
    }
    return res;
  };

  std::vector<std::vector<SPart>> mk_strict(nt), mk_literal(nt);
  for (size_t k = 0; k < nt; ++k) {
    mk_strict[k] = members_into(in.strict_eng[k]);
    mk_literal[k] = members_into(in.literal_eng[k]);
  }

  auto overlaps_excluded = [&](const SPart& w) {
    for (const SPart& mp : in.mprime_parts) {
      if (intersect_parts(w, mp, cx)) return true;
    }
    return false;
  };

  // Collapse of the first product against a staying second factor.
  for (size_t k = 0; k < nt; ++k) {
    if (mk_strict[k].empty()) continue;
    std::vector<SPart> images;
    SPart ypart{y, true, y, true};
    for (const SPart& frag : mk_strict[k]) {
      images.push_back(apply_part(in.kind, frag, ypart, cx));
    }
    Bound u = *sup_of(images, cx);
    bool any_hit = false;
    for (const SPart& p : partner) {
      auto act = active_part(in.kind, p, u, cx, in.bottom);
      if (!act) continue;
      SPart lo_img = apply_part(in.kind, in.anchors_eng[k], *act, cx);
      SPart hi_img =
          apply_part(in.kind, SPart{u.v, u.att, u.v, u.att}, *act, cx);
      SPart window{lo_img.lo, false, hi_img.hi, hi_img.hi_c};
      if (!part_nonempty(window, cx)) continue;
      out.v1 = unite(out.v1, window_over_cell(window, cx));
      if (overlaps_excluded(window)) any_hit = true;
    }
    if (any_hit) {
      out.flags.c1_hit[k] = 1;
      out.viols.push_back({static_cast<int>(k), -1});
    }
  }

  // Both products collapse, one per stretch.
  auto pair_hull = [&](const std::vector<SPart>& a,
                       const std::vector<SPart>& b, size_t k,
                       size_t l) -> std::optional<SPart> {
    if (a.empty() || b.empty()) return std::nullopt;
    std::vector<SPart> imgs;
    for (const SPart& p : a) {
      imgs.push_back(apply_part(in.kind, p, in.anchors_eng[l], cx));
    }
    for (const SPart& p : b) {
      imgs.push_back(apply_part(in.kind, in.anchors_eng[k], p, cx));
    }
    Bound jl = *inf_of(imgs, cx);
    Bound jh = *sup_of(imgs, cx);
    SPart j{jl.v, false, jh.v, jh.att};
    if (!part_nonempty(j, cx)) return std::nullopt;
    return j;
  };
  for (size_t k = 0; k < nt; ++k) {
    for (size_t l = 0; l < nt; ++l) {
      auto js = pair_hull(mk_strict[k], mk_strict[l], k, l);
      if (js) {
        out.v3s = unite(out.v3s, window_over_cell(*js, cx));
        if (overlaps_excluded(*js)) {
          out.flags.c3_hit[k * nt + l] = 1;
          out.viols.push_back({static_cast<int>(k), static_cast<int>(l)});
        }
      }
      auto jl = pair_hull(mk_literal[k], mk_literal[l], k, l);
      if (jl) out.v3l = unite(out.v3l, window_over_cell(*jl, cx));
    }
  }
  return out;
}

struct SweepViolation {
  size_t cell_index = 0;
  int k = -1;
  int l = -1;  // -1: collapse-vs-staying; otherwise the second stretch
};

struct SweepOutcome {
  std::vector<Cell> cells;
  std::vector<CellFlags> flags;
  IntervalPointSet v1, v3s, v3l;  // engine space
  std::vector<SweepViolation> viols;
};

void seed_cells(const IntervalPointSet& m_eng, const std::vector<Rat>& seeds,
                std::deque<Cell>* out) {
  for (const IntervalPart& p : m_eng.parts()) {
    if (p.lo.is_inf()) {
      out->push_back({Cell::POINT_INF, Rat(0), Rat(0), false});
      continue;
    }
    Rat a = p.lo.rat();
    if (p.hi.is_finite() && p.lo == p.hi) {
      out->push_back({Cell::POINT, a, a, false});
      continue;
    }
    std::vector<Rat> inner;
    for (const Rat& s : seeds) {
      if (s > a && (p.hi.is_inf() || s < p.hi.rat())) inner.push_back(s);
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    if (p.lo_closed) out->push_back({Cell::POINT, a, a, false});
    Rat prev = a;
    for (const Rat& s : inner) {
      out->push_back({Cell::OPEN, prev, s, false});
      out->push_back({Cell::POINT, s, s, false});
      prev = s;
    }
    if (p.hi.is_finite()) {
      Rat b = p.hi.rat();
      if (prev < b) out->push_back({Cell::OPEN, prev, b, false});
      if (p.hi_closed) out->push_back({Cell::POINT, b, b, false});
    } else {
      out->push_back({Cell::OPEN, prev, prev, true});
      if (p.hi_closed) out->push_back({Cell::POINT_INF, Rat(0), Rat(0), false});
    }
  }
}

SweepOutcome run_sweep(const SweepInput& in) {
  std::vector<Rat> seeds;
  auto add_set_seeds = [&](const IntervalPointSet& s) {
    for (const IntervalPart& p : s.parts()) {
      if (p.lo.is_finite()) seeds.push_back(p.lo.rat());
      if (p.hi.is_finite()) seeds.push_back(p.hi.rat());
    }
  };
  add_set_seeds(in.m_eng);
  for (size_t k = 0; k < in.traps.size(); ++k) {
    add_set_seeds(to_space_set(in.traps[k].strict_value, in.mul));
    add_set_seeds(to_space_set(in.traps[k].literal_value, in.mul));
  }

  std::deque<Cell> work;
  seed_cells(in.m_eng, seeds, &work);

  SweepOutcome out;
  long budget = 0;
  while (!work.empty()) {
    if (++budget > 200000) throw InternalError("sweep cell budget exhausted");
    Cell cell = work.front();
    work.pop_front();
    try {
      CellEval ev = evaluate_cell(cell, in);
      size_t idx = out.cells.size();
      out.cells.push_back(cell);
      out.flags.push_back(std::move(ev.flags));
      out.v1 = unite(out.v1, ev.v1);
      out.v3s = unite(out.v3s, ev.v3s);
      out.v3l = unite(out.v3l, ev.v3l);
      for (const auto& kv : ev.viols) {
        out.viols.push_back({idx, kv.first, kv.second});
      }
    } catch (const SplitAt& sp) {
      if (cell.kind != Cell::OPEN)
        throw InternalError("split requested on a point cell");
      bool inside = sp.at > cell.lo && (cell.unbounded || sp.at < cell.hi);
      if (!inside) throw InternalError("split point outside its cell");
      Cell right{Cell::OPEN, sp.at, cell.hi, cell.unbounded};
      Cell mid{Cell::POINT, sp.at, sp.at, false};
      Cell left{Cell::OPEN, cell.lo, sp.at, false};
      work.push_front(right);
      work.push_front(mid);
      work.push_front(left);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literal evaluation at a single point (original space). Serves the report,
// the finite table path, and witness extraction.
// ---------------------------------------------------------------------------

bool part_has(const IntervalPart& p, const Ext& v) {
  if (v < p.lo || (v == p.lo && !p.lo_closed)) return false;
  if (p.hi < v || (v == p.hi && !p.hi_closed)) return false;
  return true;
}

// {x : F(x, y) in target} for side 0, {x : F(y, x) in target} for side 1.
IntervalPointSet literal_preimage(const Semigroup& f, const Ext& y,
                                  const IntervalPart& target, int side) {
  if (f.kind == SemigroupKind::TABLE) {
    std::vector<IntervalPart> pts;
    for (const Ext& c : f.carrier) {
      Ext v = side == 0 ? f_eval(f, c, y) : f_eval(f, y, c);
      if (part_has(target, v)) pts.push_back({c, true, c, true});
    }
    return IntervalPointSet::from_parts(std::move(pts));
  }
  if (y.is_inf()) {
    bool hits = target.hi.is_inf() && target.hi_closed;
    return hits ? IntervalPointSet::carrier() : IntervalPointSet::empty_set();
  }
  if (target.lo.is_inf()) return IntervalPointSet::point(Ext::inf());
  if (f.kind == SemigroupKind::MAX) {
    if (part_has(target, y)) {
      return IntervalPointSet::interval(Ext(0L), true, target.hi,
                                        target.hi_closed);
    }
    bool below = y < target.lo || (y == target.lo && !target.lo_closed);
    if (below) {
      return IntervalPointSet::interval(target.lo, target.lo_closed, target.hi,
                                        target.hi_closed);
    }
    return IntervalPointSet::empty_set();
  }
  bool mulk = (f.kind == SemigroupKind::LINPROD);
  Ext lo;
  bool lo_c = target.lo_closed;
  if (target.lo < y) {
    lo = Ext(0L);
    lo_c = true;
  } else if (mulk) {
    Rat pl = target.lo.rat() + 1;
    Rat py = y.rat() + 1;
    Rat q = pl / py;
    Rat xl = q - 1;
    lo = Ext(xl);
  } else {
    Rat xl = target.lo.rat() - y.rat();
    lo = Ext(xl);
  }
  Ext hi;
  bool hi_c = target.hi_closed;
  if (target.hi.is_inf()) {
    hi = Ext::inf();
  } else if (target.hi < y) {
    return IntervalPointSet::empty_set();
  } else if (mulk) {
    Rat ph = target.hi.rat() + 1;
    Rat py = y.rat() + 1;
    Rat q = ph / py;
    Rat xh = q - 1;
    hi = Ext(xh);
  } else {
    Rat xh = target.hi.rat() - y.rat();
    hi = Ext(xh);
  }
  return IntervalPointSet::interval(lo, lo_c, hi, hi_c);
}

IntervalPointSet literal_preimage_set(const Semigroup& f, const Ext& y,
                                      const IntervalPointSet& target,
                                      int side) {
  IntervalPointSet acc;
  for (const IntervalPart& p : target.parts()) {
    acc = unite(acc, literal_preimage(f, y, p, side));
  }
  return acc;
}

bool set_has_finite(const IntervalPointSet& s) {
  for (const IntervalPart& p : s.parts()) {
    if (p.lo.is_finite()) return true;
  }
  return false;
}

// Does some pair tell the collapsed value apart from a genuine product?
bool separating_pairs(const Semigroup& f, const IntervalPointSet& mk,
                      const IntervalPointSet& partner, const Ext& y,
                      const Ext& anchor, int side) {
  if (mk.is_empty() || partner.is_empty()) return false;
  if (f.kind == SemigroupKind::TABLE) {
    for (const IntervalPart& p1 : mk.parts()) {
      Ext x1 = p1.lo;
      Ext v = side == 0 ? f_eval(f, x1, y) : f_eval(f, y, x1);
      for (const IntervalPart& p2 : partner.parts()) {
        Ext x2 = p2.lo;
        Ext via = side == 0 ? f_eval(f, v, x2) : f_eval(f, x2, v);
        Ext col = side == 0 ? f_eval(f, anchor, x2) : f_eval(f, x2, anchor);
        if (via != col) return true;
      }
    }
    return false;
  }
  if (f.kind == SemigroupKind::MAX) {
    IntervalPointSet img =
        side == 0 ? f_image(f, mk, IntervalPointSet::point(y))
                  : f_image(f, IntervalPointSet::point(y), mk);
    return partner.inf_value() < img.sup_value();
  }
  return set_has_finite(partner);
}

// The single value of F(x, fix) over x in s (fix_side 1: F(fix, x)), when
// that image is constant.
std::optional<Ext> const_image(const Semigroup& f, const IntervalPointSet& s,
                               const Ext& fix, int fix_side) {
  if (s.is_empty()) return std::nullopt;
  if (f.kind == SemigroupKind::TABLE) {
    std::optional<Ext> val;
    for (const IntervalPart& p : s.parts()) {
      Ext v = fix_side == 0 ? f_eval(f, p.lo, fix) : f_eval(f, fix, p.lo);
      if (!val) val = v;
      else if (*val != v) return std::nullopt;
    }
    return val;
  }
  if (fix.is_inf()) return Ext::inf();
  if (s.is_single_point()) {
    Ext p = s.parts()[0].lo;
    return fix_side == 0 ? f_eval(f, p, fix) : f_eval(f, fix, p);
  }
  if (f.kind == SemigroupKind::MAX && s.sup_value() <= fix) return fix;
  return std::nullopt;
}

bool pair_separates(const Semigroup& f, const IntervalPointSet& a,
                    const IntervalPointSet& b, const Ext& anchor_k,
                    const Ext& anchor_l) {
  if (a.is_empty() || b.is_empty()) return false;
  auto left = const_image(f, b, anchor_k, 1);   // F(anchor_k, x2) over b
  auto right = const_image(f, a, anchor_l, 0);  // F(x1, anchor_l) over a
  return !(left && right && *left == *right);
}

// ---------------------------------------------------------------------------
// Rays for witness extraction.
// ---------------------------------------------------------------------------

IntervalPointSet ray_less(const Semigroup& f, const Ext& fix, const Ext& w) {
  // {z : F(fix, z) < w}
  if (f.kind == SemigroupKind::TABLE) {
    std::vector<IntervalPart> pts;
    for (const Ext& c : f.carrier) {
      Ext v = f_eval(f, fix, c);
      if (v < w) pts.push_back({c, true, c, true});
    }
    return IntervalPointSet::from_parts(std::move(pts));
  }
  if (fix.is_inf()) return IntervalPointSet::empty_set();
  if (f.kind == SemigroupKind::MAX) {
    if (!(fix < w)) return IntervalPointSet::empty_set();
    return IntervalPointSet::interval(Ext(0L), true, w, false);
  }
  if (!(fix < w)) return IntervalPointSet::empty_set();
  if (w.is_inf()) {
    return IntervalPointSet::interval(Ext(0L), true, Ext::inf(), false);
  }
  Ext top;
  if (f.kind == SemigroupKind::LINPROD) {
    Rat pw = w.rat() + 1;
    Rat pf = fix.rat() + 1;
    Rat q = pw / pf;
    Rat t = q - 1;
    top = Ext(t);
  } else {
    Rat t = w.rat() - fix.rat();
    top = Ext(t);
  }
  return IntervalPointSet::interval(Ext(0L), true, top, false);
}

IntervalPointSet ray_at_least(const Semigroup& f, const Ext& fix, const Ext& w,
                              bool strict) {
  // {z : F(fix, z) >= w}, strictly above when strict is set
  if (f.kind == SemigroupKind::TABLE) {
    std::vector<IntervalPart> pts;
    for (const Ext& c : f.carrier) {
      Ext v = f_eval(f, fix, c);
      if (strict ? w < v : !(v < w)) pts.push_back({c, true, c, true});
    }
    return IntervalPointSet::from_parts(std::move(pts));
  }
  IntervalPointSet all = IntervalPointSet::carrier();
  if (fix.is_inf()) {
    if (strict && w.is_inf()) return IntervalPointSet::empty_set();
    return all;
  }
  if (f.kind == SemigroupKind::MAX) {
    if (strict ? w < fix : !(fix < w)) return all;
    if (w.is_inf()) {
      return strict ? IntervalPointSet::empty_set()
                    : IntervalPointSet::point(Ext::inf());
    }
    return IntervalPointSet::interval(w, !strict, Ext::inf(), true);
  }
  if (w.is_inf()) {
    return strict ? IntervalPointSet::empty_set()
                  : IntervalPointSet::point(Ext::inf());
  }
  Ext bound;
  if (f.kind == SemigroupKind::LINPROD) {
    Rat pw = w.rat() + 1;
    Rat pf = fix.rat() + 1;
    Rat q = pw / pf;
    Rat t = q - 1;
    bound = Ext(t);
  } else {
    Rat t = w.rat() - fix.rat();
    bound = Ext(t);
  }
  if (bound < Ext(0L)) return all;
  if (bound == Ext(0L) && !strict) return all;
  return IntervalPointSet::interval(bound, !strict, Ext::inf(), true);
}

// x with F(x, y) = v, preferring members of mk; nothing when v is not an
// exact product.
std::optional<Ext> unapply(const Semigroup& f, const Ext& v, const Ext& y,
                           const IntervalPointSet& mk) {
  if (f.kind == SemigroupKind::TABLE) {
    for (const IntervalPart& p : mk.parts()) {
      if (f_eval(f, p.lo, y) == v) return p.lo;
    }
    return std::nullopt;
  }
  if (f.kind == SemigroupKind::MAX) {
    if (y < v) return v;
    if (v == y) {
      IntervalPointSet low =
          intersect(mk, IntervalPointSet::interval(Ext(0L), true, y, true));
      if (!low.is_empty()) return low.pick_point();
    }
    return std::nullopt;
  }
  if (v.is_inf()) {
    if (y.is_inf()) return std::nullopt;
    return Ext::inf();
  }
  if (y.is_inf() || v < y) return std::nullopt;
  if (f.kind == SemigroupKind::LINPROD) {
    Rat pv = v.rat() + 1;
    Rat py = y.rat() + 1;
    Rat q = pv / py;
    Rat x = q - 1;
    return Ext(x);
  }
  Rat x = v.rat() - y.rat();
  return Ext(x);
}

struct TrapsLiteralAt {
  IntervalPointSet strict_lower, strict_upper;
  IntervalPointSet literal_lower, literal_upper;
};

TrapsLiteralAt traps_at(const Semigroup& f, const IntervalPointSet& m,
                        const TrapData& trap, const Ext& y) {
  TrapsLiteralAt out;
  out.strict_lower = intersect(m, literal_preimage_set(f, y, trap.strict_value, 0));
  out.strict_upper = intersect(m, literal_preimage_set(f, y, trap.strict_value, 1));
  out.literal_lower =
      intersect(m, literal_preimage_set(f, y, trap.literal_value, 0));
  out.literal_upper =
      intersect(m, literal_preimage_set(f, y, trap.literal_value, 1));
  return out;
}

IntervalPointSet active_literal(const Semigroup& f, const IntervalPointSet& p,
                                const Ext& u) {
  if (f.kind == SemigroupKind::MAX) {
    return intersect(p, IntervalPointSet::interval(Ext(0L), true, u, false));
  }
  return intersect(
      p, IntervalPointSet::interval(Ext(0L), true, Ext::inf(), false));
}

// Collapse-vs-staying witness at a fixed second coordinate.
std::optional<std::array<Ext, 3>> extract_collapse_witness(
    const Semigroup& f, const IntervalPointSet& m,
    const IntervalPointSet& mprime, const TrapData& trap, const Ext& y) {
  IntervalPointSet mk =
      intersect(m, literal_preimage_set(f, y, trap.strict_value, 0));
  if (mk.is_empty()) return std::nullopt;
  IntervalPointSet vimg = f_image(f, mk, IntervalPointSet::point(y));
  Ext u = vimg.sup_value();
  bool u_att = vimg.sup_attained();
  IntervalPointSet partner = intersect(m, literal_preimage_set(f, y, m, 1));
  for (const IntervalPart& pp : partner.parts()) {
    IntervalPointSet pset = IntervalPointSet::from_parts({pp});
    IntervalPointSet act = active_literal(f, pset, u);
    if (act.is_empty()) continue;
    IntervalPointSet lo_img =
        f_image(f, IntervalPointSet::point(trap.anchor_value), act);
    IntervalPointSet hi_img = f_image(f, vimg, act);
    IntervalPointSet window = IntervalPointSet::interval(
        lo_img.inf_value(), false, hi_img.sup_value(), hi_img.sup_attained());
    IntervalPointSet hit = intersect(window, mprime);
    if (hit.is_empty()) continue;
    Ext w = hit.pick_point();
    IntervalPointSet zs = intersect(act, ray_less(f, trap.anchor_value, w));
    zs = intersect(zs, ray_at_least(f, u, w, !u_att));
    if (zs.is_empty()) continue;
    Ext z = zs.pick_point();
    IntervalPointSet vs = intersect(vimg, ray_at_least(f, z, w, false));
    if (vs.is_empty()) continue;
    Ext v = vs.pick_point();
    std::optional<Ext> x1 = unapply(f, v, y, mk);
    if (!x1 || !mk.member(*x1)) continue;
    return std::array<Ext, 3>{*x1, y, z};
  }
  return std::nullopt;
}

// Double-collapse witness at a fixed middle coordinate.
std::optional<std::array<Ext, 3>> extract_pair_witness(
    const Semigroup& f, const IntervalPointSet& m,
    const IntervalPointSet& mprime, const TrapData& tk, const TrapData& tl,
    const Ext& y) {
  IntervalPointSet a =
      intersect(m, literal_preimage_set(f, y, tk.strict_value, 0));
  IntervalPointSet b =
      intersect(m, literal_preimage_set(f, y, tl.strict_value, 1));
  if (a.is_empty() || b.is_empty()) return std::nullopt;
  IntervalPointSet imgs =
      unite(f_image(f, a, IntervalPointSet::point(tl.anchor_value)),
            f_image(f, IntervalPointSet::point(tk.anchor_value), b));
  IntervalPointSet j = IntervalPointSet::interval(
      imgs.inf_value(), false, imgs.sup_value(), imgs.sup_attained());
  IntervalPointSet hit = intersect(j, mprime);
  if (hit.is_empty()) return std::nullopt;
  Ext w = hit.pick_point();
  {
    IntervalPointSet zs = intersect(b, ray_less(f, tk.anchor_value, w));
    IntervalPointSet xs = intersect(a, ray_at_least(f, tl.anchor_value, w, false));
    if (!zs.is_empty() && !xs.is_empty()) {
      return std::array<Ext, 3>{xs.pick_point(), y, zs.pick_point()};
    }
  }
  {
    IntervalPointSet zs = intersect(b, ray_at_least(f, tk.anchor_value, w, false));
    IntervalPointSet xs = intersect(a, ray_less(f, tl.anchor_value, w));
    if (!zs.is_empty() && !xs.is_empty()) {
      return std::array<Ext, 3>{xs.pick_point(), y, zs.pick_point()};
    }
  }
  return std::nullopt;
}

std::optional<Ext> pick_preimage(const PiecewiseMonotone& t, const Ext& v) {
  for (const Segment& s : t.segments()) {
    if (s.kind == SegmentKind::CONSTANT || s.kind == SegmentKind::POINT_INF) {
      if (s.formula.eval(s.lo) != v) continue;
      if (s.lo_closed) return s.lo;
      if (s.hi_closed) return s.hi;
      Rat sum = s.lo.rat() + s.hi.rat();
      Rat mid = sum / 2;
      return Ext(mid);
    }
    Ext x = s.formula.solve(v);
    if (s.contains(x) && t.eval(x) == v) return x;
  }
  return std::nullopt;
}

std::optional<AssocWitness> finalize_witness(const GeneratedOp& op,
                                             const Ext& vx, const Ext& vy,
                                             const Ext& vz) {
  const RangeDecomposition& dec = *op.dec;
  Ext ab = otimes(dec, op.f, vx, vy);
  Ext lv = otimes(dec, op.f, ab, vz);
  Ext bc = otimes(dec, op.f, vy, vz);
  Ext rv = otimes(dec, op.f, vx, bc);
  if (lv == rv) return std::nullopt;
  auto px = pick_preimage(op.t, vx);
  auto py = pick_preimage(op.t, vy);
  auto pz = pick_preimage(op.t, vz);
  if (!px || !py || !pz) return std::nullopt;
  Ext txy = op.eval(*px, *py);
  Ext lhs = op.eval(txy, *pz);
  Ext tyz = op.eval(*py, *pz);
  Ext rhs = op.eval(*px, tyz);
  if (lhs == rhs) return std::nullopt;
  return AssocWitness{*px, *py, *pz, lhs, rhs, vx, vy, vz};
}

// ---------------------------------------------------------------------------
// Cell records for the report: the literal sets, displayed at one point.
// ---------------------------------------------------------------------------

CellRecord literal_cell_record(const Semigroup& f, const IntervalPointSet& m,
                               const Ext& t0,
                               const std::vector<TrapData>& traps,
                               const IntervalPart& cell, const Ext& rep,
                               const CellFlags& flags, bool commutative) {
  CellRecord rec;
  rec.cell = cell;
  rec.rep = rep;
  rec.m_lower = intersect(m, literal_preimage_set(f, rep, m, 0));
  rec.m_upper = intersect(m, literal_preimage_set(f, rep, m, 1));
  IntervalPointSet below =
      IntervalPointSet::interval(Ext(0L), true, t0, false);
  rec.m_tau_lower = intersect(m, literal_preimage_set(f, rep, below, 0));
  rec.m_tau_upper = intersect(m, literal_preimage_set(f, rep, below, 1));
  size_t nt = traps.size();
  std::vector<TrapsLiteralAt> at;
  at.reserve(nt);
  for (const TrapData& t : traps) at.push_back(traps_at(f, m, t, rep));
  for (size_t k = 0; k < nt; ++k) {
    GapRecord g;
    g.gap = traps[k].label;
    g.anchor = traps[k].anchor_value;
    g.m_lower = at[k].literal_lower;
    g.m_upper = at[k].literal_upper;
    g.h_lower = o_hull(unite(IntervalPointSet::point(g.anchor),
                             f_image(f, g.m_lower, IntervalPointSet::point(rep))));
    g.h_upper = o_hull(unite(IntervalPointSet::point(g.anchor),
                             f_image(f, IntervalPointSet::point(rep), g.m_upper)));
    g.i_lower_nonempty =
        separating_pairs(f, g.m_lower, rec.m_upper, rep, g.anchor, 0);
    g.i_upper_nonempty =
        separating_pairs(f, g.m_upper, rec.m_lower, rep, g.anchor, 1);
    g.hit_lower = flags.c1_hit[k] != 0;
    g.hit_upper = commutative ? g.hit_lower : g.hit_lower;
    rec.gaps.push_back(std::move(g));
  }
  for (size_t k = 0; k < nt; ++k) {
    for (size_t l = 0; l < nt; ++l) {
      PairRecord p;
      p.left_gap = traps[k].label;
      p.right_gap = traps[l].label;
      IntervalPointSet imgs = unite(
          f_image(f, at[k].literal_lower,
                  IntervalPointSet::point(traps[l].anchor_value)),
          f_image(f, IntervalPointSet::point(traps[k].anchor_value),
                  at[l].literal_upper));
      p.j = o_hull(imgs);
      p.i_nonempty = pair_separates(f, at[k].literal_lower,
                                    at[l].literal_upper,
                                    traps[k].anchor_value,
                                    traps[l].anchor_value);
      p.hit = flags.c3_hit[k * nt + l] != 0;
      rec.pairs.push_back(std::move(p));
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Finite path: every member enumerated, both argument orders literal.
// ---------------------------------------------------------------------------

struct FiniteOutcome {
  std::vector<CellRecord> cells;
  std::vector<CellFlags> flags;
  IntervalPointSet v1, v2, v3s, v3l;
  std::vector<std::array<Ext, 3>> triples;  // ordered witness candidates
};

FiniteOutcome run_finite(const Semigroup& f, const IntervalPointSet& m,
                         const IntervalPointSet& mprime, const Ext& t0,
                         const std::vector<TrapData>& traps) {
  FiniteOutcome out;
  std::vector<Ext> members;
  for (const IntervalPart& p : m.parts()) {
    if (!(p.lo == p.hi && p.lo_closed && p.hi_closed))
      throw InternalError("finite sweep on a non-finite member set");
    members.push_back(p.lo);
  }
  size_t nt = traps.size();
  for (const Ext& y : members) {
    CellFlags flags;
    flags.c1_hit.assign(nt, 0);
    flags.c3_hit.assign(nt * nt, 0);
    IntervalPointSet stay_lower = intersect(m, literal_preimage_set(f, y, m, 0));
    IntervalPointSet stay_upper = intersect(m, literal_preimage_set(f, y, m, 1));
    std::vector<TrapsLiteralAt> at;
    at.reserve(nt);
    for (const TrapData& t : traps) at.push_back(traps_at(f, m, t, y));

    auto window_hit = [&](const Ext& lo, const Ext& hi, IntervalPointSet* acc)
        -> bool {
      Ext a = ext_min(lo, hi);
      Ext b = ext_max(lo, hi);
      IntervalPointSet w = IntervalPointSet::interval(a, false, b, true);
      *acc = unite(*acc, w);
      return !intersect(w, mprime).is_empty();
    };

    for (size_t k = 0; k < nt; ++k) {
      const Ext& anchor = traps[k].anchor_value;
      // first product collapses, second stays
      for (const IntervalPart& p1 : at[k].strict_lower.parts()) {
        Ext x1 = p1.lo;
        Ext v = f_eval(f, x1, y);
        for (const IntervalPart& p2 : stay_upper.parts()) {
          Ext z = p2.lo;
          Ext lo = f_eval(f, anchor, z);
          Ext hi = f_eval(f, v, z);
          if (window_hit(lo, hi, &out.v1)) {
            flags.c1_hit[k] = 1;
            out.triples.push_back({x1, y, z});
          }
        }
      }
      // second product collapses, first stays
      for (const IntervalPart& p2 : at[k].strict_upper.parts()) {
        Ext z2 = p2.lo;
        Ext v2 = f_eval(f, y, z2);
        for (const IntervalPart& p1 : stay_lower.parts()) {
          Ext x = p1.lo;
          Ext lo = f_eval(f, x, anchor);
          Ext hi = f_eval(f, x, v2);
          if (window_hit(lo, hi, &out.v2)) {
            flags.c1_hit[k] = 1;
            out.triples.push_back({x, y, z2});
          }
        }
      }
      for (size_t l = 0; l < nt; ++l) {
        const Ext& al = traps[l].anchor_value;
        for (const IntervalPart& p1 : at[k].strict_lower.parts()) {
          Ext x1 = p1.lo;
          for (const IntervalPart& p2 : at[l].strict_upper.parts()) {
            Ext z2 = p2.lo;
            Ext lo = f_eval(f, anchor, z2);
            Ext hi = f_eval(f, x1, al);
            if (window_hit(lo, hi, &out.v3s)) {
              flags.c3_hit[k * nt + l] = 1;
              out.triples.push_back({x1, y, z2});
            }
          }
        }
        // literal flavor, accumulation only
        for (const IntervalPart& p1 : at[k].literal_lower.parts()) {
          Ext x1 = p1.lo;
          for (const IntervalPart& p2 : at[l].literal_upper.parts()) {
            Ext z2 = p2.lo;
            Ext lo = f_eval(f, anchor, z2);
            Ext hi = f_eval(f, x1, al);
            Ext a = ext_min(lo, hi);
            Ext b = ext_max(lo, hi);
            out.v3l = unite(out.v3l,
                            IntervalPointSet::interval(a, false, b, true));
          }
        }
      }
    }
    IntervalPart cellp{y, true, y, true};
    out.cells.push_back(
        literal_cell_record(f, m, t0, traps, cellp, y, flags, false));
    out.flags.push_back(std::move(flags));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Display transform: order hull of the weak-inverse image.
// ---------------------------------------------------------------------------

bool left_value_attained(const PiecewiseMonotone& w, const Ext& v) {
  const Segment* owner = nullptr;
  for (const Segment& s : w.segments()) {
    if (s.lo < v) owner = &s;
  }
  if (!owner) return true;
  return owner->kind == SegmentKind::CONSTANT ||
         owner->kind == SegmentKind::POINT_INF || owner->degenerate();
}

IntervalPointSet pullback_hull(const PiecewiseMonotone& winv,
                               const IntervalPointSet& viol) {
  if (viol.is_empty()) return IntervalPointSet::empty_set();
  Ext lo = winv.eval(viol.inf_value());
  Ext supv = viol.sup_value();
  Ext hi;
  bool att;
  if (viol.sup_attained()) {
    hi = winv.eval(supv);
    att = true;
  } else {
    hi = winv.limit_left(supv);
    att = left_value_attained(winv, supv);
  }
  return IntervalPointSet::interval(lo, false, hi, att);
}

std::vector<TrapData> build_traps(const RangeDecomposition& dec) {
  std::vector<TrapData> traps;
  const IntervalPointSet& m = dec.m();
  if (!dec.degenerate()) {
    int idx = 0;
    for (const Gap& g : dec.gaps()) {
      ++idx;
      TrapData t;
      t.label = "gap " + std::to_string(idx);
      t.anchor_value = g.b;
      t.literal_value = IntervalPointSet::interval(g.b, false, g.d, true);
      t.strict_value = subtract(t.literal_value, m);
      traps.push_back(std::move(t));
    }
  }
  TrapData tau;
  tau.label = "tau";
  tau.anchor_value = dec.t0();
  tau.literal_value =
      IntervalPointSet::interval(Ext(0L), true, dec.t0(), false);
  tau.strict_value = tau.literal_value;
  traps.push_back(std::move(tau));
  return traps;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API.
// ---------------------------------------------------------------------------

Ext GeneratedOp::eval(const Ext& x, const Ext& y) const {
  Ext u = t.eval(x);
  Ext v = t.eval(y);
  Ext w = f_eval(f, u, v);
  return tinv.eval(w);
}

GeneratedOp build_generated_op(const PiecewiseMonotone& t, const Semigroup& f,
                               OpMode mode) {
  ValidationReport vr = validate(t);
  if (!vr.ok()) {
    throw PreconditionViolated("generator fails validation: " +
                               vr.violations.front().what);
  }
  if (mode == OpMode::SUPCONORM && t.direction() != Direction::NON_DECREASING) {
    throw PreconditionViolated(
        "join orientation requires a non-decreasing generator");
  }
  if (mode == OpMode::NORM && t.direction() != Direction::NON_INCREASING) {
    throw PreconditionViolated(
        "meet orientation requires a non-increasing generator");
  }
  if (f.kind == SemigroupKind::TABLE) {
    std::vector<IntervalPart> pts;
    for (const Ext& c : f.carrier) pts.push_back({c, true, c, true});
    IntervalPointSet carrier_set = IntervalPointSet::from_parts(std::move(pts));
    if (!subset_of(range_of(t), carrier_set)) {
      throw PreconditionViolated(
          "generator range must lie inside the table carrier");
    }
  }
  GeneratedOp op{t, f, weak_pseudo_inverse(t), std::nullopt, mode};
  if (t.direction() == Direction::NON_DECREASING && vr.left_continuous) {
    op.dec = decompose(t);
  }
  return op;
}

ConditionOutcome check_generator_condition(const PiecewiseMonotone& t,
                                           const Semigroup& f, OpMode mode) {
  ValidationReport vr = validate(t);
  if (!vr.ok()) {
    throw PreconditionViolated("generator fails validation: " +
                               vr.violations.front().what);
  }
  if (mode == OpMode::SUPCONORM && t.direction() != Direction::NON_DECREASING) {
    throw PreconditionViolated(
        "join orientation requires a non-decreasing generator");
  }
  if (mode == OpMode::NORM && t.direction() != Direction::NON_INCREASING) {
    throw PreconditionViolated(
        "meet orientation requires a non-increasing generator");
  }
  IntervalPointSet m = range_of(t);
  Ext threshold = mode == OpMode::SUPCONORM ? t.limit_left(t.domain_hi())
                                            : t.limit_right(t.domain_lo());
  IntervalPointSet allowed =
      unite(m, IntervalPointSet::interval(threshold, true, Ext::inf(), true));
  IntervalPointSet img = f_image(f, m, m);
  IntervalPointSet escape = subtract(img, allowed);
  ConditionOutcome out;
  out.threshold = threshold;
  out.holds = escape.is_empty();
  if (out.holds) return out;
  Ext w = escape.pick_point();
  out.witness_value = w;
  std::optional<std::pair<Ext, Ext>> uv = f_solve_pair(f, m, m, w);
  if (uv) {
    auto px = pick_preimage(t, uv->first);
    auto py = pick_preimage(t, uv->second);
    if (px && py) out.witness = std::make_pair(*px, *py);
  }
  if (!out.witness) {
    throw InternalError("escaping value without a witnessing pair");
  }
  return out;
}

ConditionReport f_condition_check(const GeneratedOp& op) {
  if (!op.dec || op.mode != OpMode::SUPCONORM ||
      op.t.direction() != Direction::NON_DECREASING) {
    throw PreconditionViolated(
        "associativity check requires a left-continuous non-decreasing "
        "generator in join orientation");
  }
  const RangeDecomposition& dec = *op.dec;
  const Semigroup& f = op.f;
  IntervalPointSet m = dec.m();
  Ext t0 = dec.t0();
  IntervalPointSet mprime = subtract(m, IntervalPointSet::point(t0));
  std::vector<TrapData> traps = build_traps(dec);

  ConditionReport report;
  IntervalPointSet v1, v2, v3s, v3l;
  std::vector<std::array<Ext, 3>> candidates;
  bool violated = false;

  if (f.kind == SemigroupKind::TABLE) {
    FiniteOutcome fin = run_finite(f, m, mprime, t0, traps);
    report.cells = std::move(fin.cells);
    v1 = fin.v1;
    v2 = fin.v2;
    v3s = fin.v3s;
    v3l = fin.v3l;
    candidates = std::move(fin.triples);
    violated = !candidates.empty();
  } else {
    bool mul = product_space(f.kind);
    SweepInput in;
    in.kind = f.kind;
    in.mul = mul;
    in.bottom = mul ? Rat(1) : Rat(0);
    in.m_eng = to_space_set(m, mul);
    in.mprime_eng = to_space_set(mprime, mul);
    in.traps = traps;
    for (const TrapData& t : traps) {
      in.strict_eng.push_back(const_parts(to_space_set(t.strict_value, mul)));
      in.literal_eng.push_back(const_parts(to_space_set(t.literal_value, mul)));
      Sc a = sc_const(to_space(t.anchor_value, mul));
      in.anchors_eng.push_back(SPart{a, true, a, true});
    }
    in.m_parts = const_parts(in.m_eng);
    in.mprime_parts = const_parts(in.mprime_eng);

    SweepOutcome sw = run_sweep(in);
    v1 = from_space_set(sw.v1, mul);
    v2 = v1;  // built-in operations are commutative
    v3s = from_space_set(sw.v3s, mul);
    v3l = from_space_set(sw.v3l, mul);
    violated = !sw.viols.empty();

    for (size_t i = 0; i < sw.cells.size(); ++i) {
      Ctx cx = make_ctx(sw.cells[i], mul);
      Ext rep = from_space(cell_rep_value(sw.cells[i], cx), mul);
      report.cells.push_back(literal_cell_record(
          f, m, t0, traps, cell_as_part(sw.cells[i], mul), rep, sw.flags[i],
          true));
    }
    for (const SweepViolation& v : sw.viols) {
      Ctx cx = make_ctx(sw.cells[v.cell_index], mul);
      Ext rep = from_space(cell_rep_value(sw.cells[v.cell_index], cx), mul);
      std::optional<std::array<Ext, 3>> tr;
      if (v.l < 0) {
        tr = extract_collapse_witness(f, m, mprime, traps[v.k], rep);
      } else {
        tr = extract_pair_witness(f, m, mprime, traps[v.k], traps[v.l], rep);
      }
      if (tr) candidates.push_back(*tr);
    }
  }

  report.frak.val1 = v1;
  report.frak.val2 = v2;
  report.frak.val3 = v3s;
  report.frak.val_union = unite(unite(v1, v2), v3s);
  report.frak.t1 = pullback_hull(op.tinv, v1);
  report.frak.t2 = pullback_hull(op.tinv, v2);
  IntervalPointSet lit3_finite = intersect(
      v3l, IntervalPointSet::interval(Ext(0L), true, Ext::inf(), false));
  report.frak.t3 = pullback_hull(op.tinv, lit3_finite);
  report.frak.t_union =
      unite(unite(report.frak.t1, report.frak.t2), report.frak.t3);

  if (!violated) {
    report.verdict = AssocVerdict::ASSOCIATIVE;
    return report;
  }
  report.verdict = AssocVerdict::NOT_ASSOCIATIVE;
  for (const auto& tr : candidates) {
    auto w = finalize_witness(op, tr[0], tr[1], tr[2]);
    if (w) {
      report.witness = w;
      return report;
    }
  }
  auto brute = brute_force_assoc(op, default_grid(op));
  if (brute) {
    report.witness = brute;
    return report;
  }
  throw InternalError("violation found but no witness could be extracted");
}

FrakSets frak_t(const GeneratedOp& op) { return f_condition_check(op).frak; }

std::vector<Ext> default_grid(const GeneratedOp& op) {
  std::vector<Ext> pts = op.t.breakpoints();
  pts.push_back(Ext(0L));
  pts.push_back(Ext(1L));
  if (op.dec && !op.dec->degenerate()) {
    for (const Gap& g : op.dec->gaps()) {
      pts.push_back(op.tinv.eval(g.b));
      pts.push_back(op.tinv.eval(g.d));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Ext> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i]);
    if (i + 1 < pts.size()) {
      Rat sum = pts[i].rat() + pts[i + 1].rat();
      Rat mid = sum / 2;
      out.push_back(Ext(mid));
    }
  }
  return out;
}

std::optional<AssocWitness> brute_force_assoc(const GeneratedOp& op,
                                              const std::vector<Ext>& grid) {
  for (const Ext& x : grid) {
    for (const Ext& y : grid) {
      for (const Ext& z : grid) {
        Ext txy = op.eval(x, y);
        Ext lhs = op.eval(txy, z);
        Ext tyz = op.eval(y, z);
        Ext rhs = op.eval(x, tyz);
        if (lhs != rhs) {
          return AssocWitness{x,   y,   z,
                              lhs, rhs, op.t.eval(x),
                              op.t.eval(y), op.t.eval(z)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace genalg
