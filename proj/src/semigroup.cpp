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

#include "genalg/semigroup.hpp"

#include <algorithm>

#include "genalg/errors.hpp"

namespace genalg {

std::string Semigroup::name() const {
  switch (kind) {
    case SemigroupKind::SUM: return "SUM";
    case SemigroupKind::MAX: return "MAX";
    case SemigroupKind::LINPROD: return "LINPROD";
    case SemigroupKind::TABLE: return "TABLE";
  }
  return "?";
}

Semigroup make_sum() {
  Semigroup f;
  f.kind = SemigroupKind::SUM;
  f.strict = true;
  f.continuous = true;
  f.has_neutral = true;
  f.neutral = Ext(0L);
  return f;
}

Semigroup make_max() {
  Semigroup f;
  f.kind = SemigroupKind::MAX;
  f.strict = false;
  f.continuous = true;
  f.has_neutral = true;
  f.neutral = Ext(0L);
  return f;
}

Semigroup make_linprod() {
  Semigroup f;
  f.kind = SemigroupKind::LINPROD;
  f.strict = true;
  f.continuous = true;
  f.has_neutral = true;
  f.neutral = Ext(0L);
  return f;
}

namespace {

std::size_t table_index(const Semigroup& f, const Ext& x) {
  auto it = std::lower_bound(f.carrier.begin(), f.carrier.end(), x);
  if (it == f.carrier.end() || *it != x) {
    throw PreconditionViolated("value " + ext_to_string(x) +
                               " is not in the table carrier");
  }
  return static_cast<std::size_t>(it - f.carrier.begin());
}

}  // namespace

Semigroup make_table(std::vector<Ext> carrier,
                     std::vector<std::vector<Ext>> table) {
  Semigroup f;
  f.kind = SemigroupKind::TABLE;
  f.continuous = false;
  std::sort(carrier.begin(), carrier.end());
  if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end()) {
    throw PreconditionViolated("table carrier has duplicate values");
  }
  if (carrier.empty()) {
    throw PreconditionViolated("table carrier is empty");
  }
  for (const auto& v : carrier) {
    if (v.is_finite() && v.rat() < 0) {
      throw PreconditionViolated("table carrier below 0");
    }
  }
  const std::size_t n = carrier.size();
  if (table.size() != n) {
    throw PreconditionViolated("table row count does not match carrier");
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      throw PreconditionViolated("table column count does not match carrier");
    }
  }
  f.carrier = std::move(carrier);
  f.table = std::move(table);

  auto at = [&](std::size_t i, std::size_t j) -> const Ext& {
    return f.table[i][j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table_index(f, at(i, j));  // closure
      if (at(i, j) != at(j, i)) {
        throw PreconditionViolated("table is not commutative");
      }
      if (at(i, j) < ext_max(f.carrier[i], f.carrier[j])) {
        throw PreconditionViolated("table does not dominate max");
      }
      if (j + 1 < n && at(i, j) > at(i, j + 1)) {
        throw PreconditionViolated("table is not monotone");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Ext lhs = at(table_index(f, at(i, j)), k);
        const Ext rhs = at(i, table_index(f, at(j, k)));
        if (lhs != rhs) {
          throw PreconditionViolated("table is not associative");
        }
      }
    }
  }
  f.strict = true;
  for (std::size_t i = 0; i < n && f.strict; ++i) {
    if (f.carrier[i].is_inf()) continue;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (at(i, j) >= at(i, j + 1)) {
        f.strict = false;
        break;
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool neutral = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (at(e, i) != f.carrier[i]) {
        neutral = false;
        break;
      }
    }
    if (neutral) {
      f.has_neutral = true;
      f.neutral = f.carrier[e];
      break;
    }
  }
  return f;
}

Ext f_eval(const Semigroup& f, const Ext& x, const Ext& y) {
  switch (f.kind) {
    case SemigroupKind::SUM:
      return ext_add(x, y);
    case SemigroupKind::MAX:
      return ext_max(x, y);
    case SemigroupKind::LINPROD:
      if (x.is_inf() || y.is_inf()) return Ext::inf();
      return Ext(x.rat() + y.rat() + x.rat() * y.rat());
    case SemigroupKind::TABLE:
      return f.table[table_index(f, x)][table_index(f, y)];
  }
  throw InternalError("bad semigroup kind");
}

namespace {

// Image of one rectangle under SUM or LINPROD: both are continuous and
// strictly increasing in each argument on finite values, with inf absorbing,
// so the image is the interval between the corner values. An endpoint is
// attained iff both coordinates attain it, or an attained infinite
// coordinate absorbs everything.
IntervalPart strict_rect_image(const Semigroup& f, const IntervalPart& p,
                               const IntervalPart& q) {
  IntervalPart out;
  out.lo = f_eval(f, p.lo, q.lo);
  out.hi = f_eval(f, p.hi, q.hi);
  out.lo_closed = (p.lo_closed && q.lo_closed) ||
                  (p.lo.is_inf() && p.lo_closed) ||
                  (q.lo.is_inf() && q.lo_closed);
  out.hi_closed = (p.hi_closed && q.hi_closed) ||
                  (p.hi.is_inf() && p.hi_closed) ||
                  (q.hi.is_inf() && q.hi_closed);
  return out;
}

IntervalPart max_rect_image(const IntervalPart& p, const IntervalPart& q) {
  IntervalPart out;
  out.lo = ext_max(p.lo, q.lo);
  if (p.lo > q.lo) {
    out.lo_closed = p.lo_closed;
  } else if (q.lo > p.lo) {
    out.lo_closed = q.lo_closed;
  } else {
    out.lo_closed = p.lo_closed && q.lo_closed;
  }
  out.hi = ext_max(p.hi, q.hi);
  if (p.hi > q.hi) {
    out.hi_closed = p.hi_closed;
  } else if (q.hi > p.hi) {
    out.hi_closed = q.hi_closed;
  } else {
    out.hi_closed = p.hi_closed || q.hi_closed;
  }
  return out;
}

}  // namespace

IntervalPointSet f_image(const Semigroup& f, const IntervalPointSet& a,
                         const IntervalPointSet& b) {
  if (a.is_empty() || b.is_empty()) return IntervalPointSet::empty_set();
  if (f.kind == SemigroupKind::TABLE) {
    std::vector<IntervalPart> pts;
    for (const auto& x : f.carrier) {
      if (!a.member(x)) continue;
      for (const auto& y : f.carrier) {
        if (!b.member(y)) continue;
        const Ext v = f_eval(f, x, y);
        pts.push_back(IntervalPart{v, true, v, true});
      }
    }
    return IntervalPointSet::from_parts(std::move(pts));
  }
  std::vector<IntervalPart> parts;
  for (const auto& p : a.parts()) {
    for (const auto& q : b.parts()) {
      parts.push_back(f.kind == SemigroupKind::MAX
                          ? max_rect_image(p, q)
                          : strict_rect_image(f, p, q));
    }
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

std::optional<std::pair<Ext, Ext>> f_solve_pair(const Semigroup& f,
                                                const IntervalPointSet& a,
                                                const IntervalPointSet& b,
                                                const Ext& z) {
  if (a.is_empty() || b.is_empty()) return std::nullopt;
  if (f.kind == SemigroupKind::TABLE) {
    for (const auto& x : f.carrier) {
      if (!a.member(x)) continue;
      for (const auto& y : f.carrier) {
        if (!b.member(y)) continue;
        if (f_eval(f, x, y) == z) return std::make_pair(x, y);
      }
    }
    return std::nullopt;
  }
  if (f.kind == SemigroupKind::MAX) {
    // max(u, v) = z needs one argument equal to z and the other below it.
    const IntervalPointSet upto =
        IntervalPointSet::interval(Ext(0L), true, z, true);
    if (a.member(z)) {
      const IntervalPointSet cand = intersect(b, upto);
      if (!cand.is_empty()) return std::make_pair(z, cand.pick_point());
    }
    if (b.member(z)) {
      const IntervalPointSet cand = intersect(a, upto);
      if (!cand.is_empty()) return std::make_pair(cand.pick_point(), z);
    }
    return std::nullopt;
  }
  // SUM and LINPROD are strictly increasing in each finite argument with
  // inf absorbing, so the result is inf iff one argument is inf.
  if (z.is_inf()) {
    if (a.member(Ext::inf())) {
      return std::make_pair(Ext::inf(), b.pick_point());
    }
    if (b.member(Ext::inf())) {
      return std::make_pair(a.pick_point(), Ext::inf());
    }
    return std::nullopt;
  }
  // Finite z: the partner of v is unique. Translate each v-part of b into
  // the matching u-window (orientation flips: u falls as v rises) and pick
  // any point of a inside it.
  auto unapply = [&](const Ext& v) -> Ext {
    if (f.kind == SemigroupKind::SUM) {
      const Rat r = z.rat() - v.rat();
      return Ext(r);
    }
    const Rat r = (Rat(1) + z.rat()) / (Rat(1) + v.rat()) - Rat(1);
    return Ext(r);
  };
  for (const auto& pb : b.parts()) {
    if (pb.lo > z || pb.lo.is_inf()) continue;
    Ext vhi = pb.hi;
    bool vhi_closed = pb.hi_closed;
    if (vhi > z) {
      vhi = z;
      vhi_closed = true;
    }
    IntervalPart window;
    window.lo = unapply(vhi);
    window.lo_closed = vhi_closed;
    window.hi = unapply(pb.lo);
    window.hi_closed = pb.lo_closed;
    const IntervalPointSet cand =
        intersect(a, IntervalPointSet::from_parts({window}));
    if (cand.is_empty()) continue;
    const Ext u = cand.pick_point();
    const Ext v = unapply(u);
    if (b.member(v) && f_eval(f, u, v) == z) return std::make_pair(u, v);
  }
  return std::nullopt;
}

EvidenceReport gamma_evidence(const Semigroup& f, int budget) {
  budget = std::clamp(budget, 3, 64);
  std::vector<Ext> probes;
  if (f.kind == SemigroupKind::TABLE) {
    probes = f.carrier;
    if (static_cast<int>(probes.size()) > budget) probes.resize(budget);
  } else {
    // Deterministic spread with small and large values plus infinity.
    for (int i = 0; probes.size() + 1 < static_cast<std::size_t>(budget);
         ++i) {
      probes.push_back(Ext(Rat(i * i + i, 4)));  // 0, 1/2, 3/2, 3, 5, ...
    }
    probes.push_back(Ext::inf());
  }
  EvidenceReport rep;
  auto note = [&](const std::string& axiom, std::vector<Ext> where) {
    if (rep.violations.size() < 8) {
      rep.violations.push_back(EvidenceViolation{axiom, std::move(where)});
    }
  };
  for (const auto& x : probes) {
    for (const auto& y : probes) {
      ++rep.pairs_checked;
      if (f_eval(f, x, y) != f_eval(f, y, x)) note("commutativity", {x, y});
      if (f_eval(f, x, y) < ext_max(x, y)) note("dominates-max", {x, y});
      for (const auto& y2 : probes) {
        if (y < y2 && f_eval(f, x, y) > f_eval(f, x, y2)) {
          note("monotonicity", {x, y, y2});
        }
      }
    }
  }
  for (const auto& x : probes) {
    for (const auto& y : probes) {
      for (const auto& z : probes) {
        ++rep.triples_checked;
        if (f_eval(f, f_eval(f, x, y), z) != f_eval(f, x, f_eval(f, y, z))) {
          note("associativity", {x, y, z});
        }
      }
    }
  }
  rep.all_ok = rep.violations.empty();
  return rep;
}

IntervalPointSet idempotents_of(const Semigroup& f,
                                const IntervalPointSet& probe) {
  switch (f.kind) {
    case SemigroupKind::MAX:
      return probe;
    case SemigroupKind::SUM:
    case SemigroupKind::LINPROD: {
      // x + x = x and x + x + x^2 = x have only 0 and inf on [0, inf].
      IntervalPointSet fixed = unite(IntervalPointSet::point(Ext(0L)),
                                     IntervalPointSet::point(Ext::inf()));
      return intersect(probe, fixed);
    }
    case SemigroupKind::TABLE: {
      std::vector<IntervalPart> pts;
      for (std::size_t i = 0; i < f.carrier.size(); ++i) {
        if (probe.member(f.carrier[i]) && f.table[i][i] == f.carrier[i]) {
          pts.push_back(
              IntervalPart{f.carrier[i], true, f.carrier[i], true});
        }
      }
      return IntervalPointSet::from_parts(std::move(pts));
    }
  }
  throw InternalError("bad semigroup kind");
}

}  // namespace genalg
