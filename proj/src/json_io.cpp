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

#include "genalg/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "genalg/errors.hpp"

namespace genalg {
namespace {

std::string kind_name(SegmentKind k) {
  switch (k) {
    case SegmentKind::CONSTANT:
      return "constant";
    case SegmentKind::AFFINE:
      return "affine";
    case SegmentKind::RECIPROCAL:
      return "reciprocal";
    case SegmentKind::MOEBIUS:
      return "moebius";
    case SegmentKind::POINT_INF:
      return "point_inf";
  }
  throw InternalError("unknown segment kind");
}

SegmentKind kind_from_name(const std::string& s) {
  if (s == "constant") return SegmentKind::CONSTANT;
  if (s == "affine") return SegmentKind::AFFINE;
  if (s == "reciprocal") return SegmentKind::RECIPROCAL;
  if (s == "moebius") return SegmentKind::MOEBIUS;
  if (s == "point_inf") return SegmentKind::POINT_INF;
  throw ParseError("unknown segment kind: " + s);
}

ojson rat_json(const Rat& r) { return ojson(rat_to_string(r)); }

Rat rat_from_json(const ojson& j) {
  const Ext e = ext_from_json(j);
  if (e.is_inf()) throw ParseError("expected a finite rational");
  return e.rat();
}

ojson params_of(const Segment& s) {
  ojson params = ojson::array();
  switch (s.kind) {
    case SegmentKind::CONSTANT:
      params.push_back(rat_json(s.formula.eval(s.lo).rat()));
      break;
    case SegmentKind::AFFINE: {
      const Ext v0 = s.formula.eval(Ext(0L));
      const Ext v1 = s.formula.eval(Ext(1L));
      const Rat slope = v1.rat() - v0.rat();
      params.push_back(rat_json(slope));
      params.push_back(rat_json(v0.rat()));
      break;
    }
    case SegmentKind::RECIPROCAL: {
      const Rat pole = *s.formula.pole();
      const Rat probe = pole - 1;
      const Rat num = s.formula.eval(Ext(probe)).rat();
      params.push_back(rat_json(num));
      params.push_back(rat_json(pole));
      break;
    }
    case SegmentKind::MOEBIUS:
      params.push_back(rat_json(s.formula.a));
      params.push_back(rat_json(s.formula.b));
      params.push_back(rat_json(s.formula.c));
      params.push_back(rat_json(s.formula.d));
      break;
    case SegmentKind::POINT_INF:
      break;
  }
  return params;
}

Formula formula_from(SegmentKind kind, const ojson& params) {
  const auto need = [&](std::size_t n) {
    if (!params.is_array() || params.size() != n) {
      throw ParseError("segment params have the wrong arity");
    }
  };
  switch (kind) {
    case SegmentKind::CONSTANT:
      need(1);
      return Formula::constant(rat_from_json(params[0]));
    case SegmentKind::AFFINE:
      need(2);
      return Formula::affine(rat_from_json(params[0]),
                             rat_from_json(params[1]));
    case SegmentKind::RECIPROCAL:
      need(2);
      return Formula::reciprocal(rat_from_json(params[0]),
                                 rat_from_json(params[1]));
    case SegmentKind::MOEBIUS:
      need(4);
      return Formula::moebius(rat_from_json(params[0]),
                              rat_from_json(params[1]),
                              rat_from_json(params[2]),
                              rat_from_json(params[3]));
    case SegmentKind::POINT_INF:
      need(0);
      return Formula::point_inf();
  }
  throw InternalError("unknown segment kind");
}

const ojson& field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field: ") + key);
  }
  return j.at(key);
}

bool bool_field(const ojson& j, const char* key) {
  const ojson& v = field(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("not a bool: ") + key);
  return v.get<bool>();
}

ojson opt_ext_json(const std::optional<Ext>& e) {
  if (!e) return nullptr;
  return ext_to_json(*e);
}

ojson pair_json(const std::pair<Ext, Ext>& p) {
  ojson j = ojson::array();
  j.push_back(ext_to_json(p.first));
  j.push_back(ext_to_json(p.second));
  return j;
}

ojson opt_pair_json(const std::optional<std::pair<Ext, Ext>>& p) {
  if (!p) return nullptr;
  return pair_json(*p);
}

ojson criterion_json(const LimitCriterion& c) {
  ojson j;
  j["holds"] = c.holds;
  j["witness"] = opt_ext_json(c.witness);
  return j;
}

}  // namespace

ojson ext_to_json(const Ext& e) { return ojson(ext_to_string(e)); }

Ext ext_from_json(const ojson& j) {
  if (j.is_string()) return ext_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Ext(static_cast<long>(j.get<long>()));
  throw ParseError("expected a rational string or integer");
}

ojson set_to_json(const IntervalPointSet& s) {
  ojson parts = ojson::array();
  for (const IntervalPart& p : s.parts()) {
    ojson part;
    part["lo"] = ext_to_json(p.lo);
    part["lo_closed"] = p.lo_closed;
    part["hi"] = ext_to_json(p.hi);
    part["hi_closed"] = p.hi_closed;
    parts.push_back(std::move(part));
  }
  return parts;
}

IntervalPointSet set_from_json(const ojson& j) {
  if (!j.is_array()) throw ParseError("a set must be an array of parts");
  std::vector<IntervalPart> parts;
  for (const ojson& p : j) {
    parts.push_back(IntervalPart{ext_from_json(field(p, "lo")),
                                 bool_field(p, "lo_closed"),
                                 ext_from_json(field(p, "hi")),
                                 bool_field(p, "hi_closed")});
  }
  return IntervalPointSet::from_parts(std::move(parts));
}

ojson generator_to_json(const PiecewiseMonotone& t) {
  ojson j;
  j["direction"] = t.direction() == Direction::NON_DECREASING
                       ? "non_decreasing"
                       : "non_increasing";
  ojson segs = ojson::array();
  for (const Segment& s : t.segments()) {
    ojson seg;
    seg["lo"] = ext_to_json(s.lo);
    seg["lo_closed"] = s.lo_closed;
    seg["hi"] = ext_to_json(s.hi);
    seg["hi_closed"] = s.hi_closed;
    seg["kind"] = kind_name(s.kind);
    seg["params"] = params_of(s);
    segs.push_back(std::move(seg));
  }
  j["segments"] = std::move(segs);
  return j;
}

PiecewiseMonotone generator_from_json(const ojson& j) {
  const std::string dir = field(j, "direction").get<std::string>();
  Direction direction;
  if (dir == "non_decreasing") {
    direction = Direction::NON_DECREASING;
  } else if (dir == "non_increasing") {
    direction = Direction::NON_INCREASING;
  } else {
    throw ParseError("unknown direction: " + dir);
  }
  const ojson& segs = field(j, "segments");
  if (!segs.is_array() || segs.empty()) {
    throw ParseError("a generator needs at least one segment");
  }
  std::vector<Segment> out;
  for (const ojson& s : segs) {
    const SegmentKind kind =
        kind_from_name(field(s, "kind").get<std::string>());
    out.push_back(Segment{ext_from_json(field(s, "lo")),
                          bool_field(s, "lo_closed"),
                          ext_from_json(field(s, "hi")),
                          bool_field(s, "hi_closed"), kind,
                          formula_from(kind, field(s, "params"))});
  }
  const Ext lo = out.front().lo;
  const Ext hi = out.back().hi;
  return PiecewiseMonotone(std::move(out), direction, lo, hi);
}

PiecewiseMonotone load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file: " + path);
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return generator_from_json(j);
}

ojson semigroup_to_json(const Semigroup& f) {
  switch (f.kind) {
    case SemigroupKind::SUM:
      return ojson("sum");
    case SemigroupKind::MAX:
      return ojson("max");
    case SemigroupKind::LINPROD:
      return ojson("linprod");
    case SemigroupKind::TABLE:
      break;
  }
  ojson j;
  ojson carrier = ojson::array();
  for (const Ext& e : f.carrier) carrier.push_back(ext_to_json(e));
  j["carrier"] = std::move(carrier);
  ojson table = ojson::array();
  for (const auto& row : f.table) {
    ojson r = ojson::array();
    for (const Ext& e : row) r.push_back(ext_to_json(e));
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  return j;
}

Semigroup semigroup_from_json(const ojson& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "sum") return make_sum();
    if (name == "max") return make_max();
    if (name == "linprod") return make_linprod();
    throw ParseError("unknown semigroup: " + name);
  }
  if (!j.is_object()) throw ParseError("semigroup must be a name or a table");
  std::vector<Ext> carrier;
  for (const ojson& e : field(j, "carrier")) {
    carrier.push_back(ext_from_json(e));
  }
  std::vector<std::vector<Ext>> table;
  for (const ojson& row : field(j, "table")) {
    std::vector<Ext> r;
    for (const ojson& e : row) r.push_back(ext_from_json(e));
    table.push_back(std::move(r));
  }
  return make_table(std::move(carrier), std::move(table));
}

Semigroup load_semigroup_spec(const std::string& spec) {
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file: " + path);
    ojson j;
    try {
      j = ojson::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return semigroup_from_json(j);
  }
  return semigroup_from_json(ojson(spec));
}

ojson validation_to_json(const ValidationReport& r) {
  ojson j;
  j["direction"] = r.direction == Direction::NON_DECREASING
                       ? "non_decreasing"
                       : "non_increasing";
  j["monotone"] = r.monotone;
  j["left_continuous"] = r.left_continuous;
  j["right_continuous"] = r.right_continuous;
  j["strictly_monotone"] = r.strictly_monotone;
  j["ok"] = r.ok();
  ojson violations = ojson::array();
  for (const ValidationViolation& v : r.violations) {
    ojson e;
    e["what"] = v.what;
    e["where"] = ext_to_json(v.where);
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  return j;
}

ojson plateau_to_json(const PlateauData& p) {
  ojson j;
  j["plateau_values"] = set_to_json(p.H);
  j["plateau_right_ends"] = set_to_json(p.G);
  j["injective_points"] = set_to_json(p.W);
  j["injectivity_core"] = set_to_json(p.D);
  return j;
}

ojson identity_report_to_json(const IdentityReport& r) {
  ojson j;
  j["round_trip_holds"] = r.round_trip_holds;
  j["round_trip_counterexample"] = opt_ext_json(r.round_trip_counterexample);
  j["above_identity_holds"] = r.above_identity_holds;
  j["above_identity_counterexample"] =
      opt_ext_json(r.above_identity_counterexample);
  j["weak_equals_pseudo"] = r.weak_equals_pseudo;
  j["weak_equals_pseudo_counterexample"] =
      opt_ext_json(r.weak_equals_pseudo_counterexample);
  j["strictly_monotone"] = r.strictly_monotone;
  j["left_continuous"] = r.left_continuous;
  j["plateau_set_empty"] = r.plateau_set_empty;
  j["plateau_point"] = opt_ext_json(r.plateau_point);
  j["equivalence_holds"] = r.equivalence_holds;
  return j;
}

ojson decomposition_to_json(const RangeDecomposition& dec) {
  ojson j;
  j["t0"] = ext_to_json(dec.t0());
  ojson gaps = ojson::array();
  for (const Gap& g : dec.gaps()) {
    ojson e;
    e["b"] = ext_to_json(g.b);
    e["d"] = ext_to_json(g.d);
    e["c"] = ext_to_json(g.c);
    gaps.push_back(std::move(e));
  }
  j["gaps"] = std::move(gaps);
  ojson extra = ojson::array();
  for (const Ext& e : dec.extra_points()) extra.push_back(ext_to_json(e));
  j["extra_points"] = std::move(extra);
  j["degenerate"] = dec.degenerate();
  j["anchors"] = set_to_json(dec.anchors());
  j["range"] = set_to_json(dec.m());
  return j;
}

ojson condition_outcome_to_json(const ConditionOutcome& c) {
  ojson j;
  j["holds"] = c.holds;
  j["threshold"] = ext_to_json(c.threshold);
  j["witness"] = opt_pair_json(c.witness);
  j["witness_value"] = opt_ext_json(c.witness_value);
  return j;
}

ojson assoc_witness_to_json(const AssocWitness& w) {
  ojson j;
  j["x"] = ext_to_json(w.x);
  j["y"] = ext_to_json(w.y);
  j["z"] = ext_to_json(w.z);
  j["lhs"] = ext_to_json(w.lhs);
  j["rhs"] = ext_to_json(w.rhs);
  j["mx"] = ext_to_json(w.mx);
  j["my"] = ext_to_json(w.my);
  j["mz"] = ext_to_json(w.mz);
  return j;
}

ojson condition_report_to_json(const ConditionReport& r) {
  ojson j;
  j["verdict"] = assoc_verdict_name(r.verdict);
  j["witness"] = r.witness ? assoc_witness_to_json(*r.witness) : ojson(nullptr);
  ojson frak;
  frak["t1"] = set_to_json(r.frak.t1);
  frak["t2"] = set_to_json(r.frak.t2);
  frak["t3"] = set_to_json(r.frak.t3);
  frak["t_union"] = set_to_json(r.frak.t_union);
  frak["val1"] = set_to_json(r.frak.val1);
  frak["val2"] = set_to_json(r.frak.val2);
  frak["val3"] = set_to_json(r.frak.val3);
  frak["val_union"] = set_to_json(r.frak.val_union);
  j["frak"] = std::move(frak);
  ojson cells = ojson::array();
  for (const CellRecord& c : r.cells) {
    ojson e;
    ojson cell;
    cell["lo"] = ext_to_json(c.cell.lo);
    cell["lo_closed"] = c.cell.lo_closed;
    cell["hi"] = ext_to_json(c.cell.hi);
    cell["hi_closed"] = c.cell.hi_closed;
    e["cell"] = std::move(cell);
    e["rep"] = ext_to_json(c.rep);
    e["m_lower"] = set_to_json(c.m_lower);
    e["m_upper"] = set_to_json(c.m_upper);
    e["m_tau_lower"] = set_to_json(c.m_tau_lower);
    e["m_tau_upper"] = set_to_json(c.m_tau_upper);
    ojson gaps = ojson::array();
    for (const GapRecord& g : c.gaps) {
      ojson ge;
      ge["gap"] = g.gap;
      ge["anchor"] = ext_to_json(g.anchor);
      ge["m_lower"] = set_to_json(g.m_lower);
      ge["m_upper"] = set_to_json(g.m_upper);
      ge["h_lower"] = set_to_json(g.h_lower);
      ge["h_upper"] = set_to_json(g.h_upper);
      ge["i_lower_nonempty"] = g.i_lower_nonempty;
      ge["i_upper_nonempty"] = g.i_upper_nonempty;
      ge["hit_lower"] = g.hit_lower;
      ge["hit_upper"] = g.hit_upper;
      gaps.push_back(std::move(ge));
    }
    e["gaps"] = std::move(gaps);
    ojson pairs = ojson::array();
    for (const PairRecord& p : c.pairs) {
      ojson pe;
      pe["left_gap"] = p.left_gap;
      pe["right_gap"] = p.right_gap;
      pe["j"] = set_to_json(p.j);
      pe["i_nonempty"] = p.i_nonempty;
      pe["hit"] = p.hit;
      pairs.push_back(std::move(pe));
    }
    e["pairs"] = std::move(pairs);
    cells.push_back(std::move(e));
  }
  j["cells"] = std::move(cells);
  return j;
}

ojson idempotence_to_json(const IdempotenceReport& r) {
  ojson j;
  j["points"] = set_to_json(r.points);
  j["fully_idempotent"] = r.fully_idempotent;
  return j;
}

ojson orbit_to_json(const DiagonalOrbit& o) {
  ojson j;
  j["x"] = ext_to_json(o.x);
  ojson powers = ojson::array();
  for (const Ext& p : o.powers) powers.push_back(ext_to_json(p));
  j["powers"] = std::move(powers);
  j["classification"] = orbit_class_name(o.classification);
  j["limit"] = opt_ext_json(o.limit);
  j["decided_at"] = o.decided_at ? ojson(*o.decided_at) : ojson(nullptr);
  return j;
}

ojson limit_to_json(const LimitReport& r) {
  ojson j;
  j["strict_bound"] = criterion_json(r.strict_bound);
  j["inverse_stable"] = criterion_json(r.inverse_stable);
  j["weak_bound"] = criterion_json(r.weak_bound);
  j["verdict"] = limit_verdict_name(r.verdict);
  j["witness"] = opt_ext_json(r.witness);
  j["reason"] = r.reason;
  ojson orbits = ojson::array();
  for (const DiagonalOrbit& o : r.orbits) orbits.push_back(orbit_to_json(o));
  j["orbits"] = std::move(orbits);
  return j;
}

ojson cancellation_to_json(const CancellationReport& r) {
  ojson j;
  j["conditionally_cancellative"] = r.conditionally_cancellative;
  j["cancellative"] = r.cancellative;
  j["degenerate"] = r.degenerate;
  j["stays_in_range"] = r.stays_in_range;
  j["collapse_saturates"] = r.collapse_saturates;
  ojson sets;
  sets["collapse_set"] = set_to_json(r.sets.c);
  sets["beta"] = opt_ext_json(r.sets.beta);
  sets["alpha"] = opt_ext_json(r.sets.alpha);
  sets["hull_below_start"] = set_to_json(r.sets.h_kappa);
  ojson hulls = ojson::array();
  for (const IntervalPointSet& h : r.sets.h_k) hulls.push_back(set_to_json(h));
  sets["gap_hulls"] = std::move(hulls);
  j["sets"] = std::move(sets);
  j["range_escape"] = opt_pair_json(r.range_escape);
  j["collapse_escape"] = opt_pair_json(r.collapse_escape);
  if (r.merge_witness) {
    ojson w;
    w["x1"] = ext_to_json((*r.merge_witness)[0]);
    w["x2"] = ext_to_json((*r.merge_witness)[1]);
    w["y"] = ext_to_json((*r.merge_witness)[2]);
    j["merge_witness"] = std::move(w);
  } else {
    j["merge_witness"] = nullptr;
  }
  return j;
}

ojson continuity_to_json(const ContinuityReport& r) {
  ojson j;
  j["left_continuous"] = r.left_continuous;
  j["right_continuous"] = r.right_continuous;
  j["continuous"] = r.continuous;
  j["left_witness"] = opt_pair_json(r.left_witness);
  j["right_witness"] = opt_pair_json(r.right_witness);
  ojson pairs = ojson::array();
  for (const ContinuityPairFlag& f : r.breakpoint_pairs) {
    ojson e;
    e["x"] = ext_to_json(f.x);
    e["y"] = ext_to_json(f.y);
    e["left_ok"] = f.left_ok;
    e["right_ok"] = f.right_ok;
    pairs.push_back(std::move(e));
  }
  j["breakpoint_pairs"] = std::move(pairs);
  j["continuous_t_conorm"] = r.continuous_t_conorm;
  j["conorm_reason"] = r.conorm_reason;
  return j;
}

std::string op_mode_name(OpMode mode) {
  return mode == OpMode::NORM ? "norm" : "supconorm";
}

OpMode op_mode_from_name(const std::string& name) {
  if (name == "norm") return OpMode::NORM;
  if (name == "supconorm") return OpMode::SUPCONORM;
  throw ParseError("unknown mode: " + name);
}

std::string assoc_verdict_name(AssocVerdict v) {
  switch (v) {
    case AssocVerdict::ASSOCIATIVE:
      return "ASSOCIATIVE";
    case AssocVerdict::NOT_ASSOCIATIVE:
      return "NOT_ASSOCIATIVE";
    case AssocVerdict::UNKNOWN:
      return "UNKNOWN";
  }
  throw InternalError("unknown associativity verdict");
}

std::string limit_verdict_name(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::HOLDS:
      return "HOLDS";
    case LimitVerdict::FAILS:
      return "FAILS";
    case LimitVerdict::INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  throw InternalError("unknown limit verdict");
}

std::string orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::REACHES_ONE:
      return "REACHES_ONE";
    case OrbitClass::FIXED_BELOW_ONE:
      return "FIXED_BELOW_ONE";
    case OrbitClass::UNDECIDED:
      return "UNDECIDED";
  }
  throw InternalError("unknown orbit class");
}

}  // namespace genalg
