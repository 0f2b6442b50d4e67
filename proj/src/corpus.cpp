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

#include "genalg/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <utility>

#include "genalg/errors.hpp"

#ifndef GENALG_BUNDLED_FIXTURES
#define GENALG_BUNDLED_FIXTURES "fixtures"
#endif

namespace genalg {
namespace {

std::string set_str(const IntervalPointSet& s) { return s.to_string(); }

// Exact functional equality of two piecewise-Moebius maps: same domain,
// matching value and one-sided limits at every breakpoint of either, and
// matching values at three interior points of every stretch (a Moebius piece
// is determined by three points).
bool same_function(const PiecewiseMonotone& a, const PiecewiseMonotone& b,
                   std::string* where) {
  if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi()) {
    *where = "domains differ";
    return false;
  }
  std::vector<Ext> bps = a.breakpoints();
  for (const Ext& e : b.breakpoints()) bps.push_back(e);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Ext> probes;
  for (const Ext& e : bps) probes.push_back(e);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    if (bps[i + 1].is_inf()) {
      for (long k = 1; k <= 3; ++k) {
        const Rat v = bps[i].rat() + k;
        probes.push_back(Ext(v));
      }
      continue;
    }
    const Rat width = bps[i + 1].rat() - bps[i].rat();
    for (long k = 1; k <= 3; ++k) {
      const Rat v = bps[i].rat() + width * k / 4;
      probes.push_back(Ext(v));
    }
  }
  for (const Ext& x : probes) {
    if (a.eval(x) != b.eval(x)) {
      *where = "value at " + ext_to_string(x);
      return false;
    }
  }
  for (const Ext& x : bps) {
    if (a.limit_left(x) != b.limit_left(x)) {
      *where = "left limit at " + ext_to_string(x);
      return false;
    }
    if (a.limit_right(x) != b.limit_right(x)) {
      *where = "right limit at " + ext_to_string(x);
      return false;
    }
  }
  return true;
}

struct FixtureContext {
  PiecewiseMonotone t;
  std::optional<Semigroup> f;
  OpMode mode = OpMode::SUPCONORM;
  std::optional<GeneratedOp> op;

  GeneratedOp& require_op() {
    if (!op) {
      if (!f) throw PreconditionViolated("fixture declares no semigroup");
      op = build_generated_op(t, *f, mode);
    }
    return *op;
  }
};

using Checker = FixtureCheck (*)(FixtureContext&, const ojson&);

FixtureCheck make_pass(const std::string& name, const std::string& detail) {
  return FixtureCheck{name, true, detail};
}

FixtureCheck make_fail(const std::string& name, const std::string& detail) {
  return FixtureCheck{name, false, detail};
}

FixtureCheck check_function(const std::string& name,
                            const PiecewiseMonotone& got, const ojson& want) {
  const PiecewiseMonotone expected = generator_from_json(want);
  std::string where;
  if (same_function(got, expected, &where)) {
    return make_pass(name, "matches on every piece and boundary");
  }
  return make_fail(name, "differs: " + where);
}

FixtureCheck check_pseudo_inverse(FixtureContext& ctx, const ojson& want) {
  return check_function("pseudo_inverse", pseudo_inverse(ctx.t), want);
}

FixtureCheck check_weak_inverse(FixtureContext& ctx, const ojson& want) {
  return check_function("weak_inverse", weak_pseudo_inverse(ctx.t), want);
}

FixtureCheck check_inverse_points(FixtureContext& ctx, const ojson& want) {
  const PiecewiseMonotone p = pseudo_inverse(ctx.t);
  const PiecewiseMonotone w = weak_pseudo_inverse(ctx.t);
  for (const ojson& row : want) {
    const Ext arg = ext_from_json(row.at("arg"));
    if (row.contains("pseudo")) {
      const Ext expect = ext_from_json(row.at("pseudo"));
      const Ext got = p.eval(arg);
      if (got != expect) {
        return make_fail("inverse_points",
                         "pseudo(" + ext_to_string(arg) + ") = " +
                             ext_to_string(got) + ", want " +
                             ext_to_string(expect));
      }
    }
    if (row.contains("weak")) {
      const Ext expect = ext_from_json(row.at("weak"));
      const Ext got = w.eval(arg);
      if (got != expect) {
        return make_fail("inverse_points",
                         "weak(" + ext_to_string(arg) + ") = " +
                             ext_to_string(got) + ", want " +
                             ext_to_string(expect));
      }
    }
  }
  return make_pass("inverse_points",
                   std::to_string(want.size()) + " spot values");
}

FixtureCheck check_decomposition(FixtureContext& ctx, const ojson& want) {
  const RangeDecomposition dec = decompose(ctx.t);
  if (dec.t0() != ext_from_json(want.at("t0"))) {
    return make_fail("decomposition", "t0 = " + ext_to_string(dec.t0()));
  }
  const ojson& gaps = want.at("gaps");
  if (dec.gaps().size() != gaps.size()) {
    return make_fail("decomposition",
                     std::to_string(dec.gaps().size()) + " gaps, want " +
                         std::to_string(gaps.size()));
  }
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const Gap& g = dec.gaps()[k];
    if (g.b != ext_from_json(gaps[k].at("b")) ||
        g.d != ext_from_json(gaps[k].at("d")) ||
        g.c != ext_from_json(gaps[k].at("c"))) {
      return make_fail("decomposition",
                       "gap " + std::to_string(k + 1) + " is [" +
                           ext_to_string(g.b) + ", " + ext_to_string(g.d) +
                           "] anchored at " + ext_to_string(g.c));
    }
  }
  const ojson& extra = want.at("extra_points");
  if (dec.extra_points().size() != extra.size()) {
    return make_fail("decomposition", "extra point count differs");
  }
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (dec.extra_points()[k] != ext_from_json(extra[k])) {
      return make_fail("decomposition", "extra point " + std::to_string(k));
    }
  }
  if (want.contains("anchors")) {
    const IntervalPointSet anchors = set_from_json(want.at("anchors"));
    if (dec.anchors() != anchors) {
      return make_fail("decomposition",
                       "anchors = " + set_str(dec.anchors()));
    }
  }
  if (dec.reconstruct() != range_of(ctx.t)) {
    return make_fail("decomposition", "reconstruction misses the range");
  }
  return make_pass("decomposition",
                   std::to_string(gaps.size()) + " gaps, reconstruction ok");
}

FixtureCheck check_retraction_table(FixtureContext& ctx, const ojson& want) {
  const RangeDecomposition dec = decompose(ctx.t);
  for (const ojson& row : want) {
    const Ext arg = ext_from_json(row.at("arg"));
    const Ext expect = ext_from_json(row.at("value"));
    const Ext got = g_m(dec, arg);
    if (got != expect) {
      return make_fail("retraction_table",
                       "g(" + ext_to_string(arg) + ") = " +
                           ext_to_string(got) + ", want " +
                           ext_to_string(expect));
    }
  }
  return make_pass("retraction_table",
                   std::to_string(want.size()) + " probe values");
}

FixtureCheck check_assoc_verdict(FixtureContext& ctx, const ojson& want) {
  GeneratedOp& op = ctx.require_op();
  const ConditionReport rep = f_condition_check(op);
  const std::string got = assoc_verdict_name(rep.verdict);
  if (got != want.get<std::string>()) {
    return make_fail("assoc_verdict", got);
  }
  if (rep.verdict == AssocVerdict::NOT_ASSOCIATIVE) {
    const AssocWitness& w = *rep.witness;
    const Ext lhs = op.eval(op.eval(w.x, w.y), w.z);
    const Ext rhs = op.eval(w.x, op.eval(w.y, w.z));
    if (lhs == rhs || lhs != w.lhs || rhs != w.rhs) {
      return make_fail("assoc_verdict", "witness fails re-evaluation");
    }
    return make_pass("assoc_verdict",
                     got + ", witness (" + ext_to_string(w.x) + ", " +
                         ext_to_string(w.y) + ", " + ext_to_string(w.z) +
                         ") re-verified");
  }
  return make_pass("assoc_verdict", got);
}

FixtureCheck check_frak(FixtureContext& ctx, const ojson& want) {
  const FrakSets fs = frak_t(ctx.require_op());
  const std::vector<std::pair<std::string, const IntervalPointSet*>> keyed = {
      {"t1", &fs.t1}, {"t2", &fs.t2}, {"t3", &fs.t3}, {"t_union", &fs.t_union}};
  for (const auto& [key, got] : keyed) {
    if (!want.contains(key)) continue;
    const IntervalPointSet expect = set_from_json(want.at(key));
    if (*got != expect) {
      return make_fail("frak", key + " = " + set_str(*got) + ", want " +
                                   set_str(expect));
    }
  }
  return make_pass("frak", "escape hulls match");
}

FixtureCheck check_spot_triples(FixtureContext& ctx, const ojson& want) {
  GeneratedOp& op = ctx.require_op();
  for (const ojson& row : want) {
    const Ext x = ext_from_json(row.at("x"));
    const Ext y = ext_from_json(row.at("y"));
    const Ext z = ext_from_json(row.at("z"));
    const Ext lhs = op.eval(op.eval(x, y), z);
    const Ext rhs = op.eval(x, op.eval(y, z));
    if (lhs != ext_from_json(row.at("lhs")) ||
        rhs != ext_from_json(row.at("rhs"))) {
      return make_fail("spot_triples",
                       "(" + ext_to_string(x) + ", " + ext_to_string(y) +
                           ", " + ext_to_string(z) + ") gives " +
                           ext_to_string(lhs) + " | " + ext_to_string(rhs));
    }
  }
  return make_pass("spot_triples",
                   std::to_string(want.size()) + " bracketing pairs");
}

FixtureCheck check_brute_force(FixtureContext& ctx, const ojson& want) {
  GeneratedOp& op = ctx.require_op();
  const auto w = brute_force_assoc(op, default_grid(op));
  if (!w) return make_fail("brute_force", "no witness found");
  const Ext lhs = op.eval(op.eval(w->x, w->y), w->z);
  const Ext rhs = op.eval(w->x, op.eval(w->y, w->z));
  if (lhs == rhs || lhs != w->lhs || rhs != w->rhs) {
    return make_fail("brute_force", "witness fails re-evaluation");
  }
  if (w->lhs != ext_from_json(want.at("lhs")) ||
      w->rhs != ext_from_json(want.at("rhs"))) {
    return make_fail("brute_force", "sides " + ext_to_string(w->lhs) + " | " +
                                        ext_to_string(w->rhs));
  }
  return make_pass("brute_force",
                   "witness (" + ext_to_string(w->x) + ", " +
                       ext_to_string(w->y) + ", " + ext_to_string(w->z) +
                       ") with sides " + ext_to_string(w->lhs) + " | " +
                       ext_to_string(w->rhs));
}

FixtureCheck check_idempotents(FixtureContext& ctx, const ojson& want) {
  const IntervalPointSet got = idempotent_points(ctx.require_op());
  const IntervalPointSet expect = set_from_json(want);
  if (got != expect) {
    return make_fail("idempotents",
                     set_str(got) + ", want " + set_str(expect));
  }
  return make_pass("idempotents", set_str(got));
}

FixtureCheck check_fully_idempotent(FixtureContext& ctx, const ojson& want) {
  const bool got = idempotence_report(ctx.require_op()).fully_idempotent;
  if (got != want.get<bool>()) {
    return make_fail("fully_idempotent", got ? "true" : "false");
  }
  return make_pass("fully_idempotent", got ? "true" : "false");
}

FixtureCheck check_limit(FixtureContext& ctx, const ojson& want) {
  GeneratedOp& op = ctx.require_op();
  const LimitReport rep = limit_property_check(op);
  const std::string got = limit_verdict_name(rep.verdict);
  if (got != want.at("verdict").get<std::string>()) {
    return make_fail("limit", got + " (" + rep.reason + ")");
  }
  if (want.contains("witness")) {
    const Ext expect = ext_from_json(want.at("witness"));
    if (!rep.witness || *rep.witness != expect) {
      return make_fail("limit",
                       "witness " + (rep.witness ? ext_to_string(*rep.witness)
                                                 : std::string("none")));
    }
  }
  if (want.contains("fixed_point")) {
    const ojson& fp = want.at("fixed_point");
    const Ext x = ext_from_json(fp.at("x"));
    const DiagonalOrbit orbit = diagonal_powers(op, x);
    if (orbit.classification != OrbitClass::FIXED_BELOW_ONE ||
        !orbit.limit || *orbit.limit != ext_from_json(fp.at("limit")) ||
        !orbit.decided_at || *orbit.decided_at != fp.at("decided_at")) {
      return make_fail("limit", "orbit at " + ext_to_string(x) +
                                    " does not park as expected");
    }
  }
  return make_pass("limit", got + ": " + rep.reason);
}

FixtureCheck check_cancellation(FixtureContext& ctx, const ojson& want) {
  const CancellationReport rep = cancellation_check(ctx.require_op());
  const bool expect = want.at("conditionally_cancellative").get<bool>();
  if (rep.conditionally_cancellative != expect) {
    return make_fail("cancellation",
                     rep.conditionally_cancellative ? "cancels" : "merges");
  }
  std::string detail =
      expect ? "conditionally cancellative" : "not conditionally cancellative";
  if (want.contains("verify_merge_witness") &&
      want.at("verify_merge_witness").get<bool>()) {
    if (!rep.merge_witness) {
      return make_fail("cancellation", "no merge witness produced");
    }
    GeneratedOp& op = ctx.require_op();
    const auto& [x1, x2, y] = *rep.merge_witness;
    const Ext v1 = op.eval(x1, y);
    const Ext v2 = op.eval(x2, y);
    if (x1 >= x2 || v1 != v2 || v1 >= op.t.domain_hi()) {
      return make_fail("cancellation", "merge witness fails re-evaluation");
    }
    detail += ", T(" + ext_to_string(x1) + ", " + ext_to_string(y) + ") = T(" +
              ext_to_string(x2) + ", " + ext_to_string(y) + ") = " +
              ext_to_string(v1);
  }
  return make_pass("cancellation", detail);
}

FixtureCheck check_join_equivalence(FixtureContext& ctx, const ojson& want) {
  const bool got = supconorm_equivalence_check(ctx.require_op());
  if (got != want.get<bool>()) {
    return make_fail("join_equivalence", got ? "true" : "false");
  }
  return make_pass("join_equivalence", got ? "true" : "false");
}

FixtureCheck check_continuity(FixtureContext& ctx, const ojson& want) {
  const ContinuityReport rep = continuity_check(ctx.require_op());
  const std::vector<std::pair<std::string, bool>> flags = {
      {"left", rep.left_continuous},
      {"right", rep.right_continuous},
      {"continuous", rep.continuous},
      {"conorm", rep.continuous_t_conorm}};
  for (const auto& [key, got] : flags) {
    if (want.contains(key) && got != want.at(key).get<bool>()) {
      return make_fail("continuity",
                       key + " = " + (got ? "true" : "false"));
    }
  }
  for (const char* key : {"left_witness", "right_witness"}) {
    if (!want.contains(key)) continue;
    const auto& got = (key == std::string("left_witness")) ? rep.left_witness
                                                           : rep.right_witness;
    const ojson& w = want.at(key);
    if (!got || got->first != ext_from_json(w[0]) ||
        got->second != ext_from_json(w[1])) {
      return make_fail("continuity",
                       std::string(key) + " = " +
                           (got ? "(" + ext_to_string(got->first) + ", " +
                                      ext_to_string(got->second) + ")"
                                : std::string("none")));
    }
  }
  if (want.contains("generator_right_continuous")) {
    const bool rc = validate(ctx.t).right_continuous;
    if (rc != want.at("generator_right_continuous").get<bool>()) {
      return make_fail("continuity", "generator right continuity flag");
    }
  }
  return make_pass("continuity", rep.conorm_reason);
}

FixtureCheck check_t_equals_one(FixtureContext& ctx, const ojson& want) {
  if (!want.get<bool>()) {
    return make_fail("t_equals_one", "expectation must be true");
  }
  GeneratedOp& op = ctx.require_op();
  const std::vector<Ext> grid = default_grid(op);
  const Ext one = op.t.domain_hi();
  for (const Ext& x : grid) {
    for (const Ext& y : grid) {
      if (op.eval(x, y) != one) {
        return make_fail("t_equals_one", "T(" + ext_to_string(x) + ", " +
                                             ext_to_string(y) + ") = " +
                                             ext_to_string(op.eval(x, y)));
      }
    }
  }
  return make_pass("t_equals_one",
                   std::to_string(grid.size() * grid.size()) +
                       " grid products all 1");
}

// NORM-mode axiom suite on an n-point grid: the operation table is computed
// exactly, checked closed over the grid, then commutativity, associativity,
// monotonicity and the neutral element 1 are verified on the table.
FixtureCheck check_norm_axioms(FixtureContext& ctx, const ojson& want) {
  GeneratedOp& op = ctx.require_op();
  const long n = want.at("grid_n").get<long>();
  const bool lukasiewicz =
      want.contains("lukasiewicz") && want.at("lukasiewicz").get<bool>();
  std::vector<Ext> grid;
  for (long i = 0; i < n; ++i) grid.push_back(Ext(i, n - 1));
  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const Ext v = op.eval(grid[i], grid[j]);
      if (lukasiewicz) {
        Rat s = grid[i].rat() + grid[j].rat() - 1;
        if (s < 0) s = 0;
        if (v != Ext(s)) {
          return make_fail("norm_axioms",
                           "T(" + ext_to_string(grid[i]) + ", " +
                               ext_to_string(grid[j]) + ") = " +
                               ext_to_string(v));
        }
      }
      long idx = -1;
      for (long k = 0; k < n; ++k) {
        if (grid[k] == v) {
          idx = k;
          break;
        }
      }
      if (idx < 0) {
        return make_fail("norm_axioms", "grid not closed under T");
      }
      index[i][j] = idx;
    }
  }
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (index[i][j] != index[j][i]) {
        return make_fail("norm_axioms", "commutativity fails");
      }
      if (j + 1 < n && index[i][j] > index[i][j + 1]) {
        return make_fail("norm_axioms", "monotonicity fails");
      }
      for (long k = 0; k < n; ++k) {
        if (index[index[i][j]][k] != index[i][index[j][k]]) {
          return make_fail("norm_axioms", "associativity fails");
        }
      }
    }
    if (index[i][n - 1] != i) {
      return make_fail("norm_axioms", "1 is not neutral");
    }
  }
  return make_pass("norm_axioms", std::to_string(n) + "x" + std::to_string(n) +
                                      " axiom table verified");
}

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"pseudo_inverse", &check_pseudo_inverse},
      {"weak_inverse", &check_weak_inverse},
      {"inverse_points", &check_inverse_points},
      {"decomposition", &check_decomposition},
      {"retraction_table", &check_retraction_table},
      {"assoc_verdict", &check_assoc_verdict},
      {"frak", &check_frak},
      {"spot_triples", &check_spot_triples},
      {"brute_force", &check_brute_force},
      {"idempotents", &check_idempotents},
      {"fully_idempotent", &check_fully_idempotent},
      {"limit", &check_limit},
      {"cancellation", &check_cancellation},
      {"join_equivalence", &check_join_equivalence},
      {"continuity", &check_continuity},
      {"t_equals_one", &check_t_equals_one},
      {"norm_axioms", &check_norm_axioms},
  };
  return table;
}

}  // namespace

bool FixtureResult::all_pass() const {
  for (const FixtureCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("GENALG_FIXTURES_DIR")) {
    return env;
  }
  return GENALG_BUNDLED_FIXTURES;
}

FixtureResult run_fixture(const ojson& spec) {
  FixtureResult result;
  result.id = spec.at("id").get<std::string>();
  if (spec.contains("note")) result.note = spec.at("note").get<std::string>();

  FixtureContext ctx{generator_from_json(spec.at("generator")), std::nullopt,
                     OpMode::SUPCONORM, std::nullopt};
  if (spec.contains("semigroup")) {
    ctx.f = semigroup_from_json(spec.at("semigroup"));
  }
  if (spec.contains("mode")) {
    ctx.mode = op_mode_from_name(spec.at("mode").get<std::string>());
  }

  const ojson& expect = spec.at("expect");
  for (auto it = expect.begin(); it != expect.end(); ++it) {
    const Checker* found = nullptr;
    for (const auto& [key, fn] : checkers()) {
      if (key == it.key()) {
        found = &fn;
        break;
      }
    }
    if (!found) throw ParseError("unknown expectation: " + it.key());
    try {
      result.checks.push_back((*found)(ctx, it.value()));
    } catch (const GenalgError& e) {
      result.checks.push_back(FixtureCheck{it.key(), false, e.what()});
    }
  }
  return result;
}

CorpusResult run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw ParseError("fixtures directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  CorpusResult result;
  for (const fs::path& p : files) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open fixture file: " + p.string());
    ojson spec;
    try {
      spec = ojson::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid JSON in " + p.string() + ": " + e.what());
    }
    result.fixtures.push_back(run_fixture(spec));
  }
  result.all_pass = true;
  for (const FixtureResult& f : result.fixtures) {
    result.all_pass = result.all_pass && f.all_pass();
  }
  return result;
}

ojson corpus_to_json(const CorpusResult& r) {
  ojson j;
  ojson fixtures = ojson::array();
  for (const FixtureResult& f : r.fixtures) {
    ojson e;
    e["id"] = f.id;
    e["note"] = f.note;
    ojson checks = ojson::array();
    for (const FixtureCheck& c : f.checks) {
      ojson ce;
      ce["name"] = c.name;
      ce["pass"] = c.pass;
      ce["detail"] = c.detail;
      checks.push_back(std::move(ce));
    }
    e["checks"] = std::move(checks);
    e["all_pass"] = f.all_pass();
    fixtures.push_back(std::move(e));
  }
  j["fixtures"] = std::move(fixtures);
  j["all_pass"] = r.all_pass;
  return j;
}

}  // namespace genalg
