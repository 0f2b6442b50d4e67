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

#include "genalg/associativity.hpp"
#include "genalg/decomposition.hpp"
#include "genalg/generator.hpp"
#include "genalg/interval_set.hpp"
#include "genalg/inverses.hpp"
#include "genalg/properties.hpp"
#include "genalg/rational.hpp"
#include "genalg/semigroup.hpp"
#include "json.hpp"

namespace genalg {

// All JSON produced here is deterministic: ordered_json preserves insertion
// order, every key is inserted in a fixed sequence, and rationals render in
// canonical "p/q" form ("inf" for infinity).
using ojson = nlohmann::ordered_json;

// Scalars: "p/q", plain integer string, or "inf".
ojson ext_to_json(const Ext& e);
// Accepts a JSON string in the formats above or a JSON integer.
Ext ext_from_json(const ojson& j);

// Sets serialize to an array of parts {"lo","lo_closed","hi","hi_closed"}.
ojson set_to_json(const IntervalPointSet& s);
IntervalPointSet set_from_json(const ojson& j);

// Piecewise functions: {"direction","segments":[{"lo","lo_closed","hi",
// "hi_closed","kind","params"}]}. Params by kind: constant [v], affine
// [slope, intercept], reciprocal [num, pole] for num/(pole-x), moebius
// [a,b,c,d] for (a x + b)/(c x + d), point_inf []. The domain is the span
// of the segments. Throws ParseError on malformed input.
ojson generator_to_json(const PiecewiseMonotone& t);
PiecewiseMonotone generator_from_json(const ojson& j);
PiecewiseMonotone load_generator_file(const std::string& path);

// Built-in kinds serialize to their name; TABLE to {"carrier","table"}.
// semigroup_from_json accepts either form.
ojson semigroup_to_json(const Semigroup& f);
Semigroup semigroup_from_json(const ojson& j);
// CLI-style spec: "sum", "max", "linprod", or "table:<path to json>".
Semigroup load_semigroup_spec(const std::string& spec);

ojson validation_to_json(const ValidationReport& r);
ojson plateau_to_json(const PlateauData& p);
ojson identity_report_to_json(const IdentityReport& r);
ojson decomposition_to_json(const RangeDecomposition& dec);
ojson condition_outcome_to_json(const ConditionOutcome& c);
ojson assoc_witness_to_json(const AssocWitness& w);
ojson condition_report_to_json(const ConditionReport& r);
ojson idempotence_to_json(const IdempotenceReport& r);
ojson orbit_to_json(const DiagonalOrbit& o);
ojson limit_to_json(const LimitReport& r);
ojson cancellation_to_json(const CancellationReport& r);
ojson continuity_to_json(const ContinuityReport& r);

std::string op_mode_name(OpMode mode);
OpMode op_mode_from_name(const std::string& name);
std::string assoc_verdict_name(AssocVerdict v);
std::string limit_verdict_name(LimitVerdict v);
std::string orbit_class_name(OrbitClass c);

}  // namespace genalg
