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

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "genalg/errors.hpp"

namespace genalg {

// Exact rational scalar. Always kept canonicalized.
using Rat = mpq_class;

// Parses "p/q" or a plain integer "p". Throws ParseError on anything else.
Rat rat_from_string(const std::string& s);

// Canonical form: "p/q" with gcd(p,q)=1, q>0; integers render without "/q".
std::string rat_to_string(const Rat& r);

// Decimal rendering with the given number of significant digits, round half
// away from zero. Display only; the rational string stays authoritative.
std::string rat_to_decimal(const Rat& r, int significant_digits = 12);

// A rational extended with a single point at +infinity. Finite values may be
// negative; the carrier restriction [0,inf] is enforced by the containers
// that need it, not by this type.
class Ext {
 public:
  Ext() : inf_(false), v_(0) {}
  // NOLINTNEXTLINE: implicit by design. Canonicalizes; mpq comparisons
  // assume canonical form and mpq_class(num, den) does not reduce.
  Ext(Rat v) : inf_(false), v_(std::move(v)) { v_.canonicalize(); }
  Ext(long n) : inf_(false), v_(n) {}  // NOLINT: implicit by design
  Ext(long num, long den);

  static Ext inf() {
    Ext e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  // Requires a finite value.
  const Rat& rat() const {
    if (inf_) throw InternalError("Ext::rat on infinity");
    return v_;
  }

  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }
  friend bool operator<(const Ext& a, const Ext& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
  friend bool operator<=(const Ext& a, const Ext& b) { return !(b < a); }
  friend bool operator>=(const Ext& a, const Ext& b) { return !(a < b); }

 private:
  bool inf_;
  Rat v_;
};

// inf + anything = inf.
Ext ext_add(const Ext& a, const Ext& b);

// inf - finite = inf. Requires b finite.
Ext ext_sub(const Ext& a, const Ext& b);

Ext ext_min(const Ext& a, const Ext& b);
Ext ext_max(const Ext& a, const Ext& b);

// Parses "p/q", "p", or "inf".
Ext ext_from_string(const std::string& s);
std::string ext_to_string(const Ext& e);

std::ostream& operator<<(std::ostream& os, const Ext& e);

}  // namespace genalg
