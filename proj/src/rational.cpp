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

#include "genalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace genalg {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
    return false;
  }
  bool seen_slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash || i + 1 == s.size()) return false;
      seen_slash = true;
      if (!std::isdigit(static_cast<unsigned char>(s[i + 1]))) return false;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  if (!looks_like_rational(s)) {
    throw ParseError("not a rational literal: \"" + s + "\"");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw ParseError("not a rational literal: \"" + s + "\"");
  }
  if (r.get_den() == 0) {
    throw ParseError("zero denominator: \"" + s + "\"");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string rat_to_decimal(const Rat& r, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (r == 0) return "0";
  const bool negative = r < 0;
  mpz_class num = abs(r.get_num());
  mpz_class den = r.get_den();

  // Find the decimal exponent e with 10^e <= num/den < 10^(e+1).
  int e = 0;
  mpz_class lo = num, hi = den;  // value = lo/hi
  while (lo < hi) {
    lo *= 10;
    --e;
  }
  while (lo >= hi * 10) {
    hi *= 10;
    ++e;
  }

  // digits = round(value * 10^(significant_digits-1-e)), half away from zero.
  mpz_class scaled_num = num, scaled_den = den;
  const int shift = significant_digits - 1 - e;
  if (shift >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    scaled_num *= p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    scaled_den *= p;
  }
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
              scaled_den.get_mpz_t());
  if (rem * 2 >= scaled_den) ++q;

  std::string digits = q.get_str();
  // Rounding may carry into one extra digit (e.g. 999.96 -> 1000).
  if (static_cast<int>(digits.size()) > significant_digits) {
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e >= significant_digits || e < -4) {
    // Scientific form: d.ddd e<exp>.
    out = digits.substr(0, 1);
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    out = digits.substr(0, e + 1);
    std::string frac = digits.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    out = "0.";
    for (int i = 0; i < -e - 1; ++i) out += '0';
    std::string frac = digits;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += frac;
  }
  return negative ? "-" + out : out;
}

Ext::Ext(long num, long den) : inf_(false), v_(num, den) {
  if (den == 0) throw ParseError("zero denominator");
  v_.canonicalize();
}

Ext ext_add(const Ext& a, const Ext& b) {
  if (a.is_inf() || b.is_inf()) return Ext::inf();
  return Ext(a.rat() + b.rat());
}

Ext ext_sub(const Ext& a, const Ext& b) {
  if (b.is_inf()) throw InternalError("ext_sub: infinite subtrahend");
  if (a.is_inf()) return Ext::inf();
  return Ext(a.rat() - b.rat());
}

Ext ext_min(const Ext& a, const Ext& b) { return a < b ? a : b; }
Ext ext_max(const Ext& a, const Ext& b) { return a < b ? b : a; }

Ext ext_from_string(const std::string& s) {
  if (s == "inf") return Ext::inf();
  return Ext(rat_from_string(s));
}

std::string ext_to_string(const Ext& e) {
  return e.is_inf() ? "inf" : rat_to_string(e.rat());
}

std::ostream& operator<<(std::ostream& os, const Ext& e) {
  return os << ext_to_string(e);
}

}  // namespace genalg
