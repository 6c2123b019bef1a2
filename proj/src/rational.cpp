// Copyright 2026 The teq Authors
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
#include "teq/rational.hpp"

#include <cctype>

#include "teq/errors.hpp"

namespace teq {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rat make_rat(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

std::string to_string(const Rat& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  out.set_str(std::string(text.substr(pos)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(den_text, den) || den_text.front() == '-' ||
        den_text.front() == '+') {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    if (den == 0) throw DomainError("zero denominator in '" +
                                    std::string(text) + "'");
  }
  return make_rat(num, den);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Vector to_rational(const IntVector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector to_integral(const Vector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x)) throw DomainError("non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

}  // namespace teq
