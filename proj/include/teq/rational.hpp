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
#ifndef TEQ_RATIONAL_HPP_
#define TEQ_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace teq {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator once canonicalized; every
// constructor in this project goes through make_rat or arithmetic, both of
// which canonicalize.
using Integer = mpz_class;
using Rat = mpq_class;
using Vector = std::vector<Rat>;
using IntVector = std::vector<Integer>;

Rat make_rat(long numerator, long denominator = 1);
Rat make_rat(const Integer& numerator, const Integer& denominator);

bool is_integer(const Rat& value);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

// Accepts "p" or "p/q" with optional leading sign; throws DomainError.
Rat parse_rat(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Vector to_rational(const IntVector& v);
// Throws DomainError on a non-integral entry.
IntVector to_integral(const Vector& v);

}  // namespace teq

#endif  // TEQ_RATIONAL_HPP_
