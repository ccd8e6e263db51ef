// Copyright 2026 The OCF Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCF_RATIONAL_HPP
#define OCF_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ocf {

// GMP keeps every value in canonical reduced form with a positive
// denominator, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "p", "-p" and "p/q". Anything with a decimal point or exponent
// is rejected: inputs must be exact.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

bool is_integer(const Rational& value);

// Least common multiple of all denominators (1 for an empty list).
Integer denominator_lcm(const std::vector<Rational>& values);

// Converts an integral rational to long, throwing std::overflow_error when
// it does not fit.
long to_long(const Rational& value);

Rational sum(const std::vector<Rational>& values);

}  // namespace ocf

#endif  // OCF_RATIONAL_HPP
