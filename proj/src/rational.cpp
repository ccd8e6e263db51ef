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

#include "ocf/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace ocf {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  Integer p{std::string(num.front() == '+' ? num.substr(1) : num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& value) { return value.str(); }

Integer floor_of(const Rational& value) {
  const Integer& p = boost::multiprecision::numerator(value);
  const Integer& q = boost::multiprecision::denominator(value);
  Integer quotient = p / q;  // truncates toward zero
  if (p < 0 && quotient * q != p) quotient -= 1;
  return quotient;
}

Integer ceil_of(const Rational& value) { return -floor_of(-value); }

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer denominator_lcm(const std::vector<Rational>& values) {
  Integer result = 1;
  for (const Rational& v : values) {
    const Integer& q = boost::multiprecision::denominator(v);
    result = boost::multiprecision::lcm(result, q);
  }
  return result;
}

long to_long(const Rational& value) {
  if (!is_integer(value)) throw std::invalid_argument("value is not integral: " + value.str());
  const Integer& p = boost::multiprecision::numerator(value);
  if (p > std::numeric_limits<long>::max() || p < std::numeric_limits<long>::min()) {
    throw std::overflow_error("integer out of range: " + p.str());
  }
  return p.convert_to<long>();
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace ocf
