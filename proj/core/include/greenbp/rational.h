// Copyright 2026 The greenbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENBP_RATIONAL_H_
#define GREENBP_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace greenbp {

// Exact arbitrary-precision rational. Every size, load, energy and parameter
// in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "3", "-0.125", ".5" or "p/q". Throws ContractViolation on anything
// else (including a zero denominator).
Rational parse_rational(std::string_view text);

// "p/q", or "p" for integers.
std::string to_fraction_string(const Rational& value);

// Exact decimal expansion when the denominator has only the prime factors
// 2 and 5, otherwise the fraction form.
std::string to_exact_string(const Rational& value);

// Rounded decimal with `significant` significant digits, for reports.
std::string to_decimal_string(const Rational& value, int significant = 12);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

inline bool is_integral(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace greenbp

#endif  // GREENBP_RATIONAL_H_
