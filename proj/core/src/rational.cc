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

#include "greenbp/rational.h"

#include <gmp.h>

#include <cctype>
#include <string>
#include <vector>

#include "greenbp/errors.h"

namespace greenbp {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw ContractViolation("not a rational number: \"" + std::string(text) +
                          "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d(std::string(den), 10);
    if (d == 0) bad_number(text);
    value = Rational(Integer(std::string(num), 10), d);
  } else {
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view() : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if (!whole.empty() && !all_digits(whole)) bad_number(text);
    if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) {
      bad_number(text);
    }
    if (dot != std::string_view::npos && frac.empty() && whole.empty()) {
      bad_number(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(Integer(digits.empty() ? "0" : digits, 10), den);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  if (is_integral(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_exact_string(const Rational& value) {
  if (is_integral(value)) return value.get_num().get_str();
  Integer den = value.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(),
                                  Integer(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(),
                                   Integer(5).get_mpz_t());
  if (den != 1) return to_fraction_string(value);

  const unsigned long places = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Integer scaled = abs(value.get_num()) * scale / value.get_den();
  std::string digits = scaled.get_str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return (sgn(value) < 0 ? "-" : "") + digits;
}

std::string to_decimal_string(const Rational& value, int significant) {
  mpf_class f(value, 256);
  std::vector<char> buffer(64 + significant);
  gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant,
               f.get_mpf_t());
  return std::string(buffer.data());
}

Integer floor_of(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace greenbp
