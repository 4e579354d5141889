// Copyright 2026 The pcst Authors
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

#include "pcst/rational.hpp"

#include <cctype>
#include <cstdio>
#include <string>

namespace pcst {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

[[noreturn]] void Reject(std::string_view text) {
  throw RationalSyntaxError("malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) Reject(original);

  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Reject(original);
    const mpz_class denominator = ParseInteger(den);
    if (denominator == 0) Reject(original);
    result = Rational(ParseInteger(num), denominator);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!AllDigits(exp_text) || exp_text.size() > 6) Reject(original);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
      if (!frac_part.empty() && !AllDigits(frac_part)) Reject(original);
    }
    if (!int_part.empty() && !AllDigits(int_part)) Reject(original);
    if (int_part.empty() && frac_part.empty()) Reject(original);

    const std::string digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
    const mpz_class mantissa = ParseInteger(digits);
    if (exponent >= 0) {
      result = Rational(mantissa * PowerOfTen(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(mantissa, PowerOfTen(static_cast<unsigned long>(-exponent)));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

std::string ToFractionString(const Rational& value) {
  Rational reduced(value);
  reduced.canonicalize();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

std::string ToDecimalString(const Rational& value, int digits) {
  // Display only; exact values go through ToFractionString.
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value.get_d());
  return buffer;
}

}  // namespace pcst
