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

#ifndef PCST_RATIONAL_HPP_
#define PCST_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcst {

// Exact rational scalar. GMP keeps every value canonical (lowest terms,
// positive denominator) and never rounds or overflows.
using Rational = mpq_class;

class RationalSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts integers ("-12"), decimals ("2.50", ".5", "1e3", "2.5E-1") and
// fractions ("5/2"). Throws RationalSyntaxError on anything else, including a
// zero denominator.
Rational ParseRational(std::string_view text);

// Always "p/q", including integers ("4/1").
std::string ToFractionString(const Rational& value);

// Decimal approximation for human-readable output.
std::string ToDecimalString(const Rational& value, int digits = 6);

}  // namespace pcst

#endif  // PCST_RATIONAL_HPP_
