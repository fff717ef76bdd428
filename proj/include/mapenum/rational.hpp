// Copyright 2026 The mapenum Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mapenum {

// GMP rationals are kept canonical by every arithmetic operator, so values
// are always gcd-reduced with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

BigInt factorial(std::uint32_t n);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "num/den" or "num"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// log2 of a positive integer without converting it to a double first.
/// Returns -infinity for zero.
double log2_of(const BigInt& z);

/// Natural log of a positive rational; -infinity for zero.
double log_of(const Rational& q);

double to_double(const Rational& q);

}  // namespace mapenum
