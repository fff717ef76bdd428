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

#include "mapenum/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mapenum {

BigInt factorial(std::uint32_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

double log2_of(const BigInt& z) {
  if (sgn(z) < 0) throw std::domain_error("log2 of a negative integer");
  if (sgn(z) == 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return static_cast<double>(exponent) + std::log2(mantissa);
}

double log_of(const Rational& q) {
  if (sgn(q) < 0) throw std::domain_error("log of a negative rational");
  if (sgn(q) == 0) return -std::numeric_limits<double>::infinity();
  return (log2_of(q.get_num()) - log2_of(q.get_den())) * std::log(2.0);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mapenum
