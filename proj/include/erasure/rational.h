// Copyright 2026 The Erasure Threshold Authors
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

#ifndef ERASURE_RATIONAL_H
#define ERASURE_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace erasure {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero is stored as 0/1.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(const BigInt &num, const BigInt &den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "3", "-7/12" or a plain decimal such as "0.0178" or "1e-3" exactly.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational &r);

/// Decimal rendering rounded half-up to `digits` places after the point.
std::string to_decimal(const Rational &r, int digits);

double to_double(const Rational &r);

/// Nearest dyadic rational k / 2^bits (ties round up). Used to keep iterated
/// maps from growing unbounded denominators.
Rational round_dyadic(const Rational &r, unsigned bits);

Rational pow(const Rational &base, unsigned exponent);

}  // namespace erasure

#endif
