// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace bruhat {

/// Arbitrary-precision signed integer used for every weight, coefficient,
/// path count and matrix entry in the library.
using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);

/// Parses a decimal string; throws std::invalid_argument on malformed input.
BigInt from_decimal(const std::string& text);

BigInt factorial(unsigned long m);

/// C(top, bottom), with the convention C(a, b) = 0 when b < 0 or b > a.
BigInt binomial(long top, long bottom);

}  // namespace bruhat
