// SPDX-License-Identifier: Apache-2.0
#include "bruhat/bigint.hpp"

#include <stdexcept>

namespace bruhat {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return out;
}

BigInt factorial(unsigned long m) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return out;
}

}  // namespace bruhat
