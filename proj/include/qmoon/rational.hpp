#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmoon {

using BigInt = mpz_class;
using Rational = mpq_class;

// num / den in canonical form. Throws qmoon::Error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "num/den" or a bare integer; the result is canonical.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

// Binomial coefficient C(top, k) for an arbitrary integer top and k >= 0,
// i.e. top (top-1) ... (top-k+1) / k!.
BigInt binomial(const BigInt& top, unsigned long k);

// Floor of a rational, and the remainder in [0, 1).
BigInt floor(const Rational& value);

}  // namespace qmoon
