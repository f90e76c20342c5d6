#pragma once

#include <cstdint>
#include <vector>

#include "qmoon/rational.hpp"

namespace qmoon::arith {

// Positive divisors of n in increasing order. Throws qmoon::Error for n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

// Nonnegative gcd; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

int moebius(std::int64_t n);

// sigma_k(n) = sum of d^k over positive divisors d of n.
BigInt sigma(unsigned k, std::int64_t n);

// Table of sigma_k(n) for 0 <= n <= max_n, with entry 0 set to zero.
std::vector<BigInt> sigma_table(unsigned k, std::int64_t max_n);

}  // namespace qmoon::arith
