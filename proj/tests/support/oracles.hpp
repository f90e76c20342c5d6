#pragma once

// Brute-force oracles shared by the unit tests and the acceptance runner.
// None of these touch the series kernel.

#include <cstdint>
#include <functional>
#include <vector>

#include "qmoon/rational.hpp"

namespace oracle {

// Number of partitions of n with parts in [1, max_part], each part drawn in
// one of `colors` colours, by direct recursion over (part, colour) pairs.
inline std::int64_t colored_partitions(std::int64_t n, std::int64_t colors) {
  // Enumerate multisets of (part, colour) labels in nonincreasing label order.
  std::function<std::int64_t(std::int64_t, std::int64_t)> count = [&](std::int64_t left,
                                                                       std::int64_t max_label) -> std::int64_t {
    if (left == 0) return 1;
    std::int64_t total = 0;
    for (std::int64_t label = max_label; label >= 0; --label) {
      const std::int64_t part = label / colors + 1;
      if (part <= left) total += count(left - part, label);
    }
    return total;
  };
  return count(n, n * colors - 1);
}

inline std::int64_t partitions(std::int64_t n) { return colored_partitions(n, 1); }

// Akiyama-Tanigawa algorithm; returns B_n with B_1 = +1/2.
inline qmoon::Rational bernoulli_at(unsigned n) {
  std::vector<qmoon::Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = qmoon::Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return a[0];
}

inline std::int64_t sigma(unsigned k, std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t p = 1;
    for (unsigned i = 0; i < k; ++i) p *= d;
    total += p;
  }
  return total;
}

// Representations of n as a sum of two squares (ordered, signed).
inline std::int64_t r2(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) count += (a * a + b * b == n) ? 1 : 0;
  }
  return count;
}

// Kronecker-Hurwitz: sum over t of H(4n - t^2) = 2 sigma(n) - sum over d | n of min(d, n/d).
inline std::int64_t hurwitz_relation_rhs(std::int64_t n) {
  std::int64_t mins = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) mins += std::min(d, n / d);
  }
  return 2 * sigma(1, n) - mins;
}

}  // namespace oracle
