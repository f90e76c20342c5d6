#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "qmoon/biseries.hpp"
#include "qmoon/rational.hpp"
#include "qmoon/report.hpp"

namespace qmoon::monster {

// Coefficients c(n), n >= -1, of j - 744.
struct MoonshineCoeffs {
  std::map<std::int64_t, BigInt> c;
  std::int64_t max_n = -1;

  // c(n) for n <= max_n (zero below -1); throws beyond max_n.
  BigInt operator()(std::int64_t n) const;
};

MoonshineCoeffs moonshine_c(std::int64_t max_n);

// p^{-1} prod_{m > 0, n >= -1} (1 - p^m q^n)^{c(mn)} against
// sum c(m) p^m - sum c(n) q^n, for p-degree <= cap_m and q-degree <= cap_n.
VerifyReport denominator_check(std::int64_t cap_m, std::int64_t cap_n);

// p^{-1} exp(-sum_{i > 0} sum_{m > 0, n >= -1} c(mn) p^{mi} q^{ni} / i) against
// the same sum side, with both caps equal to `cap`.
VerifyReport replication_check(std::int64_t cap);

// Expanded product side of the denominator identity (with the p^{-1}),
// exact for p-degree <= cap_m and q-degree <= cap_n.
BiSeries denominator_product(std::int64_t cap_m, std::int64_t cap_n);
BiSeries denominator_sum(std::int64_t cap_m, std::int64_t cap_n);

// tr(g^d | V_k) for the divisors d of the order N.
struct CharTable {
  std::int64_t order = 1;
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> traces;  // (d, k) -> trace

  const BigInt& trace(std::int64_t d, std::int64_t k) const;
  // The identity element: N = 1 with tr(1 | V_k) = c(k).
  static CharTable identity(const MoonshineCoeffs& c);
};

// sum over d s | (m, n, N) of mu(s) / (d s) * tr(g^d | V_{mn}); throws if
// the result is not an integer.
BigInt mult_g(std::int64_t m, std::int64_t n, const CharTable& table);

}  // namespace qmoon::monster
