#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <utility>

#include "qmoon/report.hpp"
#include "qmoon/series_json.hpp"

namespace qmoon::maass {

// Jacobi form coefficients c(n, r) of weight k and index m, known (absent
// entries are zero) for 0 <= n <= n_bound. Support satisfies r^2 <= 4nm.
struct JacobiCoeffTable {
  std::int64_t k = 0;
  std::int64_t m = 1;
  std::int64_t n_bound = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> coeffs;

  // Throws qmoon::Error when n is outside 0..n_bound.
  BigInt c(std::int64_t n, std::int64_t r) const;
};

// Siegel coefficients a(n, r, m) of T = [[n, r/2], [r/2, m]] for
// 1 <= m <= max_m, known wherever n * m <= n_bound.
struct SiegelCoeffTable {
  std::int64_t k = 0;
  std::int64_t max_m = 0;
  std::int64_t n_bound = 0;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> coeffs;

  BigInt a(std::int64_t n, std::int64_t r, std::int64_t m) const;
  bool known(std::int64_t n, std::int64_t m) const { return m >= 1 && m <= max_m && n >= 0 && n * m <= n_bound; }
};

JacobiCoeffTable jacobi_from_json(const Json& json);
Json to_json(const JacobiCoeffTable& table);
SiegelCoeffTable siegel_from_json(const Json& json);
Json to_json(const SiegelCoeffTable& table);

// (V_m t)(n, r) = sum over d | gcd(n, |r|, m) of d^{k-1} c(mn/d^2, r/d), for
// every n with m n <= t.n_bound. The result has index m and
// n_bound = t.n_bound / m.
JacobiCoeffTable v_operator(const JacobiCoeffTable& t, std::int64_t m);

// Single entry; throws when c(mn, .) lies beyond the table.
BigInt v_entry(const JacobiCoeffTable& t, std::int64_t m, std::int64_t n, std::int64_t r);

// Layers m = 1..max_m; the m = 0 layer is not assembled.
SiegelCoeffTable assemble_maass(const JacobiCoeffTable& t, std::int64_t max_m);

// a(n, r, m) against sum over d | (n, r, m) of d^{k-1} a(mn/d^2, r/d, 1) on
// the known region; entries outside 4nm - r^2 >= 0 also fail.
VerifyReport maass_relation_check(const SiegelCoeffTable& s);

// Random index-1 table with entries in [-magnitude, magnitude] for every
// (n, r) with r^2 <= 4n, n <= n_bound.
JacobiCoeffTable random_index1_table(std::mt19937_64& rng, std::int64_t k, std::int64_t n_bound,
                                     std::int64_t magnitude);

}  // namespace qmoon::maass
