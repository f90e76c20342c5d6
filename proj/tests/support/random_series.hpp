#pragma once

// Randomized property checks on the series kernel. Each check returns an
// empty string on success or a description of the failing case.

#include <cstdint>
#include <random>
#include <string>

#include "qmoon/exponents.hpp"
#include "qmoon/qseries.hpp"

namespace props {

inline qmoon::Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  qmoon::Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Random series with low exponent in [lo_min, 0], truncated at `trunc`.
inline qmoon::QSeries random_series(std::mt19937_64& rng, std::int64_t trunc, std::int64_t lo_min = -2) {
  std::uniform_int_distribution<std::int64_t> lo_dist(lo_min, 0);
  const std::int64_t lo = lo_dist(rng);
  std::vector<qmoon::Rational> c;
  for (std::int64_t e = lo; e <= trunc; ++e) c.push_back(random_rational(rng));
  return qmoon::QSeries(lo, std::move(c), trunc);
}

// 1 + (random terms of positive degree).
inline qmoon::QSeries random_unit(std::mt19937_64& rng, std::int64_t trunc) {
  std::vector<qmoon::Rational> c{qmoon::Rational(1)};
  for (std::int64_t e = 1; e <= trunc; ++e) c.push_back(random_rational(rng));
  return qmoon::QSeries(0, std::move(c), trunc);
}

inline std::string describe(const char* what, int trial) {
  return std::string(what) + " failed in trial " + std::to_string(trial);
}

// One randomized trial of every kernel property; `trial` seeds the case.
inline std::string check_trial(int trial) {
  using namespace qmoon;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial));
  std::uniform_int_distribution<std::int64_t> tdist(3, 12);
  const std::int64_t t = tdist(rng);
  const QSeries a = random_series(rng, t);
  const QSeries b = random_series(rng, tdist(rng));
  const QSeries c = random_series(rng, tdist(rng));

  if (!(a + b == b + a)) return describe("additive commutativity", trial);
  if (!(a * b == b * a)) return describe("multiplicative commutativity", trial);
  if (!((a + b) + c == a + (b + c))) return describe("additive associativity", trial);
  if (first_mismatch((a * b) * c, a * (b * c))) return describe("multiplicative associativity", trial);
  if (first_mismatch(a * (b + c), a * b + a * c)) return describe("distributivity", trial);
  if (!(a - a).is_zero()) return describe("additive inverse", trial);

  const QSeries u = random_unit(rng, t);
  const QSeries one = QSeries::constant(1, u.trunc());
  if (first_mismatch(u * invert(u), one)) return describe("invert", trial);
  if (first_mismatch(invert(invert(u)), u)) return describe("double invert", trial);
  if (a.valuation()) {
    const QSeries prod = a * invert(a);
    if (first_mismatch(prod, QSeries::constant(1, prod.trunc()))) return describe("Laurent invert", trial);
  }

  if (first_mismatch(exp_series(log_series(u)), u)) return describe("exp(log(u))", trial);
  const QSeries x = u - one;
  if (first_mismatch(log_series(exp_series(x)), x)) return describe("log(exp(x))", trial);
  if (first_mismatch(exp_series(2 * log_series(u)), u * u)) return describe("exp(2 log u)", trial);

  ExponentTable table;
  std::uniform_int_distribution<long> small(-5, 5);
  table.leading_power = Rational(small(rng));
  for (std::int64_t n = 1; n <= t; ++n) table.exponents.push_back(Rational(small(rng)));
  const QSeries p = product_from_exponents(table).truncated(t - table.leading_power.get_num().get_si());
  if (!(exponents_from_series(p, t) == table)) return describe("exponent round trip", trial);
  const QSeries integral = random_unit(rng, t);
  const QSeries back = product_from_exponents(exponents_from_series(integral, t));
  if (first_mismatch(back, integral)) return describe("product round trip", trial);

  // Restricting a high-order result must reproduce the low-order computation.
  const std::int64_t m = t / 2;
  const QSeries low_prod = a.truncated(m) * b.truncated(m);
  if (!((a * b).truncated(low_prod.trunc()) == low_prod)) return describe("truncation monotonicity (product)", trial);
  if (!(invert(u).truncated(m) == invert(u.truncated(m)))) return describe("truncation monotonicity (invert)", trial);
  if (!(exp_series(x).truncated(m) == exp_series(x.truncated(m)))) {
    return describe("truncation monotonicity (exp)", trial);
  }
  return {};
}

}  // namespace props
