#pragma once

#include <cstdint>
#include <vector>

#include "qmoon/qseries.hpp"
#include "qmoon/rational.hpp"

namespace qmoon {

// Data of a product q^{-h} prod_{n=1}^{order} (1 - q^n)^{e_n}.
struct ExponentTable {
  Rational leading_power;           // h
  std::vector<Rational> exponents;  // exponents[n - 1] = e_n

  std::int64_t order() const { return static_cast<std::int64_t>(exponents.size()); }
  const Rational& at(std::int64_t n) const { return exponents.at(static_cast<std::size_t>(n - 1)); }
  bool all_integer() const;

  friend bool operator==(const ExponentTable&, const ExponentTable&) = default;
};

// Expands q^{-h} prod (1 - q^n)^{e_n}; the unit part is exact through q^order.
QSeries product_from_exponents(const ExponentTable& table, Nome nome = Nome::full);

// Inverse of product_from_exponents: reads h from the lowest monomial and
// e_1..e_order from the unit part by Moebius inversion of
// m [q^m](-log u) = sum_{d | m} d e_d.
ExponentTable exponents_from_series(const QSeries& series, std::int64_t order);

}  // namespace qmoon
