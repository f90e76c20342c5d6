#include "qmoon/exponents.hpp"

#include <algorithm>
#include <string>

#include "qmoon/arith.hpp"
#include "qmoon/error.hpp"

namespace qmoon {

bool ExponentTable::all_integer() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](const Rational& e) { return is_integer(e); });
}

QSeries product_from_exponents(const ExponentTable& table, Nome nome) {
  const std::int64_t order = table.order();
  const auto n = static_cast<std::size_t>(order + 1);
  // b_k = sum_{d | k} d e_d, then n f_n = -sum_{k=1}^n b_k f_{n-k}.
  std::vector<Rational> b(n);
  for (std::int64_t d = 1; d <= order; ++d) {
    const Rational& e = table.at(d);
    if (e == 0) continue;
    const Rational term = e * d;
    for (std::int64_t k = d; k <= order; k += d) b[static_cast<std::size_t>(k)] += term;
  }
  std::vector<Rational> f(n);
  f[0] = 1;
  if (table.all_integer()) {
    std::vector<BigInt> ib(n), fi(n);
    for (std::size_t k = 0; k < n; ++k) ib[k] = b[k].get_num();
    fi[0] = 1;
    BigInt acc;
    for (std::size_t m = 1; m < n; ++m) {
      acc = 0;
      for (std::size_t k = 1; k <= m; ++k) {
        if (ib[k] == 0) continue;
        mpz_submul(acc.get_mpz_t(), ib[k].get_mpz_t(), fi[m - k].get_mpz_t());
      }
      mpz_divexact_ui(fi[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
      f[m] = Rational(fi[m]);
    }
  } else {
    Rational acc;
    for (std::size_t m = 1; m < n; ++m) {
      acc = 0;
      for (std::size_t k = 1; k <= m; ++k) {
        if (b[k] == 0) continue;
        acc -= b[k] * f[m - k];
      }
      f[m] = acc / static_cast<long>(m);
    }
  }
  return QSeries(0, std::move(f), order, nome, -table.leading_power);
}

ExponentTable exponents_from_series(const QSeries& series, std::int64_t order) {
  if (series.is_zero()) throw Error("exponents_from_series: series is zero");
  if (order < 0) throw Error("exponents_from_series: negative order");
  const std::int64_t v = *series.valuation();
  if (series.coeff(v) != 1) {
    throw Error("exponents_from_series: unit part's constant term is " +
                to_string(series.coeff(v)) + ", expected 1");
  }
  if (!series.is_exact() && series.trunc() - v < order) {
    throw Error("exponents_from_series: series known only to relative order " +
                std::to_string(series.trunc() - v) + " < " + std::to_string(order));
  }
  std::vector<Rational> unit(static_cast<std::size_t>(order + 1));
  for (const auto& [e, c] : series.terms()) {
    if (e - v <= order) unit[static_cast<std::size_t>(e - v)] = c;
  }
  const QSeries log_u = log_series(QSeries(0, std::move(unit), order, series.nome()));

  ExponentTable table;
  table.leading_power = -(series.prefactor() + v);
  table.exponents.resize(static_cast<std::size_t>(order));
  // d L_d with L = -log u.
  std::vector<Rational> weighted(static_cast<std::size_t>(order + 1));
  for (std::int64_t d = 1; d <= order; ++d) weighted[static_cast<std::size_t>(d)] = -log_u.coeff(d) * d;
  for (std::int64_t n = 1; n <= order; ++n) {
    Rational sum = 0;
    for (std::int64_t d : arith::divisors(n)) {
      const int mu = arith::moebius(n / d);
      if (mu == 0) continue;
      sum += mu * weighted[static_cast<std::size_t>(d)];
    }
    table.exponents[static_cast<std::size_t>(n - 1)] = sum / n;
  }
  return table;
}

}  // namespace qmoon
