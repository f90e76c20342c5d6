#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmoon/qseries.hpp"
#include "qmoon/rational.hpp"

namespace qmoon::forms {

// Bernoulli number B_k from x / (e^x - 1), so B_1 = -1/2.
Rational bernoulli(unsigned k);

// Normalized Eisenstein series of even weight >= 4, full nome, known
// through q^order.
QSeries eisenstein(unsigned weight, std::int64_t order);

// prod_{n >= 1} (1 - q^n) through q^order, multiplied factor by factor.
QSeries euler_phi(std::int64_t order);

QSeries delta(std::int64_t order);
// Prefactor 1/24 times the Euler product.
QSeries eta(std::int64_t order);

// Generalized cycle shape a_1^{b_1} a_2^{b_2} ...
struct EtaShape {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (scale, exponent)

  // Parses "1^8 2^8" (a bare "a" means a^1). Scales must be distinct.
  static EtaShape parse(std::string_view text);
  Rational prefactor() const;  // sum a_i b_i / 24
  std::string to_string() const;
};

// prod eta(q^{a_i})^{b_i} through q^order (exponents relative to the prefactor).
QSeries eta_quotient(const EtaShape& shape, std::int64_t order);

QSeries j_invariant(std::int64_t order);
QSeries jstar(std::int64_t order);

// Half-nome Jacobi theta null values. theta 2 carries prefactor 1/4.
QSeries theta(int which, std::int64_t order);
// sum_{n in Z} q^{n^2} in the full nome.
QSeries theta_full(std::int64_t order);

// Leech theta series in the half nome (exponent = norm) through q^order.
QSeries leech_theta_from_thetas(std::int64_t order);
QSeries leech_theta_from_delta(std::int64_t order);
// Both constructions; throws qmoon::Error if they disagree.
QSeries leech_theta(std::int64_t order);

QSeries partition_series(std::int64_t order);
QSeries colored_partition_series(unsigned colors, std::int64_t order);
QSeries xi_series(std::int64_t order);

// sum over odd n of sigma_1(n) q^n.
QSeries F_oddsigma(std::int64_t order);

// Unit part of 1 / eta_g, and that series minus its constant term.
QSeries p_g_series(const EtaShape& shape, std::int64_t order);
QSeries j_g_series(const EtaShape& shape, std::int64_t order);

// Catalog labels for the command line: E4, E6, ..., delta, eta, j, jstar,
// theta, theta2, theta3, theta4, leech_theta, F, partition, p24 (pK), xi.
QSeries by_name(std::string_view name, std::int64_t order);
std::vector<std::string> catalog_names();

}  // namespace qmoon::forms
