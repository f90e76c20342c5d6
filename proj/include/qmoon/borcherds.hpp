#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmoon/exponents.hpp"
#include "qmoon/qseries.hpp"
#include "qmoon/rational.hpp"

namespace qmoon::borcherds {

// Hurwitz class number by enumerating reduced forms ax^2 + bxy + cy^2 of
// discriminant -n (non-primitive forms included, the orbits of multiples of
// x^2 + y^2 and x^2 + xy + y^2 weighted 1/2 and 1/3). H(0) = -1/12.
Rational hurwitz(std::int64_t n);
std::map<std::int64_t, Rational> hurwitz_table(std::int64_t max_n);

// Integer weight-1/2 input whose support lies on exponents = 0, 1 mod 4.
struct PlusForm {
  QSeries series;
  const QSeries& operator*() const { return series; }
  Rational c(std::int64_t n) const { return series.coeff(n); }
};

struct PlusSpaceViolation {
  std::int64_t exponent;
  Rational coeff;
  std::string reason;
};

// Offending coefficients, in ascending exponent order (empty when valid).
std::vector<PlusSpaceViolation> plus_space_violations(const QSeries& f);
// Throws qmoon::Error listing the violations.
PlusForm plus_space_check(const QSeries& f);

struct CatalogForm {
  PlusForm form;
  std::vector<std::string> notes;
};

// f_delta, f_j, f_4, f_6, f_8, f_10, f_14, known through q^order.
CatalogForm catalog(std::string_view name, std::int64_t order);
const std::vector<std::string>& catalog_names();

// With G = F theta (theta^4 - 2F)(theta^4 - 16F) E_w(4 tau) / Delta(4 tau):
// f_j = 3G + 168 theta and f_6 = (j(4 tau) - shift) theta - 2G.
QSeries f_j_formula(std::int64_t order, unsigned eisenstein_weight);
QSeries f_6_formula(std::int64_t order, unsigned eisenstein_weight, const Rational& shift);

struct LiftResult {
  Rational h;
  QSeries result;
  ExponentTable table;
};

// h = constant term of f * sum H(n) q^n; result = q^{-h} prod (1 - q^n)^{c(n^2)}.
LiftResult lift(const PlusForm& f, std::int64_t order);

// sum over d > 0 of c(D d^2), D < 0.
BigInt zero_multiplicity(const PlusForm& f, std::int64_t discriminant);

}  // namespace qmoon::borcherds
