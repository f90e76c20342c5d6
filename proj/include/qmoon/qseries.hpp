#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmoon/rational.hpp"

namespace qmoon {

// full: the formal variable stands for e^{2 pi i tau}; half: e^{i pi tau}.
enum class Nome { full, half };

std::string_view to_string(Nome nome);
Nome parse_nome(std::string_view text);

// Truncated Laurent series q^prefactor * sum_e c_e q^e with exact rational
// coefficients.
//
// The prefactor is kept in [0, 1) with denominator dividing 24; any integral
// part is folded into the exponents. Coefficients at integer exponents above
// trunc() are unknown (not zero). Exact polynomials carry trunc() == kExact.
// Values are immutable once built.
class QSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  // The zero series known up to exponent `trunc`.
  explicit QSeries(std::int64_t trunc = kExact, Nome nome = Nome::full,
                   std::string var = "q");

  // Coefficients c[i] sit at exponent low + i. Entries above `trunc` are
  // dropped. A prefactor outside [0, 1) shifts the exponents (and trunc).
  QSeries(std::int64_t low, std::vector<Rational> coeffs, std::int64_t trunc,
          Nome nome = Nome::full, Rational prefactor = 0, std::string var = "q");

  QSeries(const std::map<std::int64_t, Rational>& coeffs, std::int64_t trunc,
          Nome nome = Nome::full, Rational prefactor = 0, std::string var = "q");

  static QSeries monomial(Rational coeff, std::int64_t exponent,
                          std::int64_t trunc = kExact, Nome nome = Nome::full);
  static QSeries constant(Rational value, std::int64_t trunc = kExact,
                          Nome nome = Nome::full);

  Nome nome() const { return nome_; }
  const std::string& var() const { return var_; }
  const Rational& prefactor() const { return prefactor_; }
  std::int64_t trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }

  // Coefficient at the integer exponent e (relative to the prefactor).
  // Throws if e lies beyond trunc().
  Rational coeff(std::int64_t exponent) const;
  Rational operator[](std::int64_t exponent) const { return coeff(exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with a nonzero coefficient.
  std::optional<std::int64_t> valuation() const;
  // Highest stored nonzero exponent (only meaningful when !is_zero()).
  std::int64_t top_exponent() const;

  // Stored range [low, low + size) without leading or trailing zeros.
  std::int64_t storage_low() const { return low_; }
  std::span<const Rational> storage() const { return coeffs_; }

  // Nonzero coefficients in ascending exponent order.
  std::map<std::int64_t, Rational> terms() const;

  bool all_integer() const;

  // Drops knowledge above `order` (no-op when order >= trunc()).
  QSeries truncated(std::int64_t order) const;
  // Multiplies by q^shift.
  QSeries shifted(std::int64_t shift) const;
  QSeries with_var(std::string var) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other) { return *this = *this + other; }
  QSeries& operator-=(const QSeries& other) { return *this = *this - other; }
  QSeries& operator*=(const QSeries& other) { return *this = *this * other; }

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& scalar, const QSeries& a);
  friend QSeries operator*(const QSeries& a, const Rational& scalar) { return scalar * a; }

  // Structural equality: nome, prefactor, trunc and every coefficient.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  void normalize();

  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
  std::int64_t trunc_ = kExact;
  Nome nome_ = Nome::full;
  Rational prefactor_ = 0;
  std::string var_ = "q";
};

struct CoeffMismatch {
  std::int64_t exponent;
  Rational lhs;
  Rational rhs;
};

// First exponent (ascending) within the common known range where the two
// series differ. Throws ConventionError if nome or prefactor differ.
std::optional<CoeffMismatch> first_mismatch(const QSeries& a, const QSeries& b);
// Common known range: min of both truncation orders.
std::int64_t common_trunc(const QSeries& a, const QSeries& b);

QSeries invert(const QSeries& a);
QSeries pow(const QSeries& a, unsigned exponent);
// q -> q^k on exponents, prefactor and trunc.
QSeries scale_var(const QSeries& a, std::int64_t k);
// Re-expresses a full-nome series in the half nome (q_full = q_half^2).
QSeries full_to_half(const QSeries& a);
// q -> -q. Requires a zero prefactor.
QSeries negate_var(const QSeries& a);

QSeries exp_series(const QSeries& a);
QSeries log_series(const QSeries& a);

// Text rendering in ascending order, e.g. "q^-1 + 744 + 196884*q + O(q^3)".
std::string format_series(const QSeries& a);

namespace kernel {

// out[i] = sum_j a[j] * b[i - j] for 0 <= i < n_out, exact. Works on a
// common-denominator integer image of both inputs.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               std::size_t n_out);

// Power-series reciprocal of u (u[0] != 0) to n_out terms.
std::vector<Rational> reciprocal(std::span<const Rational> u, std::size_t n_out);

}  // namespace kernel

}  // namespace qmoon
