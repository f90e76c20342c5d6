#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qmoon/qseries.hpp"
#include "qmoon/rational.hpp"

namespace qmoon {

// Region of exponent pairs (i, j) whose coefficients are known: i <= max_first,
// and min_second <= j <= max_second where those bounds are present.
struct BiWindow {
  std::int64_t max_first = 0;
  std::optional<std::int64_t> min_second;
  std::optional<std::int64_t> max_second;

  bool contains(std::int64_t i, std::int64_t j) const;
  friend bool operator==(const BiWindow&, const BiWindow&) = default;
};

BiWindow intersect(const BiWindow& a, const BiWindow& b);

// Truncated series in two formal variables, sparse and exact.
// Products keep only monomials inside the intersection of both windows, so
// callers choose windows wide enough that discarded terms cannot re-enter.
class BiSeries {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;

  explicit BiSeries(BiWindow window, std::pair<std::string, std::string> vars = {"p", "q"});
  BiSeries(std::map<Key, Rational> terms, BiWindow window,
           std::pair<std::string, std::string> vars = {"p", "q"});

  static BiSeries constant(Rational value, BiWindow window,
                           std::pair<std::string, std::string> vars = {"p", "q"});
  static BiSeries monomial(Rational coeff, std::int64_t i, std::int64_t j, BiWindow window,
                           std::pair<std::string, std::string> vars = {"p", "q"});

  const BiWindow& window() const { return window_; }
  const std::pair<std::string, std::string>& vars() const { return vars_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws when (i, j) lies outside the window.
  Rational coeff(std::int64_t i, std::int64_t j) const;

  BiSeries restricted(const BiWindow& window) const;
  // Multiplies by x^di y^dj and shifts the window accordingly.
  BiSeries shifted(std::int64_t di, std::int64_t dj) const;

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const Rational& scalar, const BiSeries& a);
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.window_ == b.window_ && a.terms_ == b.terms_;
  }

 private:
  void prune();

  std::map<Key, Rational> terms_;
  BiWindow window_;
  std::pair<std::string, std::string> vars_;
};

// (1 + sign * x^a y^b)^e for any integer e, expanded binomially inside the
// window. Terminates because a >= 1 or the window bounds the second exponent.
BiSeries binomial_power(int sign, std::int64_t a, std::int64_t b, const BigInt& e,
                        const BiWindow& window,
                        std::pair<std::string, std::string> vars = {"p", "q"});

// Formal exp/log; every non-constant monomial must have first exponent >= 1
// so the series is nilpotent modulo the first-variable cap.
BiSeries exp_series(const BiSeries& a);
BiSeries log_series(const BiSeries& a);

// x^i y^j -> t^{wi*i + wj*j} * sign^j, collected as a one-variable series
// known through `trunc`. Exponents must land on integers.
QSeries specialize(const BiSeries& a, std::int64_t wi, std::int64_t wj, int sign_second,
                   std::int64_t trunc, Nome nome = Nome::full);

struct BiMismatch {
  BiSeries::Key monomial;
  Rational lhs;
  Rational rhs;
};

// Compares inside the intersection of both windows, scanning monomials in
// (first exponent, second exponent) order; returns the first difference.
std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b);

std::string format_monomial(const BiSeries::Key& key,
                            const std::pair<std::string, std::string>& vars);

}  // namespace qmoon
