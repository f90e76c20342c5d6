#include "qmoon/root_mult.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"

namespace qmoon::roots {

namespace {

BigInt integral_coeff(const QSeries& s, std::int64_t n) {
  const Rational c = s.coeff(n);
  if (!is_integer(c)) throw Error("non-integral multiplicity coefficient");
  return c.get_num();
}

std::int64_t shifted_argument(std::int64_t norm, std::int64_t base, const char* what) {
  if (norm % 2 != 0) throw Error(std::string(what) + ": root norm must be even");
  const std::int64_t arg = base - norm / 2;
  if (arg < 0) {
    throw Error(std::string(what) + ": norm " + std::to_string(norm) + " gives a negative argument");
  }
  return arg;
}

}  // namespace

BigInt colored_partitions(unsigned colors, std::int64_t n) {
  if (n < 0) return 0;
  return integral_coeff(forms::colored_partition_series(colors, n), n);
}

BigInt ha1_mult(std::int64_t norm) {
  const auto n = shifted_argument(norm, 1, "ha1_mult");
  return integral_coeff(forms::partition_series(n), n);
}

BigInt e10_level2_mult(std::int64_t norm) {
  const auto n = shifted_argument(norm, 3, "e10_level2_mult");
  return integral_coeff(forms::xi_series(n), n);
}

BigInt fake_monster_mult(std::int64_t norm) {
  return colored_partitions(24, shifted_argument(norm, 1, "fake_monster_mult"));
}

Algebra parse_algebra(const std::string& name) {
  if (name == "e10" || name == "E10_level2" || name == "e10_level2") return Algebra::e10_level2;
  if (name == "fake_monster" || name == "fake-monster") return Algebra::fake_monster;
  throw Error("unknown algebra '" + name + "' (expected e10 or fake_monster)");
}

std::string algebra_name(Algebra algebra) {
  return algebra == Algebra::e10_level2 ? "E10_level2" : "fake_monster";
}

std::int64_t MultReport::violations() const {
  std::int64_t count = 0;
  for (const auto& row : rows) count += row.violation ? 1 : 0;
  return count;
}

MultReport frenkel_compare(Algebra algebra, std::int64_t min_norm) {
  MultReport report;
  report.algebra = algebra;
  report.colors = algebra == Algebra::e10_level2 ? 8 : 24;
  if (min_norm > 2) return report;
  std::int64_t lowest = 2;
  while (lowest - 2 >= min_norm) lowest -= 2;
  const std::int64_t top = 1 - lowest / 2;
  const QSeries bound = forms::colored_partition_series(static_cast<unsigned>(report.colors), top);
  const QSeries exact =
      algebra == Algebra::e10_level2 ? forms::xi_series(top + 2) : forms::colored_partition_series(24, top);
  for (std::int64_t norm = 2; norm >= min_norm; norm -= 2) {
    MultRow row;
    row.norm = norm;
    row.bound = integral_coeff(bound, 1 - norm / 2);
    row.exact = integral_coeff(exact, (algebra == Algebra::e10_level2 ? 3 : 1) - norm / 2);
    row.violation = row.exact > row.bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const MultReport& report) {
  Json out;
  out["algebra"] = algebra_name(report.algebra);
  out["bound_colors"] = report.colors;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"norm", row.norm},
                        {"exact", row.exact.get_str()},
                        {"bound", row.bound.get_str()},
                        {"violation", row.violation}});
  }
  out["rows"] = std::move(rows);
  out["violations"] = report.violations();
  return out;
}

std::string format_report(const MultReport& report) {
  std::ostringstream out;
  out << algebra_name(report.algebra) << " against p^(" << report.colors << ")\n";
  out << "norm\texact\tbound\n";
  for (const auto& row : report.rows) {
    out << row.norm << '\t' << row.exact.get_str() << '\t' << row.bound.get_str()
        << (row.violation ? "\tVIOLATION" : "") << '\n';
  }
  out << "violations: " << report.violations() << '\n';
  return out.str();
}

long double bessel_i13(long double x) {
  const long double half = x / 2;
  long double term = 1;
  for (int j = 1; j <= 13; ++j) term *= half / j;
  long double sum = 0;
  for (int j = 0;; ++j) {
    const long double next = sum + term;
    if (next == sum && j > 0) break;
    sum = next;
    term *= half * half / ((j + 1) * (j + 14.0L));
  }
  return sum;
}

long double kloosterman(std::int64_t n, std::int64_t k) {
  if (k == 1) return 1;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  long double total = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    for (std::int64_t hp = 0; hp < k; ++hp) {
      if ((h * hp + 1) % k != 0) continue;
      const std::int64_t phase = ((n % k) * h + hp) % k;
      total += std::cos(two_pi * static_cast<long double>(phase) / static_cast<long double>(k));
    }
  }
  return total;
}

long double p24_rademacher(std::int64_t n, std::int64_t terms) {
  if (n < 1 || terms < 1) throw Error("p24_rademacher needs n >= 1 and at least one term");
  const long double pi = std::numbers::pi_v<long double>;
  const long double root = std::sqrt(static_cast<long double>(n));
  long double sum = 0;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const long double a = kloosterman(n, k);
    if (a == 0) continue;
    sum += bessel_i13(4 * pi * root / static_cast<long double>(k)) / static_cast<long double>(k) * a;
  }
  return 2 * pi * std::pow(static_cast<long double>(n), -6.5L) * sum;
}

long double p24_asymptotic_ratio(std::int64_t n) {
  long exponent = 0;
  const BigInt value = colored_partitions(24, n + 1);
  const long double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  const long double exact = std::ldexp(mantissa, static_cast<int>(exponent));
  const long double pi = std::numbers::pi_v<long double>;
  const long double nn = static_cast<long double>(n);
  return exact * std::sqrt(2.0L) * std::pow(nn, 6.75L) * std::exp(-4 * pi * std::sqrt(nn));
}

}  // namespace qmoon::roots
