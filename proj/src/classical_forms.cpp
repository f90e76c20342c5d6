#include "qmoon/classical_forms.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>

#include "qmoon/arith.hpp"
#include "qmoon/error.hpp"

namespace qmoon::forms {

namespace {

std::int64_t to_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error("invalid integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Rational> bernoulli_table(unsigned k) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  while (table.size() <= k) {
    const unsigned n = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(BigInt(n + 1), j)) * table[j];
    table.push_back(-acc / Rational(n + 1));
  }
  return std::vector<Rational>(table.begin(), table.begin() + k + 1);
}

// phi(q^a) known through q^order.
QSeries scaled_phi(std::int64_t a, std::int64_t order) {
  return scale_var(euler_phi(order / a + 1), a).truncated(order);
}

}  // namespace

Rational bernoulli(unsigned k) { return bernoulli_table(k).back(); }

QSeries eisenstein(unsigned weight, std::int64_t order) {
  if (weight < 4 || weight % 2 != 0) throw Error("eisenstein: weight must be even and >= 4");
  if (order < 0) return QSeries(order);
  const Rational factor = -Rational(2 * weight) / bernoulli(weight);
  const auto sig = arith::sigma_table(weight - 1, order);
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  c[0] = 1;
  for (std::int64_t n = 1; n <= order; ++n) c[n] = factor * sig[n];
  return QSeries(0, std::move(c), order);
}

QSeries euler_phi(std::int64_t order) {
  if (order < 0) return QSeries(order);
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<BigInt> c(n);
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) c[i] -= c[i - k];
  }
  std::vector<Rational> out(c.begin(), c.end());
  return QSeries(0, std::move(out), order);
}

QSeries delta(std::int64_t order) {
  return pow(euler_phi(order - 1), 24).shifted(1);
}

QSeries eta(std::int64_t order) {
  const QSeries phi = euler_phi(order);
  return QSeries(phi.terms(), phi.trunc(), Nome::full, Rational(1, 24));
}

EtaShape EtaShape::parse(std::string_view text) {
  EtaShape shape;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::int64_t a = to_int(std::string_view(token).substr(0, caret));
    const std::int64_t b =
        caret == std::string::npos ? 1 : to_int(std::string_view(token).substr(caret + 1));
    if (a <= 0) throw Error("eta shape scale must be positive");
    shape.factors.emplace_back(a, b);
  }
  if (shape.factors.empty()) throw Error("empty eta shape");
  std::sort(shape.factors.begin(), shape.factors.end());
  for (std::size_t i = 1; i < shape.factors.size(); ++i) {
    if (shape.factors[i].first == shape.factors[i - 1].first) {
      throw Error("eta shape scales must be distinct");
    }
  }
  return shape;
}

Rational EtaShape::prefactor() const {
  std::int64_t total = 0;
  for (const auto& [a, b] : factors) total += a * b;
  return make_rational(total, 24);
}

std::string EtaShape::to_string() const {
  std::string out;
  for (const auto& [a, b] : factors) {
    if (!out.empty()) out += " ";
    out += std::to_string(a) + "^" + std::to_string(b);
  }
  return out;
}

QSeries eta_quotient(const EtaShape& shape, std::int64_t order) {
  QSeries unit = QSeries::constant(1, order);
  for (const auto& [a, b] : shape.factors) {
    const QSeries phi_a = scaled_phi(a, order);
    QSeries factor = pow(phi_a, static_cast<unsigned>(b < 0 ? -b : b));
    if (b < 0) factor = invert(factor.truncated(order));
    unit = unit * factor;
  }
  unit = unit.truncated(order);
  return QSeries(unit.terms(), unit.trunc(), Nome::full, shape.prefactor());
}

QSeries j_invariant(std::int64_t order) {
  const QSeries e4 = eisenstein(4, order + 1);
  return (pow(e4, 3) * invert(delta(order + 2))).truncated(order);
}

QSeries jstar(std::int64_t order) {
  return j_invariant(order) - QSeries::constant(744);
}

QSeries theta(int which, std::int64_t order) {
  std::map<std::int64_t, Rational> c;
  if (which == 2) {
    // theta_2 = q^{1/4} * 2 sum_{n >= 0} q^{n^2 + n}
    for (std::int64_t n = 0; n * n + n <= order; ++n) c[n * n + n] = 2;
    return QSeries(c, order, Nome::half, Rational(1, 4));
  }
  if (which != 3 && which != 4) throw Error("theta: index must be 2, 3 or 4");
  c[0] = 1;
  for (std::int64_t n = 1; n * n <= order; ++n) c[n * n] = (which == 4 && n % 2 == 1) ? -2 : 2;
  return QSeries(c, order, Nome::half);
}

QSeries theta_full(std::int64_t order) {
  const QSeries t = theta(3, order);
  return QSeries(t.terms(), t.trunc(), Nome::full);
}

QSeries leech_theta_from_thetas(std::int64_t order) {
  const QSeries t2 = theta(2, order);
  const QSeries t3 = theta(3, order);
  const QSeries t4 = theta(4, order);
  const QSeries sum = pow(t2, 24) + pow(t3, 24) + pow(t4, 24);
  const QSeries prod = pow(t2 * t3 * t4, 8);
  return (Rational(1, 2) * sum - Rational(69, 16) * prod).truncated(order);
}

QSeries leech_theta_from_delta(std::int64_t order) {
  const std::int64_t half = std::max<std::int64_t>(order / 2, 0);
  const QSeries d = delta(half);
  const auto sig = arith::sigma_table(11, half);
  std::map<std::int64_t, Rational> c;
  c[0] = 1;
  for (std::int64_t k = 1; k <= half; ++k) {
    c[2 * k] = Rational(65520, 691) * (Rational(sig[k]) - d.coeff(k));
  }
  return QSeries(c, order, Nome::half);
}

QSeries leech_theta(std::int64_t order) {
  QSeries a = leech_theta_from_thetas(order);
  const QSeries b = leech_theta_from_delta(order);
  if (const auto m = first_mismatch(a, b)) {
    throw Error("leech_theta: constructions disagree at q^" + std::to_string(m->exponent) + ": " +
                qmoon::to_string(m->lhs) + " vs " + qmoon::to_string(m->rhs));
  }
  return a;
}

QSeries partition_series(std::int64_t order) { return invert(euler_phi(order)); }

QSeries colored_partition_series(unsigned colors, std::int64_t order) {
  if (colors == 0) throw Error("colored_partition_series: at least one color required");
  return invert(pow(euler_phi(order), colors));
}

QSeries xi_series(std::int64_t order) {
  const QSeries phi = euler_phi(order);
  const QSeries phi2 = scaled_phi(2, order);
  const QSeries phi4 = scaled_phi(4, order);
  const QSeries one = QSeries::constant(1);
  return (invert(pow(phi, 8)) * (one - phi2 * invert(phi4))).truncated(order);
}

QSeries F_oddsigma(std::int64_t order) {
  std::map<std::int64_t, Rational> c;
  for (std::int64_t n = 1; n <= order; n += 2) c[n] = Rational(arith::sigma(1, n));
  return QSeries(c, order);
}

QSeries p_g_series(const EtaShape& shape, std::int64_t order) {
  const QSeries eg = eta_quotient(shape, order);
  // Drop q^{sum a_i b_i / 24}, including any integral part already folded
  // into the exponents, leaving the unit part prod phi(q^a)^b.
  const QSeries folded(eg.terms(), eg.trunc());
  return invert(folded.shifted(-*folded.valuation()));
}

QSeries j_g_series(const EtaShape& shape, std::int64_t order) {
  const QSeries p = p_g_series(shape, order);
  return p - QSeries::constant(p.coeff(0));
}

std::vector<std::string> catalog_names() {
  return {"E4",     "E6",     "E8",     "E10",         "E12",     "E14",
          "delta",  "eta",    "j",      "jstar",       "theta",   "theta2",
          "theta3", "theta4", "leech_theta", "F",      "partition", "p24",
          "xi"};
}

QSeries by_name(std::string_view name, std::int64_t order) {
  if (name.size() >= 2 && name[0] == 'E' && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    return eisenstein(static_cast<unsigned>(to_int(name.substr(1))), order);
  }
  if (name == "delta") return delta(order);
  if (name == "eta") return eta(order);
  if (name == "j") return j_invariant(order);
  if (name == "jstar") return jstar(order);
  if (name == "theta" || name == "theta_full") return theta_full(order);
  if (name == "theta2") return theta(2, order);
  if (name == "theta3") return theta(3, order);
  if (name == "theta4") return theta(4, order);
  if (name == "leech_theta") return leech_theta(order);
  if (name == "F" || name == "F_oddsigma") return F_oddsigma(order);
  if (name == "partition") return partition_series(order);
  if (name == "xi") return xi_series(order);
  if (name.size() >= 2 && name[0] == 'p' && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    return colored_partition_series(static_cast<unsigned>(to_int(name.substr(1))), order);
  }
  throw Error("unknown form '" + std::string(name) + "'");
}

}  // namespace qmoon::forms
