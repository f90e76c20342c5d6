#include "qmoon/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qmoon/error.hpp"

namespace qmoon {

namespace {

using Exponent = std::int64_t;

Exponent sat_add(Exponent a, Exponent b) {
  if (a >= QSeries::kExact || b >= QSeries::kExact) return QSeries::kExact;
  const Exponent sum = a + b;
  return std::min(sum, QSeries::kExact);
}

void require_same_nome(const QSeries& a, const QSeries& b, const char* op) {
  if (a.nome() != b.nome()) {
    throw ConventionError(std::string(op) + ": cannot mix " + std::string(to_string(a.nome())) +
                          " and " + std::string(to_string(b.nome())) + " nome series");
  }
}

BigInt common_denominator(std::span<const Rational> values) {
  BigInt den = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  return den;
}

std::vector<BigInt> integer_image(std::span<const Rational> values, const BigInt& den) {
  std::vector<BigInt> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), values[i].get_den_mpz_t());
    out[i] *= values[i].get_num();
  }
  return out;
}

}  // namespace

std::string_view to_string(Nome nome) { return nome == Nome::full ? "full" : "half"; }

Nome parse_nome(std::string_view text) {
  if (text == "full") return Nome::full;
  if (text == "half") return Nome::half;
  throw Error("unknown nome convention '" + std::string(text) + "' (expected full|half)");
}

namespace kernel {

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                               std::size_t n_out) {
  std::vector<Rational> out(n_out);
  if (a.empty() || b.empty() || n_out == 0) return out;
  const BigInt den_a = common_denominator(a);
  const BigInt den_b = common_denominator(b);
  const auto ia = integer_image(a, den_a);
  const auto ib = integer_image(b, den_b);
  std::vector<BigInt> acc(n_out);
  for (std::size_t i = 0; i < ia.size() && i < n_out; ++i) {
    if (ia[i] == 0) continue;
    const std::size_t stop = std::min(ib.size(), n_out - i);
    for (std::size_t j = 0; j < stop; ++j) {
      if (ib[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const BigInt den = den_a * den_b;
  for (std::size_t i = 0; i < n_out; ++i) {
    if (acc[i] == 0) continue;
    out[i] = Rational(acc[i], den);
    out[i].canonicalize();
  }
  return out;
}

std::vector<Rational> reciprocal(std::span<const Rational> u, std::size_t n_out) {
  if (u.empty() || u[0] == 0) throw Error("reciprocal: constant term is zero");
  std::vector<Rational> out(n_out);
  if (n_out == 0) return out;
  const bool unit_integral =
      std::all_of(u.begin(), u.end(), [](const Rational& x) { return is_integer(x); }) &&
      (u[0] == 1 || u[0] == -1);
  if (unit_integral) {
    // Integer recurrence: inv[n] = -u0 * sum_{k>=1} u[k] inv[n-k].
    std::vector<BigInt> iu(std::min(u.size(), n_out));
    for (std::size_t i = 0; i < iu.size(); ++i) iu[i] = u[i].get_num();
    const bool negative = iu[0] < 0;
    std::vector<BigInt> inv(n_out);
    inv[0] = iu[0];
    BigInt acc;
    for (std::size_t n = 1; n < n_out; ++n) {
      acc = 0;
      const std::size_t kmax = std::min(n, iu.size() - 1);
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (iu[k] == 0) continue;
        mpz_addmul(acc.get_mpz_t(), iu[k].get_mpz_t(), inv[n - k].get_mpz_t());
      }
      inv[n] = negative ? BigInt(acc) : BigInt(-acc);
    }
    for (std::size_t i = 0; i < n_out; ++i) out[i] = Rational(inv[i]);
    return out;
  }
  const Rational inv0 = 1 / u[0];
  out[0] = inv0;
  Rational acc;
  for (std::size_t n = 1; n < n_out; ++n) {
    acc = 0;
    const std::size_t kmax = std::min(n, u.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (u[k] == 0) continue;
      acc += u[k] * out[n - k];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

}  // namespace kernel

QSeries::QSeries(std::int64_t trunc, Nome nome, std::string var)
    : trunc_(std::min(trunc, kExact)), nome_(nome), var_(std::move(var)) {}

QSeries::QSeries(std::int64_t low, std::vector<Rational> coeffs, std::int64_t trunc, Nome nome,
                 Rational prefactor, std::string var)
    : low_(low),
      coeffs_(std::move(coeffs)),
      trunc_(std::min(trunc, kExact)),
      nome_(nome),
      prefactor_(std::move(prefactor)),
      var_(std::move(var)) {
  normalize();
}

QSeries::QSeries(const std::map<std::int64_t, Rational>& coeffs, std::int64_t trunc, Nome nome,
                 Rational prefactor, std::string var)
    : trunc_(std::min(trunc, kExact)),
      nome_(nome),
      prefactor_(std::move(prefactor)),
      var_(std::move(var)) {
  if (!coeffs.empty()) {
    low_ = coeffs.begin()->first;
    const std::int64_t high = coeffs.rbegin()->first;
    coeffs_.resize(static_cast<std::size_t>(high - low_ + 1));
    for (const auto& [e, c] : coeffs) coeffs_[static_cast<std::size_t>(e - low_)] = c;
  }
  normalize();
}

QSeries QSeries::monomial(Rational coeff, std::int64_t exponent, std::int64_t trunc, Nome nome) {
  return QSeries(exponent, {std::move(coeff)}, trunc, nome);
}

QSeries QSeries::constant(Rational value, std::int64_t trunc, Nome nome) {
  return QSeries(0, {std::move(value)}, trunc, nome);
}

void QSeries::normalize() {
  const Rational scaled = prefactor_ * 24;
  if (!is_integer(scaled)) {
    throw Error("prefactor exponent " + to_string(prefactor_) +
                " must have a denominator dividing 24");
  }
  const BigInt whole = floor(prefactor_);
  if (whole != 0) {
    const std::int64_t shift = whole.get_si();
    prefactor_ -= whole;
    low_ += shift;
    trunc_ = trunc_ >= kExact ? kExact : trunc_ + shift;
  }
  // Drop anything beyond the truncation order.
  if (!coeffs_.empty() && low_ + static_cast<std::int64_t>(coeffs_.size()) - 1 > trunc_) {
    const std::int64_t keep = std::max<std::int64_t>(0, trunc_ - low_ + 1);
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
}

Rational QSeries::coeff(std::int64_t exponent) const {
  if (exponent > trunc_) {
    throw Error("coefficient at q^" + std::to_string(exponent) +
                " is beyond the truncation order " + std::to_string(trunc_));
  }
  if (exponent < low_ || exponent >= low_ + static_cast<std::int64_t>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::optional<std::int64_t> QSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return low_;
}

std::int64_t QSeries::top_exponent() const {
  return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::map<std::int64_t, Rational> QSeries::terms() const {
  std::map<std::int64_t, Rational> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

bool QSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return is_integer(c); });
}

QSeries QSeries::truncated(std::int64_t order) const {
  if (order >= trunc_) return *this;
  QSeries out = *this;
  out.trunc_ = order;
  out.normalize();
  return out;
}

QSeries QSeries::shifted(std::int64_t shift) const {
  QSeries out = *this;
  if (!out.coeffs_.empty()) out.low_ += shift;
  out.trunc_ = sat_add(out.trunc_, shift);
  return out;
}

QSeries QSeries::with_var(std::string var) const {
  QSeries out = *this;
  out.var_ = std::move(var);
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_same_nome(a, b, "add");
  if (a.prefactor_ != b.prefactor_) {
    throw ConventionError("add: prefactor exponents differ (" + to_string(a.prefactor_) +
                          " vs " + to_string(b.prefactor_) + ")");
  }
  const std::int64_t trunc = std::min(a.trunc_, b.trunc_);
  if (a.is_zero()) return b.truncated(trunc);
  if (b.is_zero()) return a.truncated(trunc);
  const std::int64_t low = std::min(a.low_, b.low_);
  const std::int64_t high = std::min(trunc, std::max(a.top_exponent(), b.top_exponent()));
  if (high < low) return QSeries(trunc, a.nome_, a.var_);
  std::vector<Rational> c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::int64_t e = a.low_ + static_cast<std::int64_t>(i);
    if (e <= high) c[static_cast<std::size_t>(e - low)] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    const std::int64_t e = b.low_ + static_cast<std::int64_t>(i);
    if (e <= high) c[static_cast<std::size_t>(e - low)] += b.coeffs_[i];
  }
  return QSeries(low, std::move(c), trunc, a.nome_, a.prefactor_, a.var_);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& scalar, const QSeries& a) {
  QSeries out = a;
  for (auto& c : out.coeffs_) c *= scalar;
  out.normalize();
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_nome(a, b, "mul");
  const std::int64_t va = a.is_zero() ? sat_add(a.trunc_, 1) : a.low_;
  const std::int64_t vb = b.is_zero() ? sat_add(b.trunc_, 1) : b.low_;
  const std::int64_t trunc = std::min(sat_add(a.trunc_, vb), sat_add(b.trunc_, va));
  const Rational prefactor = a.prefactor_ + b.prefactor_;
  if (a.is_zero() || b.is_zero()) {
    return QSeries(0, {}, trunc, a.nome_, prefactor, a.var_);
  }
  const std::int64_t low = a.low_ + b.low_;
  std::size_t n_out = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (trunc < QSeries::kExact) {
    n_out = std::min<std::size_t>(n_out, static_cast<std::size_t>(std::max<std::int64_t>(0, trunc - low + 1)));
  }
  auto c = kernel::convolve(a.coeffs_, b.coeffs_, n_out);
  return QSeries(low, std::move(c), trunc, a.nome_, prefactor, a.var_);
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.nome_ == b.nome_ && a.prefactor_ == b.prefactor_ && a.trunc_ == b.trunc_ &&
         a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::int64_t common_trunc(const QSeries& a, const QSeries& b) {
  return std::min(a.trunc(), b.trunc());
}

std::optional<CoeffMismatch> first_mismatch(const QSeries& a, const QSeries& b) {
  require_same_nome(a, b, "compare");
  if (a.prefactor() != b.prefactor()) {
    throw ConventionError("compare: prefactor exponents differ (" + to_string(a.prefactor()) +
                          " vs " + to_string(b.prefactor()) + ")");
  }
  const std::int64_t trunc = common_trunc(a, b);
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  std::int64_t low = std::min(a.is_zero() ? b.storage_low() : a.storage_low(),
                              b.is_zero() ? a.storage_low() : b.storage_low());
  std::int64_t high = std::max(a.is_zero() ? low : a.top_exponent(),
                               b.is_zero() ? low : b.top_exponent());
  high = std::min(high, trunc);
  for (std::int64_t e = low; e <= high; ++e) {
    Rational x = a.coeff(e);
    Rational y = b.coeff(e);
    if (x != y) return CoeffMismatch{e, std::move(x), std::move(y)};
  }
  return std::nullopt;
}

QSeries invert(const QSeries& a) {
  if (a.is_zero()) throw Error("invert: series is zero to its truncation order");
  if (a.is_exact()) throw Error("invert: truncate the polynomial before inverting");
  const std::int64_t v = *a.valuation();
  const std::int64_t rel = a.trunc() - v;  // known unit terms: rel + 1
  const auto n = static_cast<std::size_t>(rel + 1);
  std::vector<Rational> unit(a.storage().begin(), a.storage().end());
  if (unit.size() > n) unit.resize(n);
  auto inv = kernel::reciprocal(unit, n);
  return QSeries(-v, std::move(inv), rel - v, a.nome(), -a.prefactor(), a.var());
}

QSeries pow(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::constant(1, QSeries::kExact, a.nome()).with_var(a.var());
  QSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

QSeries scale_var(const QSeries& a, std::int64_t k) {
  if (k <= 0) throw Error("scale_var: factor must be positive");
  std::map<std::int64_t, Rational> scaled;
  for (const auto& [e, c] : a.terms()) scaled.emplace(e * k, c);
  const std::int64_t trunc = a.is_exact() ? QSeries::kExact : a.trunc() * k;
  return QSeries(scaled, trunc, a.nome(), a.prefactor() * k, a.var());
}

QSeries full_to_half(const QSeries& a) {
  if (a.nome() != Nome::full) throw ConventionError("full_to_half: series is not in the full nome");
  const QSeries scaled = scale_var(a, 2);
  return QSeries(scaled.terms(), scaled.trunc(), Nome::half, scaled.prefactor(), a.var());
}

QSeries negate_var(const QSeries& a) {
  if (a.prefactor() != 0) throw Error("negate_var: requires a zero prefactor");
  std::map<std::int64_t, Rational> out;
  for (const auto& [e, c] : a.terms()) out.emplace(e, (e % 2 == 0) ? c : Rational(-c));
  return QSeries(out, a.trunc(), a.nome(), 0, a.var());
}

QSeries exp_series(const QSeries& a) {
  if (a.prefactor() != 0) throw Error("exp_series: prefactor must be zero");
  if (a.is_exact()) throw Error("exp_series: truncate the input first");
  if (!a.is_zero() && *a.valuation() <= 0) {
    throw Error("exp_series: constant and negative-exponent terms must vanish");
  }
  const std::int64_t order = a.trunc();
  if (order < 0) return QSeries(order, a.nome(), a.var());
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<Rational> g(n);  // k * a_k
  for (const auto& [e, c] : a.terms()) g[static_cast<std::size_t>(e)] = c * e;
  std::vector<Rational> f(n);
  f[0] = 1;
  Rational acc;
  for (std::size_t m = 1; m < n; ++m) {
    acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (g[k] == 0) continue;
      acc += g[k] * f[m - k];
    }
    f[m] = acc / static_cast<long>(m);
  }
  return QSeries(0, std::move(f), order, a.nome(), 0, a.var());
}

QSeries log_series(const QSeries& a) {
  if (a.prefactor() != 0) throw Error("log_series: prefactor must be zero");
  if (a.is_exact()) throw Error("log_series: truncate the input first");
  if (a.is_zero() || *a.valuation() != 0 || a.coeff(0) != 1) {
    throw Error("log_series: constant term must be 1 with no negative exponents");
  }
  const std::int64_t order = a.trunc();
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<Rational> u(n);
  for (const auto& [e, c] : a.terms()) u[static_cast<std::size_t>(e)] = c;
  // m L_m = m u_m - sum_{k=1}^{m-1} k L_k u_{m-k}
  std::vector<Rational> log(n);
  Rational acc;
  for (std::size_t m = 1; m < n; ++m) {
    acc = u[m] * static_cast<long>(m);
    for (std::size_t k = 1; k < m; ++k) {
      if (log[k] == 0 || u[m - k] == 0) continue;
      acc -= log[k] * u[m - k] * static_cast<long>(k);
    }
    log[m] = acc / static_cast<long>(m);
  }
  return QSeries(0, std::move(log), order, a.nome(), 0, a.var());
}

std::string format_series(const QSeries& a) {
  std::ostringstream out;
  const std::string& v = a.var();
  const bool has_prefactor = a.prefactor() != 0;
  if (has_prefactor) out << v << "^(" << to_string(a.prefactor()) << ")*(";
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      out << to_string(mag);
      continue;
    }
    if (!unit) out << to_string(mag) << "*";
    out << v;
    if (e != 1) out << "^" << e;
  }
  if (!a.is_exact()) {
    out << (first ? "" : " + ") << "O(" << v << "^" << a.trunc() + 1 << ")";
  } else if (first) {
    out << "0";
  }
  if (has_prefactor) out << ")";
  return out.str();
}

}  // namespace qmoon
