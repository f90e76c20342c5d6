#include "qmoon/biseries.hpp"

#include <algorithm>

#include "qmoon/error.hpp"

namespace qmoon {

namespace {

std::optional<std::int64_t> tighter_min(std::optional<std::int64_t> a,
                                        std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

std::optional<std::int64_t> tighter_max(std::optional<std::int64_t> a,
                                        std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

bool BiWindow::contains(std::int64_t i, std::int64_t j) const {
  if (i > max_first) return false;
  if (min_second && j < *min_second) return false;
  if (max_second && j > *max_second) return false;
  return true;
}

BiWindow intersect(const BiWindow& a, const BiWindow& b) {
  return BiWindow{std::min(a.max_first, b.max_first), tighter_min(a.min_second, b.min_second),
                  tighter_max(a.max_second, b.max_second)};
}

BiSeries::BiSeries(BiWindow window, std::pair<std::string, std::string> vars)
    : window_(window), vars_(std::move(vars)) {}

BiSeries::BiSeries(std::map<Key, Rational> terms, BiWindow window,
                   std::pair<std::string, std::string> vars)
    : terms_(std::move(terms)), window_(window), vars_(std::move(vars)) {
  prune();
}

BiSeries BiSeries::constant(Rational value, BiWindow window,
                            std::pair<std::string, std::string> vars) {
  return monomial(std::move(value), 0, 0, window, std::move(vars));
}

BiSeries BiSeries::monomial(Rational coeff, std::int64_t i, std::int64_t j, BiWindow window,
                            std::pair<std::string, std::string> vars) {
  std::map<Key, Rational> t;
  t.emplace(Key{i, j}, std::move(coeff));
  return BiSeries(std::move(t), window, std::move(vars));
}

void BiSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || !window_.contains(it->first.first, it->first.second)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Rational BiSeries::coeff(std::int64_t i, std::int64_t j) const {
  if (!window_.contains(i, j)) {
    throw Error("coefficient at " + format_monomial({i, j}, vars_) + " lies outside the window");
  }
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiSeries BiSeries::restricted(const BiWindow& window) const {
  return BiSeries(terms_, intersect(window_, window), vars_);
}

BiSeries BiSeries::shifted(std::int64_t di, std::int64_t dj) const {
  std::map<Key, Rational> out;
  for (const auto& [k, c] : terms_) out.emplace(Key{k.first + di, k.second + dj}, c);
  BiWindow w = window_;
  w.max_first += di;
  if (w.min_second) *w.min_second += dj;
  if (w.max_second) *w.max_second += dj;
  return BiSeries(std::move(out), w, vars_);
}

BiSeries BiSeries::operator-() const {
  BiSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  std::map<BiSeries::Key, Rational> out = a.terms_;
  for (const auto& [k, c] : b.terms_) out[k] += c;
  return BiSeries(std::move(out), intersect(a.window_, b.window_), a.vars_);
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const Rational& scalar, const BiSeries& a) {
  BiSeries out = a;
  for (auto& [k, c] : out.terms_) c *= scalar;
  out.prune();
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const BiWindow w = intersect(a.window_, b.window_);
  std::map<BiSeries::Key, Rational> out;
  // Smallest first exponent in b bounds which terms of a can contribute.
  if (a.terms_.empty() || b.terms_.empty()) return BiSeries(std::move(out), w, a.vars_);
  const std::int64_t b_min_first = b.terms_.begin()->first.first;
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    if (ka.first + b_min_first > w.max_first) break;
    for (const auto& [kb, cb] : b.terms_) {
      const std::int64_t i = ka.first + kb.first;
      if (i > w.max_first) break;
      const std::int64_t j = ka.second + kb.second;
      if (!w.contains(i, j)) continue;
      prod = ca * cb;
      out[{i, j}] += prod;
    }
  }
  return BiSeries(std::move(out), w, a.vars_);
}

BiSeries binomial_power(int sign, std::int64_t a, std::int64_t b, const BigInt& e,
                        const BiWindow& window, std::pair<std::string, std::string> vars) {
  if (sign != 1 && sign != -1) throw Error("binomial_power: sign must be +1 or -1");
  if (a < 0) throw Error("binomial_power: first exponent must be nonnegative");
  if (a == 0 && b == 0) throw Error("binomial_power: degenerate monomial");
  std::map<BiSeries::Key, Rational> out;
  out.emplace(BiSeries::Key{0, 0}, Rational(1));
  if (e == 0) return BiSeries(std::move(out), window, std::move(vars));
  // C(e, k) sign^k x^{ak} y^{bk}; stops when the monomial leaves the window
  // for good (first exponent too large, or second exponent past a bound it
  // is moving away from), or when e >= 0 and k > e.
  BigInt coeff = 1;  // C(e, k)
  BigInt top = e;    // e - k + 1 at step k
  for (unsigned long k = 1;; ++k) {
    if (e > 0 && BigInt(k) > e) break;
    const std::int64_t i = a * static_cast<std::int64_t>(k);
    const std::int64_t j = b * static_cast<std::int64_t>(k);
    if (i > window.max_first) break;
    if (b > 0 && window.max_second && j > *window.max_second) break;
    if (b < 0 && window.min_second && j < *window.min_second) break;
    if (a == 0 && ((b > 0 && !window.max_second) || (b < 0 && !window.min_second))) {
      if (e < 0) throw Error("binomial_power: infinite expansion in an unbounded window");
    }
    coeff *= top;
    top -= 1;
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
    Rational c(coeff);
    if (sign < 0 && (k & 1UL)) c = -c;
    if (window.contains(i, j)) out.emplace(BiSeries::Key{i, j}, std::move(c));
  }
  return BiSeries(std::move(out), window, std::move(vars));
}

namespace {

void require_nilpotent(const BiSeries& x, const char* op) {
  for (const auto& [k, c] : x.terms()) {
    if (k.first < 1) {
      throw Error(std::string(op) + ": term " + format_monomial(k, x.vars()) +
                  " has first exponent < 1");
    }
  }
}

}  // namespace

BiSeries exp_series(const BiSeries& a) {
  require_nilpotent(a, "exp_series");
  const BiWindow& w = a.window();
  BiSeries result = BiSeries::constant(1, w, a.vars());
  BiSeries power = result;
  for (long k = 1; k <= std::max<std::int64_t>(w.max_first, 0); ++k) {
    power = Rational(1, k) * (power * a);
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

BiSeries log_series(const BiSeries& a) {
  if (a.coeff(0, 0) != 1) throw Error("log_series: constant term must be 1");
  const BiSeries y = a - BiSeries::constant(1, a.window(), a.vars());
  require_nilpotent(y, "log_series");
  BiSeries result(a.window(), a.vars());
  BiSeries power = BiSeries::constant(1, a.window(), a.vars());
  for (long k = 1; k <= std::max<std::int64_t>(a.window().max_first, 0); ++k) {
    power = power * y;
    if (power.is_zero()) break;
    const Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
    result = result + c * power;
  }
  return result;
}

QSeries specialize(const BiSeries& a, std::int64_t wi, std::int64_t wj, int sign_second,
                   std::int64_t trunc, Nome nome) {
  std::map<std::int64_t, Rational> out;
  for (const auto& [k, c] : a.terms()) {
    const std::int64_t e = wi * k.first + wj * k.second;
    if (e > trunc) continue;
    const bool flip = sign_second < 0 && (k.second % 2 != 0);
    out[e] += flip ? Rational(-c) : c;
  }
  return QSeries(out, trunc, nome);
}

std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b) {
  const BiWindow w = intersect(a.window(), b.window());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  // Both maps are ordered by (i, j); merge-walk them.
  while (ia != ea || ib != eb) {
    BiSeries::Key key;
    Rational x = 0, y = 0;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      key = ia->first;
      x = ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      key = ib->first;
      y = ib->second;
      ++ib;
    } else {
      key = ia->first;
      x = ia->second;
      y = ib->second;
      ++ia;
      ++ib;
    }
    if (!w.contains(key.first, key.second)) continue;
    if (x != y) return BiMismatch{key, std::move(x), std::move(y)};
  }
  return std::nullopt;
}

std::string format_monomial(const BiSeries::Key& key,
                            const std::pair<std::string, std::string>& vars) {
  std::string out;
  auto part = [&](const std::string& v, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part(vars.first, key.first);
  part(vars.second, key.second);
  return out.empty() ? "1" : out;
}

}  // namespace qmoon
