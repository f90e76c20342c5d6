#include "qmoon/monster.hpp"

#include "qmoon/arith.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"

namespace qmoon::monster {

namespace {

const std::pair<std::string, std::string> kPQ{"p", "q"};

// Working window: p is exact through cap_m + 1 (the result is multiplied by
// p^{-1}); q-degrees can fall by at most one per unit of p-degree, so q is
// carried cap_m + 1 beyond the reported cap.
BiWindow working_window(std::int64_t cap_m, std::int64_t cap_n) {
  return BiWindow{cap_m + 1, std::nullopt, cap_n + cap_m + 1};
}

BiWindow report_window(std::int64_t cap_m, std::int64_t cap_n) {
  return BiWindow{cap_m, std::nullopt, cap_n};
}

void require_caps(std::int64_t cap_m, std::int64_t cap_n) {
  if (cap_m < 0 || cap_n < 0) throw Error("moonshine caps must be nonnegative");
}

}  // namespace

BigInt MoonshineCoeffs::operator()(std::int64_t n) const {
  if (n < -1) return 0;
  if (n > max_n) throw Error("moonshine coefficient c(" + std::to_string(n) + ") beyond computed range");
  return c.at(n);
}

MoonshineCoeffs moonshine_c(std::int64_t max_n) {
  MoonshineCoeffs out;
  out.max_n = std::max<std::int64_t>(max_n, -1);
  const QSeries js = forms::jstar(std::max<std::int64_t>(max_n, 0));
  for (std::int64_t n = -1; n <= out.max_n; ++n) {
    const Rational v = js.coeff(n);
    if (!is_integer(v)) throw Error("moonshine_c: non-integral coefficient");
    out.c[n] = v.get_num();
  }
  return out;
}

BiSeries denominator_sum(std::int64_t cap_m, std::int64_t cap_n) {
  require_caps(cap_m, cap_n);
  const auto c = moonshine_c(std::max(cap_m, cap_n));
  std::map<BiSeries::Key, Rational> t;
  for (std::int64_t m = -1; m <= cap_m; ++m) t[{m, 0}] += Rational(c(m));
  for (std::int64_t n = -1; n <= cap_n; ++n) t[{0, n}] -= Rational(c(n));
  return BiSeries(std::move(t), report_window(cap_m, cap_n), kPQ);
}

namespace {

// prod (1 - p^m q^n)^{c(mn)} over the working window, without the p^{-1}.
BiSeries working_product(const BiWindow& w) {
  const auto c = moonshine_c(w.max_first * *w.max_second);
  BiSeries acc = BiSeries::constant(1, w, kPQ);
  for (std::int64_t m = 1; m <= w.max_first; ++m) {
    for (std::int64_t n = -1; n <= *w.max_second; ++n) {
      const BigInt e = c(m * n);
      if (e == 0) continue;
      acc = acc * binomial_power(-1, m, n, e, w, kPQ);
    }
  }
  return acc;
}

}  // namespace

BiSeries denominator_product(std::int64_t cap_m, std::int64_t cap_n) {
  require_caps(cap_m, cap_n);
  return working_product(working_window(cap_m, cap_n))
      .shifted(-1, 0)
      .restricted(report_window(cap_m, cap_n));
}

namespace {

BiSeries swapped(const BiSeries& a) {
  std::map<BiSeries::Key, Rational> t;
  for (const auto& [k, v] : a.terms()) t[{k.second, k.first}] = v;
  return BiSeries(std::move(t), BiWindow{a.window().max_first, std::nullopt, a.window().max_first},
                  a.vars());
}

void check_mixed_vanish(VerifyReport& r, const BiSeries& product) {
  for (const auto& [k, v] : product.terms()) {
    ++r.compared;
    if (k.first >= 1 && k.second >= 1) {
      r.fail({"mixed monomials vanish", format_monomial(k, product.vars()), v, Rational(0)});
      return;
    }
  }
}

// -sum_{i > 0} sum_{m > 0, n >= -1} c(mn) p^{mi} q^{ni} / i within w.
BiSeries replication_exponent(const BiWindow& w) {
  const auto c = moonshine_c(w.max_first * *w.max_second);
  std::map<BiSeries::Key, Rational> t;
  for (std::int64_t m = 1; m <= w.max_first; ++m) {
    for (std::int64_t n = -1; n <= *w.max_second; ++n) {
      const BigInt e = c(m * n);
      if (e == 0) continue;
      for (std::int64_t i = 1; m * i <= w.max_first; ++i) {
        if (!w.contains(m * i, n * i)) continue;
        t[{m * i, n * i}] -= make_rational(e, i);
      }
    }
  }
  return BiSeries(std::move(t), w, kPQ);
}

}  // namespace

VerifyReport denominator_check(std::int64_t cap_m, std::int64_t cap_n) {
  VerifyReport r;
  r.name = "moonshine_denominator";
  r.order = {cap_m, cap_n};
  const BiSeries prod = denominator_product(cap_m, cap_n);
  r.compare("product = sum", prod, denominator_sum(cap_m, cap_n));
  check_mixed_vanish(r, prod);
  const std::int64_t cap = std::min(cap_m, cap_n);
  const BiWindow square{cap, std::nullopt, cap};
  const BiSeries sq = prod.restricted(square);
  r.compare("p <-> q antisymmetry", swapped(sq).restricted(square), -sq);
  return r;
}

VerifyReport replication_check(std::int64_t cap) {
  require_caps(cap, cap);
  VerifyReport r;
  r.name = "moonshine_replication";
  r.order = {cap, cap};
  const BiWindow w = working_window(cap, cap);
  const BiSeries L = replication_exponent(w);
  const BiSeries lhs = exp_series(L).shifted(-1, 0).restricted(report_window(cap, cap));
  r.compare("exp form = sum", lhs, denominator_sum(cap, cap));
  // The logarithm of the product form must equal the exponent term by term.
  const BiWindow exact{cap + 1, std::nullopt, cap};
  r.compare("log(product form) = exponent", log_series(working_product(w)).restricted(exact),
            L.restricted(exact));
  r.notes.push_back("exponent summed as c(mn) p^{mi} q^{ni} / i");
  return r;
}

const BigInt& CharTable::trace(std::int64_t d, std::int64_t k) const {
  const auto it = traces.find({d, k});
  if (it == traces.end()) {
    throw Error("character table lacks tr(g^" + std::to_string(d) + " | V_" + std::to_string(k) + ")");
  }
  return it->second;
}

CharTable CharTable::identity(const MoonshineCoeffs& c) {
  CharTable t;
  t.order = 1;
  for (const auto& [k, v] : c.c) t.traces[{1, k}] = v;
  return t;
}

BigInt mult_g(std::int64_t m, std::int64_t n, const CharTable& table) {
  if (table.order < 1) throw Error("mult_g: group element order must be positive");
  const std::int64_t g = arith::gcd(arith::gcd(m, n), table.order);
  const std::int64_t k = m * n;
  Rational total = 0;
  if (g != 0) {
    for (std::int64_t ds : arith::divisors(g)) {
      for (std::int64_t d : arith::divisors(ds)) {
        const std::int64_t s = ds / d;
        const int mu = arith::moebius(s);
        if (mu == 0) continue;
        total += make_rational(mu, ds) * Rational(table.trace(d, k));
      }
    }
  }
  if (!is_integer(total)) {
    throw Error("mult_g(" + std::to_string(m) + "," + std::to_string(n) + ") = " + to_string(total) +
                " is not an integer; inconsistent character table");
  }
  return total.get_num();
}

}  // namespace qmoon::monster
