#include "qmoon/identities.hpp"

#include <functional>
#include <map>

#include "qmoon/arith.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"
#include "qmoon/exponents.hpp"

namespace qmoon::identities {

namespace {

using Vars = std::pair<std::string, std::string>;

const Vars kQZ{"q", "z"};
const Vars kQZeta{"q", "zeta"};

// Only q is truncated: every factor has positive q-degree or is a
// polynomial, so each q-power carries finitely many z-powers.
BiWindow window_for(std::int64_t order) { return BiWindow{order, std::nullopt, std::nullopt}; }

// One factor (1 + sign q^a y^b)^e of a bivariate product.
struct Factor {
  int sign;
  std::int64_t a;
  std::int64_t b;
  long e;
};

BiSeries multiply_factors(const std::vector<Factor>& factors, const BiWindow& w, const Vars& vars) {
  BiSeries acc = BiSeries::constant(1, w, vars);
  for (const auto& f : factors) {
    if (f.a > w.max_first) continue;
    acc = acc * binomial_power(f.sign, f.a, f.b, BigInt(f.e), w, vars);
  }
  return acc;
}

// prod (1 + sign q^a)^e on an integer coefficient vector, one linear factor
// at a time.
struct UniFactor {
  int sign;
  std::int64_t a;
  long e;
};

QSeries multiply_unifactors(const std::vector<UniFactor>& factors, std::int64_t order, Nome nome,
                            Rational prefactor = 0, BigInt scale = 1) {
  const auto n = static_cast<std::size_t>(order + 1);
  std::vector<BigInt> c(n);
  c[0] = scale;
  for (const auto& f : factors) {
    const auto a = static_cast<std::size_t>(f.a);
    for (long rep = 0; rep < (f.e < 0 ? -f.e : f.e); ++rep) {
      if (f.a == 0) {
        if (f.e < 0) throw Error("cannot divide by a constant factor 1 + sign");
        for (auto& x : c) x *= (1 + f.sign);
        continue;
      }
      if (a >= n) break;
      if (f.e > 0) {
        for (std::size_t i = n - 1; i >= a; --i) {
          if (f.sign > 0) c[i] += c[i - a]; else c[i] -= c[i - a];
        }
      } else {
        for (std::size_t i = a; i < n; ++i) {
          if (f.sign > 0) c[i] -= c[i - a]; else c[i] += c[i - a];
        }
      }
    }
  }
  return QSeries(0, std::vector<Rational>(c.begin(), c.end()), order, nome, std::move(prefactor));
}

// sum_{n >= 0} coefficient * q^{qexp} * y^{yexp} over the terms emitted by gen.
template <class Gen>
BiSeries sum_side(const BiWindow& w, const Vars& vars, Gen gen) {
  std::map<BiSeries::Key, Rational> terms;
  gen([&](std::int64_t qe, std::int64_t ye, const Rational& c) {
    if (w.contains(qe, ye)) terms[{qe, ye}] += c;
  });
  return BiSeries(std::move(terms), w, vars);
}

// Range of n in Z with f(n) <= bound for a convex quadratic f.
template <class F>
void for_each_n(std::int64_t bound, F f, const std::function<void(std::int64_t)>& body) {
  for (std::int64_t n = 0; f(n) <= bound; ++n) body(n);
  for (std::int64_t n = -1; f(n) <= bound; --n) body(n);
}

Rational alt(std::int64_t n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

VerifyReport bivariate_report(std::string name, std::int64_t order) {
  VerifyReport r;
  r.name = std::move(name);
  r.order = {order};
  r.notes.push_back("second variable untruncated; exact at every q-power <= " + std::to_string(order));
  return r;
}

VerifyReport univariate_report(std::string name, std::int64_t order) {
  VerifyReport r;
  r.name = std::move(name);
  r.order = {order};
  return r;
}

// 1 / ((1-q)(1-q^2)...(1-q^k)) for k = 0..kmax, each known through q^order.
std::vector<QSeries> inverse_pochhammers(std::int64_t kmax, std::int64_t order) {
  std::vector<QSeries> out;
  QSeries cur = QSeries::constant(1, order);
  out.push_back(cur);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::map<std::int64_t, Rational> geo;
    for (std::int64_t e = 0; e <= order; e += k) geo[e] = 1;
    cur = (cur * QSeries(geo, order)).truncated(order);
    out.push_back(cur);
  }
  return out;
}

VerifyReport verify_euler1(std::int64_t N) {
  auto r = bivariate_report("euler1", N);
  const BiWindow w = window_for(N);
  std::int64_t kmax = 0;
  while ((kmax + 1) * (kmax + 2) / 2 <= N) ++kmax;
  const auto inv = inverse_pochhammers(kmax, N);
  const BiSeries lhs = sum_side(w, kQZ, [&](auto emit) {
    for (std::int64_t n = 0; n <= kmax; ++n) {
      const std::int64_t shift = n * (n + 1) / 2;
      for (const auto& [e, c] : inv[n].terms()) emit(e + shift, n, alt(n) * c);
    }
  });
  std::vector<Factor> f;
  for (std::int64_t n = 1; n <= N; ++n) f.push_back({-1, n, 1, 1});
  r.compare("", lhs, multiply_factors(f, w, kQZ));
  return r;
}

VerifyReport verify_euler2(std::int64_t N) {
  VerifyReport r;
  r.name = "euler2";
  r.order = {N, N};
  // All z-degrees are nonnegative, so capping z at N loses nothing below it.
  const BiWindow w{N, std::nullopt, N};
  const auto inv = inverse_pochhammers(N, N);
  const BiSeries lhs = sum_side(w, kQZ, [&](auto emit) {
    for (std::int64_t n = 0; n <= N; ++n) {
      for (const auto& [e, c] : inv[n].terms()) emit(e, n, c);
    }
  });
  // The product starts at n = 0; with n > 0 the z^k q^0 terms of the sum
  // side have no counterpart.
  std::vector<Factor> f;
  for (std::int64_t n = 0; n <= N; ++n) f.push_back({-1, n, 1, -1});
  r.compare("", lhs, multiply_factors(f, w, kQZ));
  r.notes.push_back("product taken over n >= 0, i.e. including the factor (1 - z)^-1");
  std::vector<Factor> printed;
  for (std::int64_t n = 1; n <= N; ++n) printed.push_back({-1, n, 1, -1});
  const auto m = first_mismatch(lhs, multiply_factors(printed, w, kQZ));
  if (m) {
    r.notes.push_back("product over n > 0 alone differs first at " +
                      format_monomial(m->monomial, kQZ) + " (" + to_string(m->lhs) + " vs " +
                      to_string(m->rhs) + ")");
  }
  return r;
}

VerifyReport verify_euler3(std::int64_t N) {
  auto r = univariate_report("euler3", N);
  // sum (-1)^n q^{3(n + 1/6)^2 / 2} = q^{1/24} sum (-1)^n q^{(3n^2 + n)/2}
  std::map<std::int64_t, Rational> c;
  for_each_n(N, [](std::int64_t n) { return (3 * n * n + n) / 2; },
             [&](std::int64_t n) { c[(3 * n * n + n) / 2] += alt(n); });
  const QSeries lhs(c, N, Nome::full, Rational(1, 24));
  ExponentTable t{Rational(-1, 24), std::vector<Rational>(static_cast<std::size_t>(N), Rational(1))};
  r.compare("", lhs, product_from_exponents(t));
  return r;
}

VerifyReport verify_gauss(std::int64_t N) {
  auto r = univariate_report("gauss", N);
  std::map<std::int64_t, Rational> c;
  for_each_n(N, [](std::int64_t n) { return n * n; }, [&](std::int64_t n) { c[n * n] += 1; });
  const QSeries lhs(c, N);
  std::vector<UniFactor> f;
  for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
    f.push_back({-1, 2 * n, 1});
    f.push_back({+1, 2 * n - 1, 2});
  }
  r.compare("", lhs, multiply_unifactors(f, N, Nome::full));
  r.notes.push_back("product read as prod (1 - q^{2n})(1 + q^{2n-1})^2");
  return r;
}

VerifyReport verify_triple(std::int64_t N) {
  auto r = bivariate_report("triple", N);
  r.compare("", triple_sum_side(N), triple_product_side(N));
  return r;
}

BiSeries quintuple_w1_sum(std::int64_t N, const BiWindow& w) {
  return sum_side(w, kQZ, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return (3 * n * n + n) / 2; }, [&](std::int64_t n) {
      const std::int64_t e = (3 * n * n + n) / 2;
      emit(e, 3 * n, Rational(1));
      emit(e, -3 * n - 1, Rational(-1));
    });
  });
}

VerifyReport verify_quintuple_w1(std::int64_t N) {
  auto r = bivariate_report("quintuple_w1", N);
  const BiWindow w = window_for(N);
  std::vector<Factor> f;
  for (std::int64_t n = 1; n - 1 <= N; ++n) {
    f.push_back({-1, n, 0, 1});
    f.push_back({-1, n, 1, 1});
    f.push_back({-1, n - 1, -1, 1});
    f.push_back({-1, 2 * n - 1, 2, 1});
    f.push_back({-1, 2 * n - 1, -2, 1});
  }
  r.compare("", quintuple_w1_sum(N, w), multiply_factors(f, w, kQZ));
  return r;
}

std::vector<Factor> quintuple_w2_factors(std::int64_t N, long second_inverse_exponent) {
  std::vector<Factor> f;
  for (std::int64_t n = 1; 2 * n - 2 <= N; ++n) {
    f.push_back({-1, 2 * n, 0, 1});
    f.push_back({-1, 2 * n - 2, 2, 1});
    f.push_back({-1, 2 * n, -2, 1});
    f.push_back({+1, 2 * n - 1, 1, -1});
    f.push_back({+1, 2 * n - 1, -1, second_inverse_exponent});
  }
  return f;
}

VerifyReport verify_quintuple_w2(std::int64_t N) {
  auto r = bivariate_report("quintuple_w2", N);
  const BiWindow w = window_for(N);
  const BiSeries lhs = sum_side(w, kQZ, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * (3 * n + 2); }, [&](std::int64_t n) {
      const std::int64_t e = n * (3 * n + 2);
      emit(e, -3 * n, Rational(1));
      emit(e, 3 * n + 2, Rational(-1));
    });
  });
  r.compare("as printed", lhs, multiply_factors(quintuple_w2_factors(N, 1), w, kQZ));
  r.notes.push_back("evaluated exactly as printed, with the factor (1 + q^{2n-1} z^-1) to the power +1");
  const auto variant = first_mismatch(lhs, multiply_factors(quintuple_w2_factors(N, -1), w, kQZ));
  if (variant) {
    r.notes.push_back("variant with (1 + q^{2n-1} z^-1)^-1 also differs, first at " +
                      format_monomial(variant->monomial, kQZ));
  } else {
    r.notes.push_back("variant with (1 + q^{2n-1} z^-1)^-1 agrees to this order");
  }
  return r;
}

VerifyReport verify_eisen_relations(std::int64_t N) {
  auto r = univariate_report("eisen_relations", N);
  const QSeries e4 = forms::eisenstein(4, N);
  const QSeries e6 = forms::eisenstein(6, N);
  r.compare("E4^2 = E8", e4 * e4, forms::eisenstein(8, N));
  r.compare("E4 E6 = E10", e4 * e6, forms::eisenstein(10, N));
  r.compare("E14 = E4^2 E6", forms::eisenstein(14, N), e4 * e4 * e6);
  return r;
}

VerifyReport verify_jacobi_delta(std::int64_t N) {
  auto r = univariate_report("jacobi_delta", N);
  const QSeries e4 = forms::eisenstein(4, N);
  const QSeries e6 = forms::eisenstein(6, N);
  const QSeries lhs = Rational(1, 1728) * (pow(e4, 3) - e6 * e6);
  ExponentTable t{Rational(-1), std::vector<Rational>(static_cast<std::size_t>(N), Rational(24))};
  r.compare("(E4^3 - E6^2)/1728 = q prod (1-q^n)^24", lhs, product_from_exponents(t).truncated(N));
  return r;
}

VerifyReport verify_theta_products(std::int64_t N) {
  auto r = bivariate_report("theta_products", N);
  const BiWindow w = window_for(N);
  const auto product = [&](std::vector<Factor> extra, std::int64_t zeta_shift,
                           const std::function<void(std::int64_t, std::vector<Factor>&)>& add) {
    std::vector<Factor> f = std::move(extra);
    for (std::int64_t n = 1; 2 * n - 2 <= N; ++n) {
      f.push_back({-1, 2 * n, 0, 1});
      add(n, f);
    }
    return multiply_factors(f, w, kQZeta).shifted(0, zeta_shift).restricted(w);
  };
  // theta_1 up to the factor i^-1 q^{1/4}; 2 sin(pi z) = (zeta - zeta^-1) / i.
  const BiSeries t1 = sum_side(w, kQZeta, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * n + n; },
               [&](std::int64_t n) { emit(n * n + n, 2 * n + 1, alt(n)); });
  });
  BiSeries t1_prod = product({}, 0, [](std::int64_t n, std::vector<Factor>& f) {
    f.push_back({-1, 2 * n, 2, 1});
    f.push_back({-1, 2 * n, -2, 1});
  });
  t1_prod = (BiSeries::monomial(1, 0, 1, w, kQZeta) - BiSeries::monomial(1, 0, -1, w, kQZeta)) * t1_prod;
  r.compare("theta_1 product", t1, t1_prod);

  const QSeries t1_at_one = specialize(t1, 1, 0, 1, N, Nome::half);
  r.compare("theta_1 at zeta = 1", t1_at_one, QSeries(N, Nome::half));

  const BiSeries t2 = sum_side(w, kQZeta, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * n + n; },
               [&](std::int64_t n) { emit(n * n + n, 2 * n + 1, Rational(1)); });
  });
  const auto t2_factors = [](std::int64_t lag) {
    return [lag](std::int64_t n, std::vector<Factor>& f) {
      f.push_back({+1, 2 * n, 2, 1});
      f.push_back({+1, 2 * n - lag, -2, 1});
    };
  };
  r.compare("theta_2 product", t2, product({}, 1, t2_factors(2)));
  if (const auto m = first_mismatch(t2, product({}, 1, t2_factors(0)))) {
    r.notes.push_back("theta_2 product with (1 + q^{2n} zeta^-2) differs first at " +
                      format_monomial(m->monomial, kQZeta) + "; (1 + q^{2n-2} zeta^-2) used");
  }

  const BiSeries t3 = sum_side(w, kQZeta, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * n; },
               [&](std::int64_t n) { emit(n * n, 2 * n, Rational(1)); });
  });
  r.compare("theta_3 product", t3, product({}, 0, [](std::int64_t n, std::vector<Factor>& f) {
              f.push_back({+1, 2 * n - 1, 2, 1});
              f.push_back({+1, 2 * n - 1, -2, 1});
            }));
  const BiSeries t3_alt = product({}, 0, [](std::int64_t n, std::vector<Factor>& f) {
    f.push_back({+1, 2 * n, 2, 1});
    f.push_back({+1, 2 * n - 1, -2, 1});
  });
  if (const auto m = first_mismatch(t3, t3_alt)) {
    r.notes.push_back("theta_3 product with (1 + q^{2n} zeta^2) differs first at " +
                      format_monomial(m->monomial, kQZeta) + "; (1 + q^{2n-1} zeta^2) used");
  }

  const BiSeries t4 = sum_side(w, kQZeta, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * n; },
               [&](std::int64_t n) { emit(n * n, 2 * n, alt(n)); });
  });
  r.compare("theta_4 product", t4, product({}, 0, [](std::int64_t n, std::vector<Factor>& f) {
              f.push_back({-1, 2 * n - 1, 2, 1});
              f.push_back({-1, 2 * n - 1, -2, 1});
            }));
  return r;
}

VerifyReport verify_theta_nullwert_products(std::int64_t N) {
  auto r = univariate_report("theta_nullwert_products", N);
  std::vector<UniFactor> first, second, third, fourth;
  for (std::int64_t n = 1; 2 * n - 2 <= N; ++n) {
    first.push_back({-1, 2 * n, 1});
    first.push_back({+1, 2 * n, 1});
    first.push_back({+1, 2 * n - 2, 1});
    second.push_back({-1, 2 * n, 1});
    second.push_back({+1, 2 * n, 2});
    third.push_back({-1, 2 * n, 1});
    third.push_back({+1, 2 * n - 1, 2});
    fourth.push_back({-1, 2 * n, 1});
    fourth.push_back({-1, 2 * n - 1, 2});
  }
  const Rational quarter(1, 4);
  r.compare("theta_2, first form", forms::theta(2, N),
            multiply_unifactors(first, N, Nome::half, quarter));
  r.compare("theta_2, second form", forms::theta(2, N),
            multiply_unifactors(second, N, Nome::half, quarter, 2));
  r.compare("theta_3", forms::theta(3, N), multiply_unifactors(third, N, Nome::half));
  r.compare("theta_4", forms::theta(4, N), multiply_unifactors(fourth, N, Nome::half));
  return r;
}

VerifyReport verify_delta_theta(std::int64_t N) {
  auto r = univariate_report("delta_theta", N);
  std::vector<Rational> e(static_cast<std::size_t>(N));
  for (std::int64_t n = 2; n <= N; n += 2) e[n - 1] = 24;
  const QSeries lhs = product_from_exponents(ExponentTable{Rational(-2), e}, Nome::half).truncated(N);
  const QSeries t = forms::theta(2, N) * forms::theta(3, N) * forms::theta(4, N);
  const QSeries rhs = pow(Rational(1, 2) * t, 8).truncated(N);
  r.compare("q^2 prod (1-q^2n)^24 = (theta2 theta3 theta4 / 2)^8", lhs, rhs);
  r.compare("half-nome delta", full_to_half(forms::delta(N / 2)).truncated(N), rhs.truncated(N - N % 2));
  return r;
}

VerifyReport verify_sigma_convolutions(std::int64_t N) {
  auto r = univariate_report("sigma_convolutions", N);
  const auto s3 = arith::sigma_table(3, N);
  const auto s5 = arith::sigma_table(5, N);
  const auto s7 = arith::sigma_table(7, N);
  const auto s9 = arith::sigma_table(9, N);
  for (std::int64_t n = 1; n <= N; ++n) {
    BigInt c33 = 0, c35 = 0;
    for (std::int64_t m = 1; m < n; ++m) {
      c33 += s3[m] * s3[n - m];
      c35 += s3[m] * s5[n - m];
    }
    const BigInt lhs1 = s7[n];
    const BigInt rhs1 = s3[n] + 120 * c33;
    const BigInt lhs2 = 11 * s9[n];
    const BigInt rhs2 = 21 * s5[n] - 10 * s3[n] + 5040 * c35;
    r.compared += 2;
    const std::string at = "n=" + std::to_string(n);
    if (lhs1 != rhs1) r.fail({"sigma_7", at, Rational(lhs1), Rational(rhs1)});
    if (lhs2 != rhs2) r.fail({"11 sigma_9", at, Rational(lhs2), Rational(rhs2)});
  }
  r.notes.push_back("second convolution summed as sigma_3(m) sigma_5(n-m)");
  return r;
}

using Verifier = VerifyReport (*)(std::int64_t);

const std::vector<std::pair<std::string, Verifier>>& table() {
  static const std::vector<std::pair<std::string, Verifier>> t{
      {"euler1", verify_euler1},
      {"euler2", verify_euler2},
      {"euler3", verify_euler3},
      {"gauss", verify_gauss},
      {"triple", verify_triple},
      {"quintuple_w1", verify_quintuple_w1},
      {"quintuple_w2", verify_quintuple_w2},
      {"eisen_relations", verify_eisen_relations},
      {"jacobi_delta", verify_jacobi_delta},
      {"theta_products", verify_theta_products},
      {"theta_nullwert_products", verify_theta_nullwert_products},
      {"delta_theta", verify_delta_theta},
      {"sigma_convolutions", verify_sigma_convolutions},
  };
  return t;
}

}  // namespace

BiSeries triple_sum_side(std::int64_t N) {
  const BiWindow w = window_for(N);
  return sum_side(w, kQZ, [&](auto emit) {
    for_each_n(N, [](std::int64_t n) { return n * n; },
               [&](std::int64_t n) { emit(n * n, n, alt(n)); });
  });
}

BiSeries triple_product_side(std::int64_t N) {
  std::vector<Factor> f;
  for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
    f.push_back({-1, 2 * n, 0, 1});
    f.push_back({-1, 2 * n - 1, 1, 1});
    f.push_back({-1, 2 * n - 1, -1, 1});
  }
  return multiply_factors(f, window_for(N), kQZ);
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : table()) v.push_back(name);
    return v;
  }();
  return out;
}

VerifyReport verify(std::string_view name, std::int64_t order) {
  if (order < 1) throw Error("verify: order must be at least 1");
  for (const auto& [label, fn] : table()) {
    if (label == name) return fn(order);
  }
  throw Error("unknown identity '" + std::string(name) + "'");
}

std::vector<VerifyReport> verify_all(std::int64_t order) {
  std::vector<VerifyReport> out;
  for (const auto& [label, fn] : table()) out.push_back(verify(label, order));
  return out;
}

}  // namespace qmoon::identities
