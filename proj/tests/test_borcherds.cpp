#include "doctest.h"

#include "support/oracles.hpp"

#include "qmoon/borcherds.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"
#include "qmoon/exponents.hpp"

using namespace qmoon;
using namespace qmoon::borcherds;

TEST_CASE("Hurwitz class numbers: listed values") {
  CHECK(hurwitz(0) == Rational(-1, 12));
  CHECK(hurwitz(3) == Rational(1, 3));
  CHECK(hurwitz(4) == Rational(1, 2));
  CHECK(hurwitz(7) == 1);
  CHECK(hurwitz(8) == 1);
  CHECK(hurwitz(11) == 1);
  CHECK(hurwitz(12) == Rational(4, 3));
  CHECK(hurwitz(1) == 0);
}

TEST_CASE("Hurwitz class numbers: structure up to 200") {
  const auto table = hurwitz_table(200);
  for (std::int64_t n = 1; n <= 200; ++n) {
    const Rational h = table.at(n);
    if (n % 4 == 1 || n % 4 == 2) {
      CHECK(h == 0);
    } else {
      CHECK(h > 0);
      CHECK(6 % h.get_den() == 0);
    }
  }
}

TEST_CASE("Hurwitz class numbers satisfy the Kronecker-Hurwitz relation") {
  const auto table = hurwitz_table(4 * 50);
  for (std::int64_t n = 1; n <= 50; ++n) {
    Rational lhs = 0;
    for (std::int64_t t = -2 * n; t <= 2 * n; ++t) {
      if (t * t <= 4 * n) lhs += table.at(4 * n - t * t);
    }
    CHECK(lhs == oracle::hurwitz_relation_rhs(n));
  }
}

TEST_CASE("plus space validation") {
  CHECK_NOTHROW(plus_space_check(12 * forms::theta_full(20)));
  const QSeries bad = forms::theta_full(10) + QSeries::monomial(1, 2, 10);
  CHECK_THROWS_AS(plus_space_check(bad), Error);
  const auto v = plus_space_violations(bad);
  REQUIRE(v.size() == 1);
  CHECK(v.front().exponent == 2);
  CHECK_THROWS_AS(plus_space_check(QSeries::monomial(Rational(1, 2), 0, 10)), Error);
}

TEST_CASE("catalog forms") {
  const auto f4 = catalog("f_4", 40);
  const std::vector<std::pair<std::int64_t, long>> golden{{-3, 1},      {0, 4},        {1, -240}, {4, 26760},
                                                          {5, -85995}, {8, 1707264}, {9, -4096240}};
  for (const auto& [e, c] : golden) CHECK(f4.form.c(e) == c);
  const auto fd = catalog("f_delta", 10);
  CHECK(fd.form.c(0) == 12);
  CHECK(fd.form.c(1) == 24);
  CHECK(fd.form.c(2) == 0);
  CHECK(fd.form.c(3) == 0);
  CHECK(fd.form.c(4) == 24);

  // f_j = 3 f_4 - 12 theta against the formula output.
  const QSeries theta = forms::theta_full(40);
  const QSeries fj = catalog("f_j", 40).form.series;
  CHECK(first_mismatch(fj, 3 * f4.form.series - 12 * theta) == std::nullopt);
  CHECK(first_mismatch(fj, f_j_formula(40, 6)) == std::nullopt);

  const auto f6 = catalog("f_6", 40);
  bool shift_noted = false;
  for (const auto& n : f6.notes) shift_noted = shift_noted || n.find("852") != std::string::npos;
  CHECK(shift_noted);
  CHECK_THROWS_AS(catalog("f_3", 10), Error);
}

TEST_CASE("weight law") {
  CHECK(catalog("f_delta", 4).form.c(0) == 12);
  CHECK(catalog("f_4", 4).form.c(0) == 4);
  CHECK(catalog("f_6", 4).form.c(0) == 6);
  CHECK(catalog("f_j", 4).form.c(0) == 0);
}

TEST_CASE("lift of 12 theta is the discriminant") {
  const auto r = lift(catalog("f_delta", 2500).form, 50);
  CHECK(r.h == -1);
  CHECK(first_mismatch(r.result, forms::delta(50)) == std::nullopt);
  CHECK(r.result.trunc() >= 50);
}

TEST_CASE("lifts reproduce Eisenstein series and j") {
  const std::int64_t N = 30;
  const std::vector<std::pair<std::string, std::string>> cases{{"f_4", "E4"},   {"f_6", "E6"},   {"f_8", "E8"},
                                                               {"f_10", "E10"}, {"f_14", "E14"}, {"f_j", "j"}};
  for (const auto& [f, target] : cases) {
    const auto r = lift(catalog(f, N * N).form, N);
    CHECK_MESSAGE(first_mismatch(r.result, forms::by_name(target, N)) == std::nullopt, f);
    CHECK(r.h == (f == "f_j" ? 1 : 0));
  }
}

TEST_CASE("lift requires enough coefficients") {
  CHECK_THROWS_AS(lift(catalog("f_4", 20).form, 10), Error);
}

TEST_CASE("exponent extraction recovers c(n^2)") {
  for (const char* name : {"f_4", "f_6", "f_j"}) {
    const auto f = catalog(name, 400).form;
    const auto r = lift(f, 20);
    const ExponentTable t = exponents_from_series(r.result, 20);
    for (std::int64_t n = 1; n <= 20; ++n) CHECK(t.at(n) == f.c(n * n));
  }
}

TEST_CASE("printed Borcherds exponents") {
  const std::vector<std::pair<std::string, std::vector<long>>> printed{
      {"E4", {-240, 26760, -4096240}}, {"E6", {504, 143388, 51180024}}, {"E8", {-480, 53520, -8192480}},
      {"E10", {264, 170148, 47083784}}, {"E14", {24, 196908, 42987544}}, {"j", {-744, 80256, -12288744}}};
  for (const auto& [name, values] : printed) {
    const ExponentTable t = exponents_from_series(forms::by_name(name, 60), 60);
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(t.at(static_cast<std::int64_t>(i + 1)) == values[i]);
  }
}

TEST_CASE("lift is a homomorphism") {
  const std::int64_t N = 15;
  const QSeries f4 = catalog("f_4", N * N).form.series;
  const QSeries f6 = catalog("f_6", N * N).form.series;
  const QSeries fd = catalog("f_delta", N * N).form.series;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, -1}, {-1, 3}, {3, 2}}) {
    const auto combo = lift(plus_space_check(Rational(a) * f4 + Rational(b) * f6), N);
    const auto l4 = lift(plus_space_check(f4), N);
    const auto l6 = lift(plus_space_check(f6), N);
    CHECK(combo.h == a * l4.h + b * l6.h);
    for (std::int64_t n = 1; n <= N; ++n) CHECK(combo.table.at(n) == a * l4.table.at(n) + b * l6.table.at(n));
  }
  const auto d = lift(plus_space_check(fd + f4), N);
  const QSeries expected = forms::delta(N) * forms::eisenstein(4, N);
  CHECK(first_mismatch(d.result, expected) == std::nullopt);
}

TEST_CASE("zero multiplicities") {
  CHECK(zero_multiplicity(catalog("f_j", 40).form, -3) == 3);
  CHECK(zero_multiplicity(catalog("f_delta", 40).form, -3) == 0);
  CHECK(zero_multiplicity(catalog("f_4", 40).form, -3) == 1);
}
