#include "doctest.h"

#include "support/oracles.hpp"

#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"

using namespace qmoon;

TEST_CASE("Bernoulli numbers") {
  CHECK(forms::bernoulli(2) == Rational(1, 6));
  CHECK(forms::bernoulli(4) == Rational(-1, 30));
  CHECK(forms::bernoulli(12) == Rational(-691, 2730));
  CHECK(forms::bernoulli(3) == 0);
  for (unsigned k = 2; k <= 30; ++k) CHECK(forms::bernoulli(k) == oracle::bernoulli_at(k));
}

TEST_CASE("Eisenstein series") {
  const QSeries e4 = forms::eisenstein(4, 30);
  const QSeries e6 = forms::eisenstein(6, 30);
  CHECK(e4.coeff(0) == 1);
  CHECK(e6.coeff(0) == 1);
  for (std::int64_t n = 1; n <= 30; ++n) {
    CHECK(e4.coeff(n) == 240 * oracle::sigma(3, n));
    CHECK(e6.coeff(n) == -504 * oracle::sigma(5, n));
  }
  CHECK(e4.coeff(2) == 2160);
  CHECK(forms::eisenstein(12, 3).coeff(1) == Rational(65520, 691));
  CHECK_THROWS_AS(forms::eisenstein(5, 3), Error);
  CHECK_THROWS_AS(forms::eisenstein(2, 3), Error);
}

TEST_CASE("Eisenstein products") {
  const std::int64_t N = 50;
  const QSeries e4 = forms::eisenstein(4, N);
  const QSeries e6 = forms::eisenstein(6, N);
  CHECK(first_mismatch(e4 * e4, forms::eisenstein(8, N)) == std::nullopt);
  CHECK(first_mismatch(e4 * e6, forms::eisenstein(10, N)) == std::nullopt);
  CHECK(first_mismatch(e4 * e4 * e6, forms::eisenstein(14, N)) == std::nullopt);
}

TEST_CASE("discriminant") {
  const QSeries d = forms::delta(50);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);
  CHECK(d.coeff(4) == -1472);
  const QSeries e4 = forms::eisenstein(4, 50);
  const QSeries e6 = forms::eisenstein(6, 50);
  CHECK(first_mismatch(d, Rational(1, 1728) * (e4 * e4 * e4 - e6 * e6)) == std::nullopt);
  CHECK(first_mismatch(pow(forms::eta(20), 24), d) == std::nullopt);
}

TEST_CASE("eta quotients") {
  const auto shape = forms::EtaShape::parse("1^8 2^8");
  CHECK(shape.prefactor() == 1);
  const QSeries f = forms::eta_quotient(shape, 6);
  const QSeries r = invert(f.shifted(-1));
  // 1/(phi(q)^8 phi(q^2)^8) by brute force: sum over a + 2b = n of p8(a) p8(b).
  for (std::int64_t n = 0; n <= 4; ++n) {
    std::int64_t expected = 0;
    for (std::int64_t b = 0; 2 * b <= n; ++b) {
      expected += oracle::colored_partitions(n - 2 * b, 8) * oracle::colored_partitions(b, 8);
    }
    CHECK(r.coeff(n) == expected);
  }
  CHECK(r.coeff(1) == 8);
  CHECK(r.coeff(2) == 52);
  CHECK(first_mismatch(forms::eta_quotient(forms::EtaShape::parse("1^24"), 10), forms::delta(10)) == std::nullopt);
  CHECK_THROWS_AS(forms::EtaShape::parse("2^3 2^1"), Error);
  CHECK_THROWS_AS(forms::EtaShape::parse("0^3"), Error);
}

TEST_CASE("modular invariant") {
  const QSeries j = forms::j_invariant(20);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);
  CHECK(j.coeff(3) == 864299970);
  CHECK(forms::jstar(5).coeff(0) == 0);
  const QSeries e4 = forms::eisenstein(4, 21);
  CHECK(first_mismatch(j * forms::delta(21), e4 * e4 * e4) == std::nullopt);
  CHECK(forms::j_invariant(0).terms().size() == 2);
}

TEST_CASE("theta functions") {
  const QSeries t3 = forms::theta(3, 30);
  CHECK(t3.nome() == Nome::half);
  CHECK(t3.coeff(0) == 1);
  CHECK(t3.coeff(1) == 2);
  CHECK(t3.coeff(2) == 0);
  CHECK(t3.coeff(3) == 0);
  CHECK(t3.coeff(4) == 2);
  const QSeries sq = t3 * t3;
  for (std::int64_t n = 0; n <= 30; ++n) CHECK(sq.coeff(n) == oracle::r2(n));
  CHECK(forms::theta(4, 30) == negate_var(t3));
  const QSeries t2 = forms::theta(2, 12);
  CHECK(t2.prefactor() == Rational(1, 4));
  CHECK(t2.coeff(0) == 2);
  CHECK(t2.coeff(2) == 2);
  CHECK(t2.coeff(6) == 2);
  CHECK(t2.coeff(1) == 0);
  CHECK(forms::theta_full(9).nome() == Nome::full);
}

TEST_CASE("Leech lattice theta series") {
  const QSeries a = forms::leech_theta_from_thetas(20);
  const QSeries b = forms::leech_theta_from_delta(20);
  CHECK(first_mismatch(a, b) == std::nullopt);
  const QSeries l = forms::leech_theta(20);
  CHECK(l.coeff(0) == 1);
  CHECK(l.coeff(2) == 0);
  CHECK(l.coeff(4) == 196560);
  CHECK(l.coeff(6) == 16773120);
  CHECK(l.coeff(8) == 398034000);
  for (std::int64_t n = 1; n <= 20; n += 2) CHECK(l.coeff(n) == 0);
}

TEST_CASE("partition-type series") {
  for (std::int64_t n = 0; n <= 8; ++n) CHECK(forms::partition_series(8).coeff(n) == oracle::partitions(n));
  const QSeries p24 = forms::colored_partition_series(24, 3);
  CHECK(p24.coeff(2) == 324);
  CHECK(p24.coeff(2) == oracle::colored_partitions(2, 24));
  for (unsigned k = 1; k <= 4; ++k) {
    const QSeries pk = forms::colored_partition_series(k, 6);
    for (std::int64_t n = 0; n <= 6; ++n) CHECK(pk.coeff(n) == oracle::colored_partitions(n, k));
  }
  const QSeries xi = forms::xi_series(10);
  CHECK(xi.coeff(0) == 0);
  CHECK(xi.coeff(1) == 0);
  CHECK(xi.coeff(2) == 1);
  CHECK(xi.coeff(3) == 8);
}

TEST_CASE("colored partition monotonicity in colours") {
  for (unsigned k = 1; k < 8; ++k) {
    const QSeries a = forms::colored_partition_series(k, 15);
    const QSeries b = forms::colored_partition_series(k + 1, 15);
    for (std::int64_t n = 0; n <= 15; ++n) CHECK(b.coeff(n) >= a.coeff(n));
  }
}

TEST_CASE("odd divisor sums and Thompson-type series") {
  const QSeries f = forms::F_oddsigma(9);
  const std::vector<long> expected{1, 0, 4, 0, 6, 0, 8, 0, 13};
  for (std::int64_t n = 1; n <= 9; ++n) CHECK(f.coeff(n) == expected[static_cast<std::size_t>(n - 1)]);
  const auto leech = forms::EtaShape::parse("1^24");
  CHECK(first_mismatch(forms::p_g_series(leech, 10), forms::colored_partition_series(24, 10)) == std::nullopt);
  CHECK(forms::j_g_series(leech, 10).coeff(0) == 0);
}

TEST_CASE("catalog lookup") {
  for (const auto& name : forms::catalog_names()) CHECK_NOTHROW(forms::by_name(name, 4));
  CHECK_THROWS_AS(forms::by_name("nonsense", 4), Error);
}
