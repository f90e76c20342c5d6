#include "doctest.h"

#include "qmoon/biseries.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"
#include "qmoon/identities.hpp"

using namespace qmoon;

TEST_CASE("every identity except the printed second quintuple form holds at order 30") {
  for (const auto& name : identities::names()) {
    const VerifyReport r = identities::verify(name, 30);
    if (name == "quintuple_w2") continue;
    CHECK_MESSAGE(r.passed, format_report(r));
    CHECK(r.compared > 0);
  }
}

TEST_CASE("all identities pass at order 1") {
  for (const auto& r : identities::verify_all(1)) {
    if (r.name == "quintuple_w2") continue;
    CHECK_MESSAGE(r.passed, format_report(r));
  }
}

TEST_CASE("printed second quintuple form fails at q z^-1 while the variant holds") {
  const VerifyReport r = identities::verify("quintuple_w2", 20);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->monomial == "q*z^-1");
  CHECK(r.first_mismatch->lhs == -1);
  CHECK(r.first_mismatch->rhs == 1);
  bool variant_noted = false;
  for (const auto& n : r.notes) variant_noted = variant_noted || n.find("variant") != std::string::npos;
  CHECK(variant_noted);
}

TEST_CASE("larger orders") {
  CHECK(identities::verify("euler3", 50).passed);
  CHECK(identities::verify("eisen_relations", 50).passed);
  CHECK(identities::verify("sigma_convolutions", 50).passed);
  CHECK(identities::verify("delta_theta", 24).passed);
}

TEST_CASE("triple product at z = -1 gives the Gauss product") {
  const std::int64_t N = 30;
  const QSeries sum = specialize(identities::triple_sum_side(N), 1, 0, -1, N);
  const QSeries prod = specialize(identities::triple_product_side(N), 1, 0, -1, N);
  CHECK(first_mismatch(sum, prod) == std::nullopt);
  // prod (1 - q^{2n})(1 + q^{2n-1})^2, factor by factor.
  QSeries gauss = QSeries::constant(1, N);
  for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
    gauss = gauss * (QSeries::constant(1) - QSeries::monomial(1, 2 * n));
    const QSeries f = QSeries::constant(1) + QSeries::monomial(1, 2 * n - 1);
    gauss = gauss * f * f;
  }
  CHECK(first_mismatch(sum, gauss) == std::nullopt);
  CHECK(first_mismatch(sum, forms::theta_full(N)) == std::nullopt);
}

TEST_CASE("triple product at (q, z) -> (t^3, t) gives Euler's product in t^2") {
  const std::int64_t N = 30;
  const std::int64_t T = 2 * N;
  const QSeries sum = specialize(identities::triple_sum_side(N), 3, 1, 1, T);
  const QSeries prod = specialize(identities::triple_product_side(N), 3, 1, 1, T);
  const QSeries euler = scale_var(forms::euler_phi(N), 2).truncated(T);
  CHECK(first_mismatch(sum, euler) == std::nullopt);
  CHECK(first_mismatch(prod, euler) == std::nullopt);
}

TEST_CASE("reports are deterministic and serializable") {
  const auto a = to_json(identities::verify("triple", 12)).dump();
  const auto b = to_json(identities::verify("triple", 12)).dump();
  CHECK(a == b);
  CHECK_THROWS_AS(identities::verify("nonexistent", 5), Error);
}
