#include "qmoon/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qmoon/error.hpp"

namespace qmoon::arith {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw Error(std::string(what) + ": argument must be positive, got " +
                std::to_string(n));
  }
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt sigma(unsigned k, std::int64_t n) {
  require_positive(n, "sigma");
  BigInt total = 0;
  BigInt term;
  for (std::int64_t d : divisors(n)) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
  }
  return total;
}

std::vector<BigInt> sigma_table(unsigned k, std::int64_t max_n) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max<std::int64_t>(max_n, 0) + 1), 0);
  BigInt power;
  for (std::int64_t d = 1; d <= max_n; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (std::int64_t m = d; m <= max_n; m += d) out[static_cast<std::size_t>(m)] += power;
  }
  return out;
}

}  // namespace qmoon::arith
