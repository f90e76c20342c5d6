#include "qmoon/rational.hpp"

#include "qmoon/error.hpp"

namespace qmoon {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (!is_decimal_integer(text)) {
    throw Error("malformed integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt binomial(const BigInt& top, unsigned long k) {
  BigInt num = 1;
  BigInt factor = top;
  for (unsigned long i = 0; i < k; ++i) {
    num *= factor;
    factor -= 1;
  }
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return out;
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace qmoon
