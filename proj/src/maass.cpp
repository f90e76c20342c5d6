#include "qmoon/maass.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qmoon/error.hpp"

namespace qmoon::maass {

namespace {

std::vector<std::int64_t> parse_key(const std::string& key, std::size_t parts) {
  std::vector<std::int64_t> out;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw Error("");
    } catch (const std::exception&) {
      throw Error("invalid coefficient key '" + key + "'");
    }
  }
  if (out.size() != parts) throw Error("coefficient key '" + key + "' needs " + std::to_string(parts) + " parts");
  return out;
}

BigInt parse_value(const Json& value) {
  if (value.is_number_integer()) return BigInt(std::to_string(value.get<std::int64_t>()));
  if (value.is_string()) return parse_bigint(value.get<std::string>());
  throw Error("coefficient values must be integers or integer strings");
}

BigInt power(std::int64_t base, std::int64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

std::int64_t gcd3(std::int64_t n, std::int64_t r, std::int64_t m) {
  return std::gcd(std::gcd(n, std::llabs(r)), m);
}

std::string key_string(std::int64_t n, std::int64_t r, std::int64_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ")";
}

std::int64_t isqrt(std::int64_t x) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void check_weight(std::int64_t k) {
  if (k < 1) throw Error("weight k must be positive");
}

}  // namespace

BigInt JacobiCoeffTable::c(std::int64_t n, std::int64_t r) const {
  if (n < 0 || n > n_bound) {
    throw Error("coefficient c(" + std::to_string(n) + "," + std::to_string(r) + ") is outside the known bound n <= " +
                std::to_string(n_bound));
  }
  const auto it = coeffs.find({n, r});
  return it == coeffs.end() ? BigInt(0) : it->second;
}

BigInt SiegelCoeffTable::a(std::int64_t n, std::int64_t r, std::int64_t m) const {
  const auto it = coeffs.find({n, r, m});
  return it == coeffs.end() ? BigInt(0) : it->second;
}

JacobiCoeffTable jacobi_from_json(const Json& json) {
  try {
    JacobiCoeffTable t;
    t.k = json.at("k").get<std::int64_t>();
    t.m = json.at("m").get<std::int64_t>();
    check_weight(t.k);
    if (t.m < 1) throw Error("index m must be positive");
    std::int64_t max_n = 0;
    for (const auto& [key, value] : json.at("coeffs").items()) {
      const auto nr = parse_key(key, 2);
      if (nr[0] < 0) throw Error("negative n in key '" + key + "'");
      if (nr[1] * nr[1] > 4 * nr[0] * t.m) {
        throw Error("coefficient at (" + key + ") violates r^2 <= 4nm");
      }
      BigInt c = parse_value(value);
      max_n = std::max(max_n, nr[0]);
      if (c != 0) t.coeffs[{nr[0], nr[1]}] = std::move(c);
    }
    t.n_bound = json.contains("n_bound") ? json.at("n_bound").get<std::int64_t>() : max_n;
    if (t.n_bound < max_n) throw Error("n_bound is smaller than a listed coefficient index");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Jacobi table JSON: ") + e.what());
  }
}

Json to_json(const JacobiCoeffTable& table) {
  Json out;
  out["k"] = table.k;
  out["m"] = table.m;
  out["n_bound"] = table.n_bound;
  Json coeffs = Json::object();
  for (const auto& [key, c] : table.coeffs) {
    coeffs[std::to_string(key.first) + "," + std::to_string(key.second)] = c.get_str();
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

SiegelCoeffTable siegel_from_json(const Json& json) {
  try {
    SiegelCoeffTable s;
    s.k = json.at("k").get<std::int64_t>();
    check_weight(s.k);
    std::int64_t max_m = 0;
    std::int64_t bound = 0;
    for (const auto& [key, value] : json.at("coeffs").items()) {
      const auto nrm = parse_key(key, 3);
      if (nrm[0] < 0 || nrm[2] < 1) throw Error("key '" + key + "' needs n >= 0 and m >= 1");
      max_m = std::max(max_m, nrm[2]);
      bound = std::max(bound, nrm[0] * nrm[2]);
      BigInt c = parse_value(value);
      if (c != 0) s.coeffs[{nrm[0], nrm[1], nrm[2]}] = std::move(c);
    }
    s.max_m = json.contains("max_m") ? json.at("max_m").get<std::int64_t>() : max_m;
    s.n_bound = json.contains("n_bound") ? json.at("n_bound").get<std::int64_t>() : bound;
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Siegel table JSON: ") + e.what());
  }
}

Json to_json(const SiegelCoeffTable& table) {
  Json out;
  out["k"] = table.k;
  out["max_m"] = table.max_m;
  out["n_bound"] = table.n_bound;
  Json coeffs = Json::object();
  for (const auto& [key, c] : table.coeffs) {
    const auto& [n, r, m] = key;
    coeffs[std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m)] = c.get_str();
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

BigInt v_entry(const JacobiCoeffTable& t, std::int64_t m, std::int64_t n, std::int64_t r) {
  if (t.m != 1) throw Error("the V_m operator needs an index-1 table");
  if (m < 1) throw Error("V_m needs m >= 1");
  BigInt total = 0;
  const std::int64_t g = gcd3(n, r, m);
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    total += power(d, t.k - 1) * t.c(m * n / (d * d), r / d);
  }
  return total;
}

JacobiCoeffTable v_operator(const JacobiCoeffTable& t, std::int64_t m) {
  if (t.m != 1) throw Error("the V_m operator needs an index-1 table");
  if (m < 1) throw Error("V_m needs m >= 1");
  JacobiCoeffTable out;
  out.k = t.k;
  out.m = m;
  out.n_bound = t.n_bound / m;
  for (std::int64_t n = 0; n <= out.n_bound; ++n) {
    const std::int64_t rmax = isqrt(4 * n * m);
    for (std::int64_t r = -rmax; r <= rmax; ++r) {
      BigInt v = v_entry(t, m, n, r);
      if (v != 0) out.coeffs[{n, r}] = std::move(v);
    }
  }
  return out;
}

SiegelCoeffTable assemble_maass(const JacobiCoeffTable& t, std::int64_t max_m) {
  SiegelCoeffTable s;
  s.k = t.k;
  s.max_m = max_m;
  s.n_bound = t.n_bound;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    const JacobiCoeffTable layer = v_operator(t, m);
    for (const auto& [key, c] : layer.coeffs) s.coeffs[{key.first, key.second, m}] = c;
  }
  return s;
}

VerifyReport maass_relation_check(const SiegelCoeffTable& s) {
  VerifyReport report;
  report.name = "maass_relation";
  report.order = {s.max_m, s.n_bound};
  for (const auto& [key, c] : s.coeffs) {
    const auto& [n, r, m] = key;
    if (4 * n * m - r * r < 0) {
      report.fail({"support", key_string(n, r, m), Rational(c), Rational(0)});
      return report;
    }
    if (!s.known(n, m)) {
      report.notes.push_back("entry " + key_string(n, r, m) + " lies outside the checked region");
    }
  }
  for (std::int64_t m = 1; m <= s.max_m; ++m) {
    for (std::int64_t n = 0; s.known(n, m); ++n) {
      const std::int64_t rmax = isqrt(4 * n * m);
      for (std::int64_t r = -rmax; r <= rmax; ++r) {
        BigInt rhs = 0;
        const std::int64_t g = gcd3(n, r, m);
        for (std::int64_t d = 1; d <= g; ++d) {
          if (g % d == 0) rhs += power(d, s.k - 1) * s.a(m * n / (d * d), r / d, 1);
        }
        ++report.compared;
        const BigInt lhs = s.a(n, r, m);
        if (lhs != rhs) {
          report.fail({"", key_string(n, r, m), Rational(lhs), Rational(rhs)});
          return report;
        }
      }
    }
  }
  return report;
}

JacobiCoeffTable random_index1_table(std::mt19937_64& rng, std::int64_t k, std::int64_t n_bound,
                                     std::int64_t magnitude) {
  std::uniform_int_distribution<std::int64_t> dist(-magnitude, magnitude);
  JacobiCoeffTable t;
  t.k = k;
  t.m = 1;
  t.n_bound = n_bound;
  for (std::int64_t n = 0; n <= n_bound; ++n) {
    const std::int64_t rmax = isqrt(4 * n);
    for (std::int64_t r = -rmax; r <= rmax; ++r) {
      const std::int64_t c = dist(rng);
      if (c != 0) t.coeffs[{n, r}] = BigInt(std::to_string(c));
    }
  }
  return t;
}

}  // namespace qmoon::maass
