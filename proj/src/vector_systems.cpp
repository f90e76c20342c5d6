#include "qmoon/vector_systems.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "qmoon/biseries.hpp"
#include "qmoon/error.hpp"

namespace qmoon::vsys {

namespace {

IntVec parse_vector(const std::string& text, std::int64_t dim) {
  IntVec v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::int64_t x = 0;
    const auto* b = part.data();
    while (b != part.data() + part.size() && *b == ' ') ++b;
    auto [ptr, ec] = std::from_chars(b, part.data() + part.size(), x);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error("invalid vector component '" + part + "'");
    }
    v.push_back(x);
  }
  if (static_cast<std::int64_t>(v.size()) != dim) {
    throw Error("vector '" + text + "' has " + std::to_string(v.size()) + " components, expected " +
                std::to_string(dim));
  }
  return v;
}

std::string vector_key(const IntVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

bool is_zero(const IntVec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// Leading principal minors, exact.
bool positive_definite(const std::vector<IntVec>& g) {
  const std::size_t n = g.size();
  std::vector<RatVec> a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::string format_ratvec(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string format_key(const LatticeSeries::Key& key) {
  std::string out = "q^" + std::to_string(key.first) + "*zeta^(";
  for (std::size_t i = 0; i < key.second.size(); ++i) {
    if (i) out += ",";
    out += to_string(make_rational(key.second[i], 2));
  }
  return out + ")";
}

}  // namespace

Rational VectorSystem::pairing(const RatVec& a, const RatVec& b) const {
  Rational total = 0;
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) total += a[i] * gram[i][j] * b[j];
  }
  return total;
}

std::int64_t VectorSystem::c(const IntVec& v) const {
  const auto it = mult.find(v);
  return it == mult.end() ? 0 : it->second;
}

std::int64_t VectorSystem::c0() const { return c(IntVec(static_cast<std::size_t>(dim), 0)); }

VectorSystem from_json(const Json& json) {
  try {
    VectorSystem v;
    v.dim = json.at("dim").get<std::int64_t>();
    if (v.dim < 1) throw Error("vector system dimension must be positive");
    v.gram = json.at("gram").get<std::vector<IntVec>>();
    if (static_cast<std::int64_t>(v.gram.size()) != v.dim) throw Error("gram matrix has wrong size");
    for (const auto& row : v.gram) {
      if (static_cast<std::int64_t>(row.size()) != v.dim) throw Error("gram matrix has wrong size");
    }
    for (const auto& [key, value] : json.at("mult").items()) {
      const auto c = value.get<std::int64_t>();
      if (c < 0) throw Error("multiplicity of (" + key + ") is negative");
      if (c > 0) v.mult[parse_vector(key, v.dim)] += c;
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed vector system JSON: ") + e.what());
  }
}

Json to_json(const VectorSystem& system) {
  Json out;
  out["dim"] = system.dim;
  out["gram"] = system.gram;
  Json mult = Json::object();
  for (const auto& [v, c] : system.mult) mult[vector_key(v)] = c;
  out["mult"] = std::move(mult);
  return out;
}

VectorSystem sample(const std::string& name) {
  VectorSystem v;
  if (name == "s1") {
    v.dim = 1;
    v.gram = {{2}};
    v.mult = {{{1}, 1}, {{-1}, 1}};
  } else if (name == "trivial") {
    v.dim = 1;
    v.gram = {{2}};
  } else if (name == "s2") {
    v.dim = 2;
    v.gram = {{2, 0}, {0, 2}};
    v.mult = {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
  } else {
    throw Error("unknown sample vector system '" + name + "'");
  }
  return v;
}

std::vector<std::string> sample_names() { return {"s1", "trivial", "s2"}; }

Validation validate(const VectorSystem& system) {
  Validation out;
  const auto s = static_cast<std::size_t>(system.dim);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (system.gram[i][j] != system.gram[j][i]) {
        out.problems.push_back("gram matrix is not symmetric");
        i = s;
        break;
      }
    }
  }
  if (out.problems.empty() && !positive_definite(system.gram)) {
    out.problems.push_back("gram matrix is not positive definite");
  }
  for (const auto& [v, c] : system.mult) {
    if (c < 0) out.problems.push_back("negative multiplicity at (" + vector_key(v) + ")");
    if (system.c(negated(v)) != c) {
      out.problems.push_back("c(v) != c(-v) at v = (" + vector_key(v) + ")");
    }
  }
  if (out.problems.empty()) {
    // M = sum c(v) (Sv)(Sv)^T must be alpha S.
    std::vector<RatVec> M(s, RatVec(s));
    for (const auto& [v, c] : system.mult) {
      RatVec sv(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) sv[i] += Rational(system.gram[i][j] * v[j]);
      }
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) M[i][j] += Rational(c) * sv[i] * sv[j];
      }
    }
    const Rational alpha = M[0][0] / system.gram[0][0];
    for (std::size_t i = 0; i < s && out.problems.empty(); ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (M[i][j] != alpha * system.gram[i][j]) {
          out.problems.push_back("second moments are not isotropic: entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") of sum c(v)(Sv)(Sv)^T is " + to_string(M[i][j]) +
                                 ", expected " + to_string(alpha * system.gram[i][j]));
          break;
        }
      }
    }
    if (out.problems.empty()) out.scalar = alpha;
  }
  out.valid = out.problems.empty();
  return out;
}

WeylData weyl_data(const VectorSystem& system, const RatVec& lambda) {
  if (static_cast<std::int64_t>(lambda.size()) != system.dim) {
    throw Error("chamber vector has the wrong dimension");
  }
  WeylData w;
  w.chamber_vector = lambda;
  w.rho.assign(static_cast<std::size_t>(system.dim), Rational(0));
  Rational norm_sum = 0;
  for (const auto& [v, c] : system.mult) {
    w.d += c;
    const RatVec rv = to_rat(v);
    norm_sum += Rational(c) * system.pairing(rv, rv);
    if (is_zero(v)) continue;
    const Rational p = system.pairing(rv, lambda);
    if (p == 0) {
      throw Error("chamber vector " + format_ratvec(lambda) + " is orthogonal to (" + vector_key(v) + ")");
    }
    if (p > 0) {
      for (std::size_t i = 0; i < v.size(); ++i) w.rho[i] += Rational(c * v[i], 2);
    }
  }
  for (auto& x : w.rho) x.canonicalize();
  w.k = make_rational(system.c0(), 2);
  w.m = norm_sum / Rational(2 * system.dim);
  return w;
}

RatVec choose_chamber_vector(const VectorSystem& system) {
  for (std::int64_t base = 2;; ++base) {
    RatVec lambda(static_cast<std::size_t>(system.dim));
    std::int64_t x = 1;
    for (auto& e : lambda) {
      e = x;
      x *= base;
    }
    bool ok = true;
    for (const auto& [v, c] : system.mult) {
      if (!is_zero(v) && system.pairing(to_rat(v), lambda) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return lambda;
  }
}

Rational LatticeSeries::coeff(std::int64_t q_exp, const IntVec& doubled_zeta) const {
  if (q_exp > trunc) throw Error("psi coefficient beyond the computed order");
  const auto it = coeffs.find({q_exp, doubled_zeta});
  return it == coeffs.end() ? Rational(0) : it->second;
}

Json to_json(const LatticeSeries& series) {
  Json out;
  out["prefactor"] = to_string(series.prefactor);
  out["trunc"] = series.trunc;
  Json terms = Json::array();
  for (const auto& [key, c] : series.coeffs) {
    RatVec w;
    for (auto x : key.second) w.push_back(make_rational(x, 2));
    Json zeta = Json::array();
    for (const auto& x : w) zeta.push_back(to_string(x));
    terms.push_back(Json{{"q", key.first}, {"zeta", zeta}, {"coeff", to_string(c)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

LatticeSeries psi(const VectorSystem& system, const RatVec& lambda, std::int64_t order) {
  const WeylData w = weyl_data(system, lambda);
  LatticeSeries out;
  out.prefactor = make_rational(w.d, 24);
  out.trunc = order;
  IntVec start(static_cast<std::size_t>(system.dim));
  for (std::size_t i = 0; i < start.size(); ++i) {
    const Rational twice = -2 * w.rho[i];
    start[i] = twice.get_num().get_si();
  }
  std::map<LatticeSeries::Key, Rational> acc{{{0, start}, Rational(1)}};
  const auto multiply = [&](std::int64_t n, const IntVec& v) {
    std::map<LatticeSeries::Key, Rational> next = acc;
    for (const auto& [key, c] : acc) {
      if (key.first + n > order) continue;
      IntVec z = key.second;
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += 2 * v[i];
      auto& slot = next[{key.first + n, z}];
      slot -= c;
      if (slot == 0) next.erase({key.first + n, z});
    }
    acc.swap(next);
  };
  for (const auto& [v, c] : system.mult) {
    if (is_zero(v) || system.pairing(to_rat(v), lambda) < 0) continue;
    for (std::int64_t r = 0; r < c; ++r) multiply(0, v);
  }
  for (std::int64_t n = 1; n <= order; ++n) {
    for (const auto& [v, c] : system.mult) {
      for (std::int64_t r = 0; r < c; ++r) multiply(n, v);
    }
  }
  out.coeffs = std::move(acc);
  return out;
}

namespace {

// (x, w) with w given doubled.
Rational pair_doubled(const VectorSystem& s, const RatVec& x, const IntVec& doubled) {
  RatVec w;
  for (auto e : doubled) w.push_back(make_rational(e, 2));
  return s.pairing(x, w);
}

int sign_of_twice(const Rational& value, const std::string& what) {
  const Rational twice = 2 * value;
  if (!is_integer(twice)) throw Error(what + " is not half-integral");
  return twice.get_num() % 2 == 0 ? 1 : -1;
}

}  // namespace

VerifyReport elliptic_transform_check(const VectorSystem& system, const RatVec& lambda,
                                      const RatVec& shift, std::int64_t order) {
  if (static_cast<std::int64_t>(shift.size()) != system.dim) {
    throw Error("shift vector has the wrong dimension");
  }
  for (const auto& [v, c] : system.mult) {
    if (!is_integer(system.pairing(shift, to_rat(v)))) {
      throw Error("shift " + format_ratvec(shift) + " pairs non-integrally with (" + vector_key(v) + ")");
    }
  }
  const WeylData w = weyl_data(system, lambda);
  const LatticeSeries ps = psi(system, lambda, order);
  VerifyReport r;
  r.name = "elliptic_transform";
  r.order = {order};
  const int sign = sign_of_twice(system.pairing(w.rho, shift), "(rho, shift)");
  r.notes.push_back("shift " + format_ratvec(shift) + ", sign (-1)^{2(rho,shift)} = " + std::to_string(sign) +
                    ", index m = " + to_string(w.m));

  // z -> z + mu: each zeta^w picks up exp(2 pi i (mu, w)) = +-1.
  for (const auto& [key, c] : ps.coeffs) {
    ++r.compared;
    const int s = sign_of_twice(pair_doubled(system, shift, key.second), "(mu, w)");
    if (Rational(s) * c != Rational(sign) * c) {
      r.fail({"z -> z + mu", format_key(key), Rational(s) * c, Rational(sign) * c});
      break;
    }
  }

  // z -> z + lambda tau: coefficient of q^A zeta^w on the left is
  // psi[A - (lambda, w), w]; on the right it is
  // sign * psi[A + m (lambda, lambda) / 2, w + m lambda].
  const Rational half_norm_m = w.m * system.pairing(shift, shift) / 2;
  IntVec m_shift_doubled(static_cast<std::size_t>(system.dim));
  for (std::size_t i = 0; i < m_shift_doubled.size(); ++i) {
    const Rational x = 2 * w.m * shift[i];
    if (!is_integer(x)) throw Error("m * shift leaves the half lattice");
    m_shift_doubled[i] = x.get_num().get_si();
  }
  const auto lookup = [&](const Rational& a, const IntVec& z) -> std::optional<Rational> {
    if (!is_integer(a)) return Rational(0);
    const long e = a.get_num().get_si();
    if (e > order) return std::nullopt;
    const auto it = ps.coeffs.find({e, z});
    return it == ps.coeffs.end() ? Rational(0) : it->second;
  };
  std::set<std::pair<Rational, IntVec>> targets;
  for (const auto& [key, c] : ps.coeffs) {
    targets.insert({Rational(key.first) + pair_doubled(system, shift, key.second), key.second});
    IntVec z = key.second;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= m_shift_doubled[i];
    targets.insert({Rational(key.first) - half_norm_m, z});
  }
  for (const auto& [a, z] : targets) {
    const auto lhs = lookup(a - pair_doubled(system, shift, z), z);
    IntVec zr = z;
    for (std::size_t i = 0; i < zr.size(); ++i) zr[i] += m_shift_doubled[i];
    const auto rhs = lookup(a + half_norm_m, zr);
    if (!lhs || !rhs) continue;
    ++r.compared;
    if (*lhs != Rational(sign) * *rhs) {
      std::string mono = "q^" + to_string(a) + "*zeta^(";
      for (std::size_t i = 0; i < z.size(); ++i) mono += (i ? "," : "") + to_string(make_rational(z[i], 2));
      r.fail({"z -> z + lambda tau", mono + ")", *lhs, Rational(sign) * *rhs});
      break;
    }
  }
  return r;
}

VerifyReport theta1_pattern_check(std::int64_t order) {
  VerifyReport r;
  r.name = "theta1_pattern";
  r.order = {order};
  const std::pair<std::string, std::string> vars{"q", "zeta"};
  // Map psi (full nome, doubled zeta) to the half nome: q -> q'^2, and the
  // doubled zeta exponent is already the exponent of zeta' = zeta^{1/2}.
  const auto to_half = [&](const LatticeSeries& ps) {
    std::map<BiSeries::Key, Rational> t;
    for (const auto& [key, c] : ps.coeffs) t[{2 * key.first, key.second[0]}] = c;
    return BiSeries(std::move(t), BiWindow{2 * order + 1, std::nullopt, std::nullopt}, vars);
  };
  const BiWindow w{2 * order + 1, std::nullopt, std::nullopt};

  VectorSystem with_zero = sample("s1");
  with_zero.mult[{0}] = 1;
  const LatticeSeries ps0 = psi(with_zero, {Rational(1)}, order);
  if (ps0.prefactor != Rational(1, 8)) {
    r.fail({"prefactor", "q^(d/24)", ps0.prefactor, Rational(1, 8)});
  }
  // -theta_1 / i^-1 without q'^{1/4}: -sum (-1)^n q'^{n^2+n} zeta'^{2n+1}.
  std::map<BiSeries::Key, Rational> series_terms;
  for (std::int64_t n = -2 * order - 2; n <= 2 * order + 2; ++n) {
    if (n * n + n > 2 * order + 1) continue;
    series_terms[{n * n + n, 2 * n + 1}] = (n % 2 == 0) ? Rational(-1) : Rational(1);
  }
  r.compare("psi with c(0) = 1 against -theta_1 series", to_half(ps0).restricted(w),
            BiSeries(std::move(series_terms), w, vars));

  // Product pattern: (zeta'^-1 - zeta') prod (1 - q'^{2n}) (1 - q'^{2n} zeta'^2)(1 - q'^{2n} zeta'^-2)
  // without the (1 - q'^{2n}) factors must equal psi of the shipped system.
  BiSeries prod = BiSeries::monomial(1, 0, -1, w, vars) - BiSeries::monomial(1, 0, 1, w, vars);
  for (std::int64_t n = 1; 2 * n <= 2 * order + 1; ++n) {
    prod = prod * binomial_power(-1, 2 * n, 2, 1, w, vars);
    prod = prod * binomial_power(-1, 2 * n, -2, 1, w, vars);
  }
  const LatticeSeries ps = psi(sample("s1"), {Rational(1)}, order);
  r.compare("psi against theta_1 product factors", to_half(ps).restricted(w), prod);
  return r;
}

}  // namespace qmoon::vsys
