#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmoon/report.hpp"
#include "qmoon/series_json.hpp"

namespace qmoon::vsys {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

// Finite multiset of vectors of a positive-definite integral lattice K
// with Gram matrix `gram`; mult[v] is the multiplicity c(v), and the zero
// vector may carry a multiplicity as well.
struct VectorSystem {
  std::int64_t dim = 0;
  std::vector<IntVec> gram;
  std::map<IntVec, std::int64_t> mult;

  Rational pairing(const RatVec& a, const RatVec& b) const;
  std::int64_t c(const IntVec& v) const;
  std::int64_t c0() const;
};

VectorSystem from_json(const Json& json);
Json to_json(const VectorSystem& system);

// s1: gram (2) with +-1; trivial: gram (2), no vectors; s2: gram diag(2, 2)
// with +-e1, +-e2.
VectorSystem sample(const std::string& name);
std::vector<std::string> sample_names();

struct Validation {
  bool valid = true;
  std::vector<std::string> problems;
  // alpha with sum c(v) (Sv)(Sv)^T = alpha S, when it exists.
  std::optional<Rational> scalar;
};

Validation validate(const VectorSystem& system);

struct WeylData {
  RatVec chamber_vector;
  RatVec rho;
  std::int64_t d = 0;
  Rational k;
  Rational m;
};

// Throws qmoon::Error when lambda is orthogonal to a nonzero support vector.
WeylData weyl_data(const VectorSystem& system, const RatVec& lambda);
// An integral vector pairing nonzero with every nonzero support vector.
RatVec choose_chamber_vector(const VectorSystem& system);

// Series in q with Laurent monomials zeta^w, w on the half lattice; keys
// carry 2w. Coefficients are exact through q^trunc, relative to
// q^prefactor.
struct LatticeSeries {
  using Key = std::pair<std::int64_t, IntVec>;
  Rational prefactor;
  std::int64_t trunc = 0;
  std::map<Key, Rational> coeffs;

  Rational coeff(std::int64_t q_exp, const IntVec& doubled_zeta) const;
};

Json to_json(const LatticeSeries& series);

// q^{d/24} zeta^{-rho} prod over positive affine vectors (v, n) of
// (1 - q^n zeta^v), through q^order.
LatticeSeries psi(const VectorSystem& system, const RatVec& lambda, std::int64_t order);

// z -> z + mu and z -> z + shift * tau, compared against the stated
// transformation factors wherever both sides are known.
VerifyReport elliptic_transform_check(const VectorSystem& system, const RatVec& lambda,
                                      const RatVec& shift, std::int64_t order);

// Compares psi of the s1 system (with one zero vector added, and as
// shipped) against theta_1's series and product expansions in the half nome.
VerifyReport theta1_pattern_check(std::int64_t order);

}  // namespace qmoon::vsys
