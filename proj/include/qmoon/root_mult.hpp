#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmoon/rational.hpp"
#include "qmoon/series_json.hpp"

namespace qmoon::roots {

// p(1 - norm/2), the multiplicity of a root of the given norm in HA_1^(1).
BigInt ha1_mult(std::int64_t norm);
// xi(3 - norm/2): level -2 multiplicities of E10.
BigInt e10_level2_mult(std::int64_t norm);
// p_24(1 - norm/2): root multiplicities of the fake monster Lie algebra.
BigInt fake_monster_mult(std::int64_t norm);

// p^(k)(n), the number of partitions of n into parts of k colours.
BigInt colored_partitions(unsigned colors, std::int64_t n);

enum class Algebra { e10_level2, fake_monster };
Algebra parse_algebra(const std::string& name);
std::string algebra_name(Algebra algebra);

struct MultRow {
  std::int64_t norm = 0;
  BigInt exact;
  BigInt bound;
  bool violation = false;  // exact > bound
};

struct MultReport {
  Algebra algebra = Algebra::fake_monster;
  std::int64_t colors = 0;  // l - 2 in the bound p^(l-2)
  std::vector<MultRow> rows;
  std::int64_t violations() const;
};

// Rows for even norms from 2 down to min_norm; empty when min_norm > 2.
MultReport frenkel_compare(Algebra algebra, std::int64_t min_norm);

Json to_json(const MultReport& report);
std::string format_report(const MultReport& report);

// I_13 by its ascending series in long double.
long double bessel_i13(long double x);

// Kloosterman-type sum over 0 <= h, h' < k with h h' = -1 mod k; for k = 1
// the single term h = h' = 0.
long double kloosterman(std::int64_t n, std::int64_t k);

// Partial Rademacher sum for p_24(1 + n) over k <= terms.
long double p24_rademacher(std::int64_t n, std::int64_t terms);

// p_24(1 + n) * sqrt(2) * n^{27/4} * exp(-4 pi sqrt(n)).
long double p24_asymptotic_ratio(std::int64_t n);

}  // namespace qmoon::roots
