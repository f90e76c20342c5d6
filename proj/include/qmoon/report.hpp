#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmoon/biseries.hpp"
#include "qmoon/qseries.hpp"
#include "qmoon/rational.hpp"
#include "qmoon/series_json.hpp"

namespace qmoon {

struct Mismatch {
  std::string part;      // which sub-identity, empty for single checks
  std::string monomial;  // e.g. "q^5" or "q^3*z^-1"
  Rational lhs;
  Rational rhs;
};

// Outcome of a finite-order verification. passed is true exactly when
// first_mismatch is empty.
struct VerifyReport {
  std::string name;
  std::vector<std::int64_t> order;
  bool passed = true;
  std::optional<Mismatch> first_mismatch;
  std::vector<std::string> notes;
  std::int64_t compared = 0;

  // Compares lhs and rhs on their common known range and records the first
  // difference (if this report has none yet). Returns true on agreement.
  bool compare(const std::string& part, const QSeries& lhs, const QSeries& rhs);
  bool compare(const std::string& part, const BiSeries& lhs, const BiSeries& rhs);
  void fail(Mismatch mismatch);
};

Json to_json(const VerifyReport& report);
std::string format_report(const VerifyReport& report);

}  // namespace qmoon
