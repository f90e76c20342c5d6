#include "qmoon/report.hpp"

#include <algorithm>
#include <set>

namespace qmoon {

void VerifyReport::fail(Mismatch mismatch) {
  if (!first_mismatch) first_mismatch = std::move(mismatch);
  passed = false;
}

bool VerifyReport::compare(const std::string& part, const QSeries& lhs, const QSeries& rhs) {
  const std::int64_t top = common_trunc(lhs, rhs);
  std::int64_t low = top;
  if (auto v = lhs.valuation()) low = std::min(low, *v);
  if (auto v = rhs.valuation()) low = std::min(low, *v);
  compared += std::max<std::int64_t>(top - low + 1, 0);
  const auto m = qmoon::first_mismatch(lhs, rhs);
  if (!m) return true;
  std::string mono = lhs.var();
  if (m->exponent != 1) mono += "^" + std::to_string(m->exponent);
  if (m->exponent == 0) mono = "1";
  if (lhs.prefactor() != 0) mono = lhs.var() + "^(" + to_string(lhs.prefactor()) + ")*" + mono;
  fail(Mismatch{part, mono, m->lhs, m->rhs});
  return false;
}

bool VerifyReport::compare(const std::string& part, const BiSeries& lhs, const BiSeries& rhs) {
  std::set<BiSeries::Key> keys;
  for (const auto& [k, c] : lhs.terms()) keys.insert(k);
  for (const auto& [k, c] : rhs.terms()) keys.insert(k);
  compared += static_cast<std::int64_t>(keys.size());
  const auto m = qmoon::first_mismatch(lhs, rhs);
  if (!m) return true;
  fail(Mismatch{part, format_monomial(m->monomial, lhs.vars()), m->lhs, m->rhs});
  return false;
}

Json to_json(const VerifyReport& report) {
  Json out;
  out["name"] = report.name;
  out["order"] = report.order;
  out["passed"] = report.passed;
  if (report.first_mismatch) {
    const auto& m = *report.first_mismatch;
    out["first_mismatch"] = Json{{"part", m.part},
                                 {"monomial", m.monomial},
                                 {"lhs", to_string(m.lhs)},
                                 {"rhs", to_string(m.rhs)}};
  } else {
    out["first_mismatch"] = nullptr;
  }
  out["compared"] = report.compared;
  out["notes"] = report.notes;
  return out;
}

std::string format_report(const VerifyReport& report) {
  std::string out = report.name + ": " + (report.passed ? "passed" : "FAILED");
  out += " (order";
  for (auto o : report.order) out += " " + std::to_string(o);
  out += ", " + std::to_string(report.compared) + " coefficients compared)";
  if (report.first_mismatch) {
    const auto& m = *report.first_mismatch;
    out += "\n  first mismatch";
    if (!m.part.empty()) out += " in " + m.part;
    out += " at " + m.monomial + ": lhs " + to_string(m.lhs) + ", rhs " + to_string(m.rhs);
  }
  for (const auto& note : report.notes) out += "\n  note: " + note;
  return out;
}

}  // namespace qmoon
