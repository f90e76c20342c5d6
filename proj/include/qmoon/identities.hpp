#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmoon/biseries.hpp"
#include "qmoon/report.hpp"

namespace qmoon::identities {

// Labels accepted by verify(), in suite order.
const std::vector<std::string>& names();

// Expands both sides of the named identity independently to q-order `order`
// (bivariate identities also bound the second variable by +-order) and
// compares them coefficient by coefficient.
VerifyReport verify(std::string_view name, std::int64_t order);
std::vector<VerifyReport> verify_all(std::int64_t order);

// Both sides of the triple product as series in (q, z), exposed for the
// specialization checks.
BiSeries triple_sum_side(std::int64_t order);
BiSeries triple_product_side(std::int64_t order);

}  // namespace qmoon::identities
