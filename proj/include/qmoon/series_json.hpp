#pragma once

#include "json.hpp"
#include "qmoon/biseries.hpp"
#include "qmoon/exponents.hpp"
#include "qmoon/qseries.hpp"

namespace qmoon {

using Json = nlohmann::ordered_json;

// {"var","nome","prefactor","trunc","coeffs"}; trunc is null for exact
// polynomials and coefficient keys appear in ascending numeric order.
Json to_json(const QSeries& series);
QSeries qseries_from_json(const Json& json);

// Keys are "i,j"; the window is stored under "window".
Json to_json(const BiSeries& series);
BiSeries biseries_from_json(const Json& json);

Json to_json(const ExponentTable& table);

}  // namespace qmoon
