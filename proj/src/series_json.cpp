#include "qmoon/series_json.hpp"

#include <charconv>

#include "qmoon/error.hpp"

namespace qmoon {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error("invalid integer '" + std::string(text) + "'");
  return value;
}

Rational rational_field(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error("coefficient must be a string or an integer");
}

Json optional_int(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::int64_t> read_optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

}  // namespace

Json to_json(const QSeries& series) {
  Json out;
  out["var"] = series.var();
  out["nome"] = std::string(to_string(series.nome()));
  out["prefactor"] = to_string(series.prefactor());
  out["trunc"] = series.is_exact() ? Json(nullptr) : Json(series.trunc());
  Json coeffs = Json::object();
  for (const auto& [e, c] : series.terms()) coeffs[std::to_string(e)] = to_string(c);
  out["coeffs"] = std::move(coeffs);
  return out;
}

QSeries qseries_from_json(const Json& json) {
  try {
    const std::string var = json.value("var", std::string("q"));
    const Nome nome = parse_nome(json.value("nome", std::string("full")));
    const Rational prefactor =
        json.contains("prefactor") ? rational_field(json.at("prefactor")) : Rational(0);
    if (24 % prefactor.get_den() != 0) throw Error("prefactor denominator must divide 24");
    const std::int64_t trunc = (!json.contains("trunc") || json.at("trunc").is_null())
                                   ? QSeries::kExact
                                   : json.at("trunc").get<std::int64_t>();
    std::map<std::int64_t, Rational> coeffs;
    for (const auto& [key, value] : json.at("coeffs").items()) {
      const std::int64_t e = parse_int(key);
      if (e > trunc) throw Error("coefficient exponent " + key + " exceeds trunc");
      coeffs[e] = rational_field(value);
    }
    return QSeries(coeffs, trunc, nome, prefactor, var);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const BiSeries& series) {
  Json out;
  out["vars"] = Json::array({series.vars().first, series.vars().second});
  Json window;
  window["max_first"] = series.window().max_first;
  window["min_second"] = optional_int(series.window().min_second);
  window["max_second"] = optional_int(series.window().max_second);
  out["window"] = std::move(window);
  Json coeffs = Json::object();
  for (const auto& [k, c] : series.terms()) {
    coeffs[std::to_string(k.first) + "," + std::to_string(k.second)] = to_string(c);
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

BiSeries biseries_from_json(const Json& json) {
  try {
    std::pair<std::string, std::string> vars{"p", "q"};
    if (json.contains("vars")) {
      vars = {json.at("vars").at(0).get<std::string>(), json.at("vars").at(1).get<std::string>()};
    }
    const Json& w = json.at("window");
    const BiWindow window{w.at("max_first").get<std::int64_t>(), read_optional_int(w, "min_second"),
                          read_optional_int(w, "max_second")};
    std::map<BiSeries::Key, Rational> terms;
    for (const auto& [key, value] : json.at("coeffs").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error("BiSeries key '" + key + "' lacks a comma");
      terms[{parse_int(std::string_view(key).substr(0, comma)),
             parse_int(std::string_view(key).substr(comma + 1))}] = rational_field(value);
    }
    return BiSeries(std::move(terms), window, vars);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed BiSeries JSON: ") + e.what());
  }
}

Json to_json(const ExponentTable& table) {
  Json out;
  out["h"] = to_string(table.leading_power);
  out["order"] = table.order();
  Json exps = Json::object();
  for (std::int64_t n = 1; n <= table.order(); ++n) exps[std::to_string(n)] = to_string(table.at(n));
  out["exponents"] = std::move(exps);
  return out;
}

}  // namespace qmoon
