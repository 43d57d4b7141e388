#include "confarea/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "confarea/error.hpp"

namespace confarea {

nlohmann::json to_json(const FormalSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) coeffs.push_back({e, c.real(), c.imag()});
  return {{"min_exp", s.min_exp()}, {"max_exp", s.max_exp()}, {"coeffs", coeffs}};
}

FormalSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("series: expected a JSON object");
  for (const char* key : {"min_exp", "max_exp", "coeffs"}) {
    if (!j.contains(key)) throw ParseError(std::string("series: missing field '") + key + "'");
  }
  if (!j["min_exp"].is_number_integer() || !j["max_exp"].is_number_integer()) {
    throw ParseError("series: min_exp and max_exp must be integers");
  }
  if (!j["coeffs"].is_array()) throw ParseError("series: coeffs must be an array");
  std::vector<FormalSeries::Term> terms;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number() || !entry[2].is_number()) {
      throw ParseError("series: each coefficient must be [exp, re, im]");
    }
    terms.emplace_back(entry[0].get<int>(), Complex{entry[1].get<double>(), entry[2].get<double>()});
  }
  try {
    return FormalSeries::make(terms, j["min_exp"].get<int>(), j["max_exp"].get<int>());
  } catch (const ConstructionError& e) {
    throw ParseError(std::string("series: ") + e.what());
  }
}

LaurentTail read_tail_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tail file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("tail file '" + path + "': " + e.what());
  }
  return LaurentTail::from_series(series_from_json(j));
}

nlohmann::json to_json(const AreaReport& report) {
  return {{"value", report.value},
          {"method", std::string(to_string(report.method))},
          {"order", report.order},
          {"est_error", report.est_error},
          {"warnings", report.warnings}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace confarea
