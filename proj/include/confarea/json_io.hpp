#pragma once

#include <string>

#include "confarea/area.hpp"
#include "confarea/series.hpp"
#include "json.hpp"

namespace confarea {

/// {"min_exp": int, "max_exp": int, "coeffs": [[exp, re, im], ...]}, exponents ascending.
nlohmann::json to_json(const FormalSeries& s);

/// Throws ParseError on missing fields, wrong types, or construction errors.
FormalSeries series_from_json(const nlohmann::json& j);

/// Reads a Laurent tail (series JSON with exponents <= 1) from a file.
/// Throws ParseError on I/O, JSON syntax, or schema problems.
LaurentTail read_tail_file(const std::string& path);

/// {"value", "method", "order", "est_error", "warnings"}.
nlohmann::json to_json(const AreaReport& report);

/// 17 significant digits, '.' separator, independent of the C++ locale.
std::string format_double(double x);

}  // namespace confarea
