#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

namespace mveff::app {

using Json = nlohmann::ordered_json;

/// Result of one command: the echoed parameters, scalar results and a table
/// of per-grid-point rows (each row an object with the same keys).
struct Report {
  std::string command;
  Json params = Json::object();
  Json summary = Json::object();
  Json rows = Json::array();
};

enum class Format { Json, Csv };

/// Number rounded to 9 significant digits. Non-finite values become the
/// strings "inf", "-inf" and "nan" since JSON has no literal for them.
Json num(double x);

/// %.9g rendering used for every numeric cell.
std::string format_number(double x);

/// JSON: the whole report, two-space indented.
/// CSV: the rows table with a header line; a report without rows is written
/// as key,value pairs of its summary.
void render(std::ostream& out, const Report& report, Format format);

}  // namespace mveff::app
