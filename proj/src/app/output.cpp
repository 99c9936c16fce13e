#include "mveff/app/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mveff::app {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

Json num(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void render_csv(std::ostream& out, const Report& report) {
  if (report.rows.empty()) {
    out << "key,value\n";
    for (const auto& [key, value] : report.summary.items()) {
      out << key << ',' << csv_cell(value) << '\n';
    }
    return;
  }
  const Json& first = report.rows.front();
  bool lead = true;
  for (const auto& [key, value] : first.items()) {
    out << (lead ? "" : ",") << key;
    lead = false;
  }
  out << '\n';
  for (const Json& row : report.rows) {
    lead = true;
    for (const auto& [key, value] : first.items()) {
      out << (lead ? "" : ",") << csv_cell(row.contains(key) ? row.at(key) : Json());
      lead = false;
    }
    out << '\n';
  }
}

}  // namespace

void render(std::ostream& out, const Report& report, Format format) {
  if (format == Format::Csv) {
    render_csv(out, report);
    return;
  }
  Json doc;
  doc["command"] = report.command;
  doc["params"] = report.params;
  doc["summary"] = report.summary;
  doc["rows"] = report.rows;
  out << doc.dump(2) << '\n';
}

}  // namespace mveff::app
