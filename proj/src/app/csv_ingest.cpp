#include "mveff/app/csv_ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "mveff/error.hpp"

namespace mveff::app {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ReturnTable parse_returns(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::string> assets;

  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    assets = split(line);
    break;
  }
  if (assets.empty()) throw Error(ErrorCode::ParseError, "empty input: missing header row");
  for (std::size_t c = 0; c < assets.size(); ++c) {
    if (assets[c].empty()) parse_error(line_no, "empty asset name in column " + std::to_string(c + 1));
  }

  const std::size_t k = assets.size();
  std::vector<double> values;
  int rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != k) {
      parse_error(line_no, "data row " + std::to_string(rows + 1) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(k));
    }
    for (std::size_t c = 0; c < k; ++c) {
      const std::string& cell = cells[c];
      double v = 0.0;
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      if (!cell.empty() && *begin == '+') ++begin;
      const auto [ptr, ec] = std::from_chars(begin, end, v);
      if (cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        parse_error(line_no, "column " + std::to_string(c + 1) + " (" + assets[c] +
                                 "): not a number: '" + cell + "'");
      }
      values.push_back(v);
    }
    ++rows;
  }

  MatrixXd x(rows, static_cast<Eigen::Index>(k));
  for (int r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) x(r, static_cast<Eigen::Index>(c)) = values[r * k + c];
  }
  return {std::move(assets), ReturnSample(std::move(x))};
}

ReturnTable ingest_returns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_returns(in);
}

void write_returns(std::ostream& out, const std::vector<std::string>& assets,
                   const MatrixXd& x) {
  for (std::size_t c = 0; c < assets.size(); ++c) out << (c ? "," : "") << assets[c];
  out << '\n';
  char buf[32];
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.9g", x(r, c));
      out << (c ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace mveff::app
