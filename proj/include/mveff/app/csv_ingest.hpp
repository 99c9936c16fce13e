#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mveff/estimation.hpp"

namespace mveff::app {

/// Parsed return file: asset names from the header plus the sample.
struct ReturnTable {
  std::vector<std::string> assets;
  ReturnSample sample;
};

/// Comma-separated, UTF-8, one header row of asset names, then one row per
/// period of decimal returns (0.014 = 1.4%). Blank lines are skipped.
/// Throws ParseError naming the offending line and column, or SampleTooSmall
/// when there are not more periods than assets.
ReturnTable parse_returns(std::istream& in);

ReturnTable ingest_returns(const std::string& path);

/// Writes a sample in the same format (values with 9 significant digits).
void write_returns(std::ostream& out, const std::vector<std::string>& assets,
                   const MatrixXd& x);

}  // namespace mveff::app
