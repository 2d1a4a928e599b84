#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nls/sweep.hpp"

namespace nls {

inline constexpr const char* kCsvHeader =
    "E,k,R_left,R_right,T_left,T_right,sum_left,sum_right,W1,W2,converged";

// One emitted line: fixed column order, 12 significant digits. W2 is empty
// for the half-interval geometry.
struct CsvRow {
  double E = 0.0;
  double k = 0.0;
  double R_left = 0.0, R_right = 0.0;
  double T_left = 0.0, T_right = 0.0;
  double sum_left = 0.0, sum_right = 0.0;
  double W1 = 0.0;
  std::optional<double> W2;
  bool converged = true;
};

// Locale-independent decimal text with 12 significant digits.
std::string format_significant(double v);

CsvRow to_csv_row(const SweepRow& row, bool two_sided);

void write_csv(std::ostream& os, const SweepTable& table, bool two_sided);
std::string csv_string(const SweepTable& table, bool two_sided);

// Parses text produced by write_csv; throws ConfigError on a malformed
// header or row.
std::vector<CsvRow> read_csv(std::istream& is);

}  // namespace nls
