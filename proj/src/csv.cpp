#include "nls/csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <system_error>

#include "nls/errors.hpp"

namespace nls {

std::string format_significant(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

CsvRow to_csv_row(const SweepRow& row, bool two_sided) {
  CsvRow c;
  c.E = row.E;
  c.k = row.result.k;
  c.R_left = row.result.R_left;
  c.R_right = row.result.R_right;
  c.T_left = row.result.T_left;
  c.T_right = row.result.T_right;
  c.sum_left = row.result.sum_left;
  c.sum_right = row.result.sum_right;
  c.W1 = row.result.endpoint.W1;
  if (two_sided) c.W2 = row.result.endpoint.W2;
  c.converged = row.converged;
  return c;
}

void write_csv(std::ostream& os, const SweepTable& table, bool two_sided) {
  os << kCsvHeader << '\n';
  for (const SweepRow& row : table.rows) {
    const CsvRow c = to_csv_row(row, two_sided);
    os << format_significant(c.E) << ',' << format_significant(c.k) << ','
       << format_significant(c.R_left) << ',' << format_significant(c.R_right) << ','
       << format_significant(c.T_left) << ',' << format_significant(c.T_right) << ','
       << format_significant(c.sum_left) << ',' << format_significant(c.sum_right) << ','
       << format_significant(c.W1) << ',' << (c.W2 ? format_significant(*c.W2) : std::string())
       << ',' << (c.converged ? "true" : "false") << '\n';
  }
}

std::string csv_string(const SweepTable& table, bool two_sided) {
  std::ostringstream os;
  write_csv(os, table, two_sided);
  return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, int lineno) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("csv line " + std::to_string(lineno) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<CsvRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw ConfigError("csv: missing or unexpected header line");
  }
  std::vector<CsvRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 11) {
      throw ConfigError("csv line " + std::to_string(lineno) + ": expected 11 fields, got " +
                        std::to_string(f.size()));
    }
    CsvRow c;
    c.E = parse_double(f[0], lineno);
    c.k = parse_double(f[1], lineno);
    c.R_left = parse_double(f[2], lineno);
    c.R_right = parse_double(f[3], lineno);
    c.T_left = parse_double(f[4], lineno);
    c.T_right = parse_double(f[5], lineno);
    c.sum_left = parse_double(f[6], lineno);
    c.sum_right = parse_double(f[7], lineno);
    c.W1 = parse_double(f[8], lineno);
    if (!f[9].empty()) c.W2 = parse_double(f[9], lineno);
    if (f[10] == "true") {
      c.converged = true;
    } else if (f[10] == "false") {
      c.converged = false;
    } else {
      throw ConfigError("csv line " + std::to_string(lineno) + ": bad boolean '" + f[10] + "'");
    }
    rows.push_back(c);
  }
  return rows;
}

}  // namespace nls
