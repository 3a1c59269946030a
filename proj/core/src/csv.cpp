#include "gcsq/csv.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gcsq/error.hpp"

namespace gcsq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_real(std::string_view cell, std::size_t line_no) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (cell.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": non-numeric cell '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

CsvTable read_csv(std::istream& in, bool has_header) {
  CsvTable table;
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  bool header_pending = has_header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (header_pending) {
      for (auto f : fields) table.header.emplace_back(f);
      cols = fields.size();
      header_pending = false;
      continue;
    }
    if (cols == 0) cols = fields.size();
    if (fields.size() != cols) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(cols) + " fields, found " +
                                         std::to_string(fields.size()));
    }
    for (auto f : fields) values.push_back(parse_real(f, line_no));
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::kParse, "CSV input contains no data rows");
  table.values = DenseMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) table.values(r, c) = values[r * cols + c];
  }
  return table;
}

CsvTable read_csv_file(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  try {
    return read_csv(in, has_header);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_csv(std::ostream& out, const DenseMatrix& m, const std::vector<std::string>& header) {
  if (!header.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
  }
  std::ostringstream cell;
  cell << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cell.str({});
      cell << m(r, c);
      out << (c ? "," : "") << cell.str();
    }
    out << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, const DenseMatrix& m,
                    const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  write_csv(out, m, header);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

}  // namespace gcsq
