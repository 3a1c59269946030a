#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcsq/dense_matrix.hpp"

namespace gcsq {

struct CsvTable {
  std::vector<std::string> header;  // empty unless a header row was requested
  DenseMatrix values;
};

/// Parses comma-separated decimal reals. Blank lines are skipped. With
/// `has_header`, the first non-blank row is kept as column names. Ragged
/// rows and non-numeric cells throw, naming the 1-based line.
CsvTable read_csv(std::istream& in, bool has_header);
CsvTable read_csv_file(const std::filesystem::path& path, bool has_header);

/// Writes with 17 significant digits so values round-trip exactly.
void write_csv(std::ostream& out, const DenseMatrix& m,
               const std::vector<std::string>& header = {});
void write_csv_file(const std::filesystem::path& path, const DenseMatrix& m,
                    const std::vector<std::string>& header = {});

}  // namespace gcsq
