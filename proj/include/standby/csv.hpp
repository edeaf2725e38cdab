#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace standby {

/// In-memory CSV table. Comma-delimited, UTF-8, '\n' line endings, no quoting
/// (writers in this project never emit embedded commas).
struct CsvTable {
  std::string file;  // for error messages
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index of `name`; MalformedRow if absent.
  std::size_t col(const std::string& name) const;
  /// 1-based data line number of row r (header is line 1).
  std::size_t line_of(std::size_t r) const { return r + 2; }
};

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Parsers that raise MalformedRow with file/line context on failure.
double csv_double(const CsvTable& t, std::size_t row, std::size_t col);
long csv_long(const CsvTable& t, std::size_t row, std::size_t col);

}  // namespace standby
