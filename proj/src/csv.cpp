#include "standby/csv.hpp"

#include <charconv>
#include <fstream>

#include "standby/error.hpp"

namespace standby {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

}  // namespace

std::size_t CsvTable::col(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  raise(Errc::MalformedRow, file + ": missing column '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::MissingFile, path.string());
  CsvTable t;
  t.file = path.filename().string();
  std::string line;
  if (!std::getline(in, line)) raise(Errc::MalformedRow, t.file + ": empty file");
  t.header = split_line(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size())
      raise(Errc::MalformedRow, t.file + ":" + std::to_string(lineno) + ": expected " +
                                    std::to_string(t.header.size()) + " fields, got " +
                                    std::to_string(cells.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot write " + path.string());
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit(table.header);
  for (const auto& r : table.rows) emit(r);
  if (!out) raise(Errc::IoError, "write failed: " + path.string());
}

double csv_double(const CsvTable& t, std::size_t row, std::size_t col) {
  const std::string& s = t.rows[row][col];
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    raise(Errc::MalformedRow,
          t.file + ":" + std::to_string(t.line_of(row)) + ": bad number '" + s + "'");
  return v;
}

long csv_long(const CsvTable& t, std::size_t row, std::size_t col) {
  const std::string& s = t.rows[row][col];
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    raise(Errc::MalformedRow,
          t.file + ":" + std::to_string(t.line_of(row)) + ": bad integer '" + s + "'");
  return v;
}

}  // namespace standby
