#pragma once

#include <optional>
#include <string>
#include <vector>

namespace edasvm {

// RFC-4180 CSV: quoted fields may contain commas, doubled quotes and
// newlines; CRLF and LF both accepted; UTF-8 passes through untouched.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named header column, or nullopt.
  std::optional<std::size_t> column(const std::string& name) const;
};

CsvTable read_csv_file(const std::string& path);
CsvTable read_csv_string(const std::string& text);

// Quotes the field only when needed.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace edasvm
