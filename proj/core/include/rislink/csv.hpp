#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rislink {

// Shortest decimal form with up to 9 significant digits; locale-independent.
std::string format_g9(double v);

// Comma-separated, UTF-8, LF line endings, one header line.
struct CsvTable {
  std::string header;
  std::vector<std::string> rows;

  std::string to_string() const;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

struct ParsedCsv {
  std::vector<std::string> columns;
  // cells[row][col]; empty optional for an empty field
  std::vector<std::vector<std::optional<double>>> numeric;
  std::vector<std::vector<std::string>> raw;
};

ParsedCsv parse_csv(const std::string& content);

}  // namespace rislink
