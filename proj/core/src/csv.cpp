#include "rislink/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "rislink/errors.hpp"

namespace rislink {

std::string format_g9(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string CsvTable::to_string() const {
  std::string out;
  out.reserve((rows.size() + 1) * (header.size() + 8));
  out += header;
  out += '\n';
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f.good()) {
    throw IoError("cannot open for writing: " + path);
  }
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f.good()) {
    throw IoError("write failed: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f.good()) {
    throw IoError("cannot open for reading: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ParsedCsv parse_csv(const std::string& content) {
  ParsedCsv out;
  std::istringstream ss(content);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (first) {
      out.columns = split_fields(line);
      first = false;
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    std::vector<std::optional<double>> nums;
    nums.reserve(fields.size());
    for (const std::string& f : fields) {
      if (f.empty()) {
        nums.push_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec == std::errc{} && res.ptr == f.data() + f.size()) {
        nums.push_back(v);
      } else if (f == "inf") {
        nums.push_back(std::numeric_limits<double>::infinity());
      } else if (f == "-inf") {
        nums.push_back(-std::numeric_limits<double>::infinity());
      } else {
        nums.push_back(std::nullopt);
      }
    }
    out.raw.push_back(fields);
    out.numeric.push_back(std::move(nums));
  }
  return out;
}

}  // namespace rislink
