#include "gtpmm/csv.hpp"

#include <charconv>
#include <cmath>

#include "gtpmm/errors.hpp"

namespace gtpmm {

CsvReader::CsvReader(std::istream& in, std::string file_name)
    : in_(in), file_(std::move(file_name)) {
  if (!read_record(header_)) fail("missing header row");
  if (!header_.empty() && header_[0].starts_with("\xEF\xBB\xBF"))
    header_[0].erase(0, 3);
  for (auto& h : header_) {
    while (!h.empty() && (h.back() == ' ' || h.back() == '\t')) h.pop_back();
    while (!h.empty() && (h.front() == ' ' || h.front() == '\t')) h.erase(0, 1);
  }
}

void CsvReader::fail(const std::string& msg) const {
  throw ParseError(file_, row_line_, msg);
}

std::optional<std::size_t> CsvReader::column(std::string_view name,
                                             bool required) const {
  for (std::size_t i = 0; i < header_.size(); ++i)
    if (header_[i] == name) return i;
  if (required)
    throw ParseError(file_, 1, "missing column '" + std::string(name) + "'");
  return std::nullopt;
}

bool CsvReader::read_record(std::vector<std::string>& out) {
  out.clear();
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_;
  row_line_ = line_;

  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size() || (!quoted && line[i] == '\r' && i + 1 == line.size())) {
      if (quoted) {
        std::string more;
        if (!std::getline(in_, more)) fail("unterminated quoted field");
        ++line_;
        field.push_back('\n');
        line = std::move(more);
        i = 0;
        continue;
      }
      out.push_back(std::move(field));
      return true;
    }
    const char ch = line[i++];
    if (quoted) {
      if (ch == '"') {
        if (i < line.size() && line[i] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
}

bool CsvReader::next(std::vector<std::string>& row) {
  while (read_record(row)) {
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != header_.size())
      fail("expected " + std::to_string(header_.size()) + " fields, found " +
           std::to_string(row.size()));
    return true;
  }
  return false;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

double parse_double(const CsvReader& csv, const std::string& text,
                    std::string_view what) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value))
    csv.fail("invalid " + std::string(what) + " '" + text + "'");
  return value;
}

}  // namespace gtpmm
