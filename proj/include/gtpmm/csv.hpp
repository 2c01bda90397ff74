#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtpmm {

// Minimal RFC 4180 reader: quoted fields, doubled quotes, CRLF, UTF-8 BOM.
// Rows keep their 1-based physical line number for error messages.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string file_name);

  const std::vector<std::string>& header() const { return header_; }
  // Index of a header column; throws ParseError if `required` and missing.
  std::optional<std::size_t> column(std::string_view name,
                                    bool required = true) const;

  // Reads the next non-blank row. Throws ParseError on a field-count
  // mismatch or an unterminated quote.
  bool next(std::vector<std::string>& row);
  std::size_t line() const { return row_line_; }
  const std::string& file() const { return file_; }

  [[noreturn]] void fail(const std::string& msg) const;

 private:
  bool read_record(std::vector<std::string>& out);

  std::istream& in_;
  std::string file_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
  std::size_t row_line_ = 0;
};

// Quotes a field if it contains a delimiter, quote, or line break.
std::string csv_escape(std::string_view field);

double parse_double(const CsvReader& csv, const std::string& text,
                    std::string_view what);

}  // namespace gtpmm
