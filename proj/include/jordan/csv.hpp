#ifndef JORDAN_CSV_HPP
#define JORDAN_CSV_HPP

#include "jordan/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jordan {

using CsvRow = std::vector<std::string>;

//! Parses comma-separated text with double-quoted fields ("" escapes a quote).
//! Blank lines and lines starting with '#' are skipped.
inline std::vector<CsvRow> parse_csv(std::string_view text, const std::string& name = "csv")
{
  std::vector<CsvRow> rows;
  std::size_t i = 0, line = 1;
  while (i < text.size()) {
    // skip blank and comment lines
    std::size_t eol = text.find('\n', i);
    std::string_view raw = text.substr(i, eol == std::string_view::npos ? std::string_view::npos : eol - i);
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') {
      i = eol == std::string_view::npos ? text.size() : eol + 1;
      ++line;
      continue;
    }
    CsvRow row;
    std::string field;
    bool quoted = false, was_quoted = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n')
            ++line;
          field += c;
        }
      } else if (c == '"') {
        if (!field.empty())
          fail(ErrorKind::DataFormat, name + ":" + std::to_string(line) + ": stray quote");
        quoted = was_quoted = true;
      } else if (c == ',') {
        row.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\n') {
        break;
      } else if (c != '\r') {
        if (was_quoted)
          fail(ErrorKind::DataFormat, name + ":" + std::to_string(line) + ": text after closing quote");
        field += c;
      }
    }
    if (quoted)
      fail(ErrorKind::DataFormat, name + ": unterminated quote");
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
    ++i;
    ++line;
  }
  return rows;
}

/// FNV-1a 64-bit digest as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes)
{
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

} // namespace jordan

#endif // JORDAN_CSV_HPP
