#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ltft::csv {

/// Shortest round-trip decimal text (17 significant digits max).
std::string number(double value);
std::string number(std::size_t value);

/// RFC-4180 quoting: fields with comma, quote, CR or LF are quoted and quotes doubled.
std::string quote(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// "# key=value;key=value" line recording a run configuration.
void write_comment(std::ostream& out, std::string_view text);

/// Splits one CSV record (no embedded newlines). Quoted fields are unescaped.
std::vector<std::string> split_row(std::string_view line);

}  // namespace ltft::csv
