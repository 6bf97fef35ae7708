#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ptcalogero::io {

/// Blank, number, integer or text.
using Cell = std::variant<std::monostate, double, long long, std::string>;

/// Shortest decimal string that reads back to the same double. NaN and
/// infinities map to "nan", "inf", "-inf"; negative zero prints as "0".
std::string format_number(double v);

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(const Cell& c);

/// Column-oriented result with run metadata kept apart from the data.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// Header line plus one line per row, CRLF-free ("\n" terminated).
void write_csv(std::ostream& os, const Table& t);

/// {"metadata": {...}, "data": {"<column>": [...], ...}}; blanks become null.
nlohmann::ordered_json to_json(const Table& t);

}  // namespace ptcalogero::io
