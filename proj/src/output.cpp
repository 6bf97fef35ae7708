#include "ptcalogero/output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ptcalogero::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

std::string csv_field(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      q += '"';
      return q;
    }
  };
  return std::visit(Visitor{}, c);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw std::logic_error("write_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      const Cell& cell = row.at(c);
      if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        col.push_back(std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json());
      } else if (std::holds_alternative<long long>(cell)) {
        col.push_back(std::get<long long>(cell));
      } else if (std::holds_alternative<std::string>(cell)) {
        col.push_back(std::get<std::string>(cell));
      } else {
        col.push_back(nullptr);
      }
    }
    data[t.columns[c]] = std::move(col);
  }
  return {{"metadata", t.metadata}, {"data", data}};
}

}  // namespace ptcalogero::io
