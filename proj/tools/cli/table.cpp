#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace emlab::cli {

Cell exact_cell(const Int& v) { return Exact{to_string(v)}; }
Cell exact_cell(const Rat& v) { return Exact{to_string(v)}; }

Cell int_cell(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return Exact{to_string(v)};
}

Cell float_cell(double v) {
  if (!std::isfinite(v)) return std::monostate{};
  return v;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row width does not match header");
  }
  rows.push_back(std::move(row));
}

std::string format_float(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_text(const Cell& c, const OutputFormat& fmt) {
  struct Visitor {
    const OutputFormat& fmt;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const Exact& e) const { return e.text; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_float(v, fmt.decimal_digits); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return csv_escape(std::visit(Visitor{fmt}, c));
}

nlohmann::ordered_json json_value(const Cell& c, const OutputFormat& fmt) {
  struct Visitor {
    const OutputFormat& fmt;
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(const Exact& e) const { return e.text; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      return std::stod(format_float(v, fmt.decimal_digits));
    }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{fmt}, c);
}

}  // namespace

void write_csv(const Table& t, const OutputFormat& fmt, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_escape(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_text(row[i], fmt);
    }
    out << '\n';
  }
}

void write_json(const Table& t, const OutputFormat& fmt, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = t.command;
  doc["params"] = t.params;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_value(row[i], fmt);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

void write_table(const Table& t, const OutputFormat& fmt, std::ostream& out) {
  if (fmt.format == Format::kJson) {
    write_json(t, fmt, out);
  } else {
    write_csv(t, fmt, out);
  }
}

}  // namespace emlab::cli
