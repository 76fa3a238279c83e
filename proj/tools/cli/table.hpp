#pragma once

// Row-oriented result tables and their CSV / JSON serializations.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "emlab/arith.hpp"

namespace emlab::cli {

enum class Format { kCsv, kJson };

struct OutputFormat {
  Format format = Format::kCsv;
  int decimal_digits = 6;
  bool exact_column = false;
};

// Text is emitted verbatim (a JSON string); Exact is a big value rendered as
// a decimal or n/d string; Float honours decimal_digits; empty is null.
struct Exact {
  std::string text;
};

using Cell = std::variant<std::monostate, std::string, Exact, std::int64_t,
                          double, bool>;

Cell exact_cell(const Int& v);
Cell exact_cell(const Rat& v);
// Small integers become JSON numbers, larger ones stay exact strings.
Cell int_cell(const Int& v);
// NaN and infinities become empty cells.
Cell float_cell(double v);

struct Table {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

inline constexpr const char* kSchemaVersion = "1";

std::string format_float(double v, int digits);
void write_csv(const Table& t, const OutputFormat& fmt, std::ostream& out);
void write_json(const Table& t, const OutputFormat& fmt, std::ostream& out);
void write_table(const Table& t, const OutputFormat& fmt, std::ostream& out);

}  // namespace emlab::cli
