#pragma once

// Tabular output shared by every subcommand. CSV files carry `# key=value`
// metadata lines, then a header row, then data rows; JSON mirrors this as
// {"meta": {...}, "rows": [{...}, ...]}.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dipolechain::cli {

using Cell = std::variant<std::monostate, std::string, double, std::int64_t, std::uint64_t>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

enum class Format { Csv, Json };

/// Fixed 12-significant-digit rendering used for every floating value.
std::string format_double(double v);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

/// Metadata of a CSV or JSON file previously produced by write_table.
std::vector<std::pair<std::string, std::string>> read_meta(const std::string& content);

}  // namespace dipolechain::cli
