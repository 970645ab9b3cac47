#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace betheotto {

// One CSV cell. monostate renders as an empty field (used for "undefined").
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

// Column-named result table for sweeps. Rows are kept in insertion order and
// serialization is deterministic: identical inputs give byte-identical CSV.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    SweepTable() = default;
    explicit SweepTable(std::vector<std::string> cols) : columns(std::move(cols)) {}

    void append_row(std::vector<Cell> row);
    std::size_t size() const { return rows.size(); }

    // Column index by name; throws std::out_of_range for unknown names.
    std::size_t column_index(const std::string& name) const;
    const Cell& at(std::size_t row, const std::string& column) const;
};

// Shortest round-trip decimal form (std::to_chars), locale-independent.
std::string format_double(double v);

std::string format_cell(const Cell& c);

// RFC-4180-style escaping: fields containing comma, quote or newline are
// quoted, embedded quotes doubled. Header row always written, '\n' endings.
void write_csv(const SweepTable& table, std::ostream& out);
std::string to_csv(const SweepTable& table);

} // namespace betheotto
