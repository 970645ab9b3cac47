#include "betheotto/table.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace betheotto {

void SweepTable::append_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("row width does not match column count");
    rows.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw std::out_of_range("no such column: " + name);
}

const Cell& SweepTable::at(std::size_t row, const std::string& column) const {
    return rows.at(row).at(column_index(column));
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n\r") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out << field;
        return;
    }
    out << '"';
    for (char ch : field) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

} // namespace

void write_csv(const SweepTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        write_field(out, table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            write_field(out, format_cell(row[i]));
        }
        out << '\n';
    }
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream os;
    write_csv(table, os);
    return os.str();
}

} // namespace betheotto
