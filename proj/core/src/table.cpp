#include "scramble/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace scramble {

namespace {

std::string escape_csv(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // snprintf honors the global C locale, which this library never changes;
    // normalize defensively in case the host application did.
    std::string s(buf);
    for (char& c : s)
        if (c == ',') c = '.';
    return s;
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("row width does not match column count");
    rows_.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += escape_csv(columns_[c]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (const auto* d = std::get_if<double>(&row[c]))
                out += format_double(*d);
            else if (const auto* i = std::get_if<std::int64_t>(&row[c]))
                out += std::to_string(*i);
            else
                out += escape_csv(std::get<std::string>(row[c]));
        }
        out += '\n';
    }
    return out;
}

} // namespace scramble
