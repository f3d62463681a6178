#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace scramble {

using Cell = std::variant<double, std::int64_t, std::string>;

// Column-schema'd rows destined for CSV. Writing is byte-deterministic:
// doubles at 17 significant digits with '.' decimal regardless of locale.
class ResultTable {
  public:
    explicit ResultTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }

    // Header line plus one line per row, '\n' endings, UTF-8. Fields are
    // quoted per RFC 4180 only when they contain a comma, quote, or newline.
    std::string to_csv() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

// %.17g with the C locale's '.' decimal point.
std::string format_double(double v);

} // namespace scramble
