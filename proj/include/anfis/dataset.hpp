#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace anfis {

/// Calendar month, compared chronologically.
struct YearMonth {
    int year = 0;
    int month = 1; // 1..12

    auto operator<=>(const YearMonth&) const = default;

    YearMonth next() const;
    std::string str() const; // "YYYY-MM"

    /// Parses "YYYY-MM"; throws DataError on malformed input.
    static YearMonth parse(const std::string& text);
};

struct SeriesPoint {
    YearMonth stamp;
    double value = 0.0;
};

/// Supervised dataset: each row is a vector of inputs (for lag windows,
/// oldest lag first) paired with a scalar target. Rows keep chronological
/// order; stamps (target month per row) are optional for non-series data.
struct Dataset {
    std::vector<std::vector<double>> rows;
    std::vector<double> targets;
    std::vector<YearMonth> stamps;
    std::size_t arity = 0;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }

    double column_min(std::size_t col) const;
    double column_max(std::size_t col) const;

    void push_row(std::vector<double> row, double target);

    /// Throws DataError if row shapes, target count, or stamp count are
    /// inconsistent.
    void validate() const;
};

} // namespace anfis
