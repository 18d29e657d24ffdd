#include "anfis/dataset.hpp"
#include "anfis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace anfis {

YearMonth YearMonth::next() const {
    if (month == 12) return {year + 1, 1};
    return {year, month + 1};
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

YearMonth YearMonth::parse(const std::string& text) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &y, &m, &extra) != 2 || text.size() < 6) {
        throw DataError("date '" + text + "' is not in YYYY-MM form");
    }
    if (m < 1 || m > 12) {
        throw DataError("date '" + text + "' has month outside 1..12");
    }
    return {y, m};
}

double Dataset::column_min(std::size_t col) const {
    if (empty() || col >= arity) throw DataError("dataset: column index out of range");
    double lo = rows.front()[col];
    for (const auto& r : rows) lo = std::min(lo, r[col]);
    return lo;
}

double Dataset::column_max(std::size_t col) const {
    if (empty() || col >= arity) throw DataError("dataset: column index out of range");
    double hi = rows.front()[col];
    for (const auto& r : rows) hi = std::max(hi, r[col]);
    return hi;
}

void Dataset::push_row(std::vector<double> row, double target) {
    if (arity == 0 && rows.empty()) arity = row.size();
    rows.push_back(std::move(row));
    targets.push_back(target);
}

void Dataset::validate() const {
    if (rows.size() != targets.size()) {
        throw DataError("dataset: row count differs from target count");
    }
    if (!stamps.empty() && stamps.size() != rows.size()) {
        throw DataError("dataset: stamp count differs from row count");
    }
    for (const auto& r : rows) {
        if (r.size() != arity) throw DataError("dataset: ragged row width");
        for (double v : r) {
            if (!std::isfinite(v)) throw NumericError("dataset: non-finite input value");
        }
    }
    for (double t : targets) {
        if (!std::isfinite(t)) throw NumericError("dataset: non-finite target value");
    }
}

} // namespace anfis
