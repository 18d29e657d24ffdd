#pragma once

#include "anfis/cpi.hpp"
#include "anfis/dataset.hpp"

#include <string>
#include <vector>

namespace anfis {

/// Reads a monthly series from CSV with header "date,cpi", dates as
/// YYYY-MM. Stamps must be strictly increasing and gap-free. Throws
/// DataError naming the offending line on any violation.
std::vector<SeriesPoint> ingest_series(const std::string& path);

/// Same parser over an in-memory CSV body.
std::vector<SeriesPoint> parse_series_csv(const std::string& text);

/// Writes the series back in the same CSV format.
void write_series(const std::string& path, const std::vector<SeriesPoint>& series);

/// Reads a basket CSV with header "group,cost_current,cost_base,weight";
/// each row's group CPI is computed from its costs.
std::vector<BasketGroup> ingest_basket(const std::string& path);

} // namespace anfis
