#pragma once

#include "anfis/dataset.hpp"
#include "anfis/fis.hpp"

#include <utility>
#include <vector>

namespace anfis {

/// Turns an ordered monthly series into a supervised lag-window dataset:
/// row t holds (v_t .. v_{t+lags-1}), oldest lag first, with target
/// v_{t+lags} and the target's month as the row stamp.
Dataset lag_embed(const std::vector<SeriesPoint>& series, int lags);

/// Chronological prefix/suffix split; train size = floor(fraction * N).
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction);

/// Chronological split at a month: rows whose target stamp is at or
/// after the given month form the test set.
std::pair<Dataset, Dataset> split_at_stamp(const Dataset& ds, const YearMonth& stamp);

/// Keeps only rows with target stamp at or after the given month.
Dataset filter_from(const Dataset& ds, const YearMonth& stamp);

/// One prediction per row, each from the row's actual lagged values (no
/// recursion).
std::vector<double> forecast_one_step(const SugenoFis& fis, const Dataset& ds);

} // namespace anfis
