#include "anfis/timeseries.hpp"
#include "anfis/errors.hpp"
#include "anfis/network.hpp"

#include <cmath>
#include <string>

namespace anfis {

Dataset lag_embed(const std::vector<SeriesPoint>& series, int lags) {
    if (lags < 1) throw ConfigError("lag_embed: lags must be >= 1");
    if (series.size() <= static_cast<std::size_t>(lags)) {
        throw DataError("lag_embed: series has " + std::to_string(series.size()) +
                        " points, need at least " + std::to_string(lags + 1));
    }

    Dataset ds;
    ds.arity = static_cast<std::size_t>(lags);
    const std::size_t rows = series.size() - static_cast<std::size_t>(lags);
    ds.rows.reserve(rows);
    ds.targets.reserve(rows);
    ds.stamps.reserve(rows);
    for (std::size_t t = 0; t < rows; ++t) {
        std::vector<double> row(static_cast<std::size_t>(lags));
        for (int j = 0; j < lags; ++j) {
            row[static_cast<std::size_t>(j)] = series[t + static_cast<std::size_t>(j)].value;
        }
        ds.rows.push_back(std::move(row));
        ds.targets.push_back(series[t + static_cast<std::size_t>(lags)].value);
        ds.stamps.push_back(series[t + static_cast<std::size_t>(lags)].stamp);
    }
    ds.validate();
    return ds;
}

namespace {

std::pair<Dataset, Dataset> split_at_index(const Dataset& ds, std::size_t train_size) {
    Dataset train, test;
    train.arity = test.arity = ds.arity;
    const bool stamped = !ds.stamps.empty();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        Dataset& side = i < train_size ? train : test;
        side.rows.push_back(ds.rows[i]);
        side.targets.push_back(ds.targets[i]);
        if (stamped) side.stamps.push_back(ds.stamps[i]);
    }
    return {std::move(train), std::move(test)};
}

} // namespace

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction) {
    if (ds.empty()) throw DataError("split: empty dataset");
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ConfigError("split: train fraction must be in (0, 1)");
    }
    const std::size_t train_size =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(ds.size())));
    if (train_size == 0 || train_size == ds.size()) {
        throw ConfigError("split: fraction leaves one side empty for " +
                          std::to_string(ds.size()) + " rows");
    }
    return split_at_index(ds, train_size);
}

std::pair<Dataset, Dataset> split_at_stamp(const Dataset& ds, const YearMonth& stamp) {
    if (ds.empty()) throw DataError("split: empty dataset");
    if (ds.stamps.empty()) throw DataError("split: dataset carries no stamps");
    std::size_t train_size = 0;
    while (train_size < ds.size() && ds.stamps[train_size] < stamp) ++train_size;
    if (train_size == 0 || train_size == ds.size()) {
        throw ConfigError("split: stamp " + stamp.str() + " leaves one side empty");
    }
    return split_at_index(ds, train_size);
}

Dataset filter_from(const Dataset& ds, const YearMonth& stamp) {
    if (ds.stamps.empty()) throw DataError("filter: dataset carries no stamps");
    Dataset out;
    out.arity = ds.arity;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds.stamps[i] >= stamp) {
            out.rows.push_back(ds.rows[i]);
            out.targets.push_back(ds.targets[i]);
            out.stamps.push_back(ds.stamps[i]);
        }
    }
    if (out.empty()) {
        throw DataError("filter: no rows at or after " + stamp.str());
    }
    return out;
}

std::vector<double> forecast_one_step(const SugenoFis& fis, const Dataset& ds) {
    if (ds.arity != fis.num_inputs()) {
        throw DataError("forecast: dataset arity " + std::to_string(ds.arity) +
                        " does not match model arity " + std::to_string(fis.num_inputs()));
    }
    std::vector<double> predictions;
    predictions.reserve(ds.size());
    for (const auto& row : ds.rows) {
        predictions.push_back(forward(fis, row));
    }
    return predictions;
}

} // namespace anfis
