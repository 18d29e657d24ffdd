#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace anfis {

/// Root mean square error, sqrt(mean((target - prediction)^2)).
double rmse(std::span<const double> targets, std::span<const double> predictions);

/// Mean absolute percentage error, in percent. Throws DataError if any
/// target is zero.
double mape(std::span<const double> targets, std::span<const double> predictions);

struct EvalReport {
    double rmse = 0.0;
    double mape = 0.0; // percent
    std::size_t n = 0;
    std::vector<double> errors; // target - prediction, per sample
};

EvalReport evaluate_forecast(std::span<const double> targets,
                             std::span<const double> predictions);

} // namespace anfis
