#include "anfis/metrics.hpp"
#include "anfis/errors.hpp"

#include <cmath>
#include <string>

namespace anfis {

namespace {

void check_pair(std::span<const double> targets, std::span<const double> predictions) {
    if (targets.empty()) throw DataError("metrics: empty input");
    if (targets.size() != predictions.size()) {
        throw DataError("metrics: " + std::to_string(targets.size()) + " targets vs " +
                        std::to_string(predictions.size()) + " predictions");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!std::isfinite(targets[i]) || !std::isfinite(predictions[i])) {
            throw NumericError("metrics: non-finite value at index " + std::to_string(i));
        }
    }
}

} // namespace

double rmse(std::span<const double> targets, std::span<const double> predictions) {
    check_pair(targets, predictions);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double e = targets[i] - predictions[i];
        sum_sq += e * e;
    }
    return std::sqrt(sum_sq / static_cast<double>(targets.size()));
}

double mape(std::span<const double> targets, std::span<const double> predictions) {
    check_pair(targets, predictions);
    double sum = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] == 0.0) {
            throw DataError("mape: target at index " + std::to_string(i) + " is zero");
        }
        sum += std::abs((targets[i] - predictions[i]) / targets[i]);
    }
    return sum / static_cast<double>(targets.size()) * 100.0;
}

EvalReport evaluate_forecast(std::span<const double> targets,
                             std::span<const double> predictions) {
    EvalReport report;
    report.rmse = rmse(targets, predictions);
    report.mape = mape(targets, predictions);
    report.n = targets.size();
    report.errors.reserve(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        report.errors.push_back(targets[i] - predictions[i]);
    }
    return report;
}

} // namespace anfis
