#include "anfis/synthetic.hpp"
#include "anfis/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace anfis {

std::vector<SeriesPoint> synthetic_series(const SyntheticConfig& config) {
    if (config.months < 1) {
        throw ConfigError("synthetic series needs at least 1 month, got " +
                          std::to_string(config.months));
    }
    if (config.noise_sd < 0.0) {
        throw ConfigError("synthetic noise std-dev must be non-negative");
    }

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> noise(0.0, 1.0);

    std::vector<SeriesPoint> series;
    series.reserve(static_cast<std::size_t>(config.months));
    YearMonth stamp = config.start;
    for (int t = 0; t < config.months; ++t) {
        const double season =
            config.season_amp * std::sin(2.0 * std::numbers::pi * t / 12.0);
        double value = config.base + config.trend * t + season;
        if (config.noise_sd > 0.0) value += config.noise_sd * noise(rng);
        series.push_back({stamp, value});
        stamp = stamp.next();
    }
    return series;
}

} // namespace anfis
