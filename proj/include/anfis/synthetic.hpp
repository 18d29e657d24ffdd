// Deterministic synthetic monthly series for demos and self-checks.
#pragma once

#include "anfis/dataset.hpp"

#include <cstdint>
#include <vector>

namespace anfis {

// Knobs for the generator.  Defaults produce an index-like series that starts
// near 100, drifts upward, and carries a 12-month seasonal wave plus a small
// amount of noise.
struct SyntheticConfig {
    int months = 192;
    YearMonth start{2000, 1};
    double base = 100.0;
    double trend = 0.05;        // per-month linear drift
    double season_amp = 3.0;    // amplitude of the 12-month cycle
    double noise_sd = 0.05;     // std-dev of additive Gaussian noise
    std::uint64_t seed = 42;
};

// Generate `config.months` consecutive monthly points.  The same config always
// yields the same series (seeded mt19937_64).
std::vector<SeriesPoint> synthetic_series(const SyntheticConfig& config);

} // namespace anfis
