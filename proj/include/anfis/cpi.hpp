#pragma once

#include <string>
#include <vector>

namespace anfis {

/// One expenditure group of a consumer basket.
struct BasketGroup {
    std::string name;
    double group_cpi = 0.0; // index points
    double weight = 0.0;    // share in [0, 1]
};

/// Index of current cost against base cost: (current / base) * 100.
double group_cpi(double current_cost, double base_cost);

/// Weight-averaged index over the basket. Weights must sum to 1 within
/// 1e-9.
double national_cpi(const std::vector<BasketGroup>& groups);

} // namespace anfis
