#include "anfis/cpi.hpp"
#include "anfis/errors.hpp"

#include <cmath>
#include <cstdio>

namespace anfis {

double group_cpi(double current_cost, double base_cost) {
    if (!(current_cost > 0.0) || !(base_cost > 0.0)) {
        throw ConfigError("group_cpi: costs must be positive");
    }
    return current_cost / base_cost * 100.0;
}

double national_cpi(const std::vector<BasketGroup>& groups) {
    if (groups.empty()) throw DataError("national_cpi: empty basket");
    double weight_sum = 0.0;
    double index = 0.0;
    for (const auto& g : groups) {
        weight_sum += g.weight;
        index += g.group_cpi * g.weight;
    }
    // Published weights are rounded; allow a small slack on the sum.
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", weight_sum);
        throw DataError(std::string("national_cpi: weights sum to ") + buf + ", expected 1");
    }
    return index;
}

} // namespace anfis
