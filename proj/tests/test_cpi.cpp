#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anfis/cpi.hpp"
#include "anfis/errors.hpp"

#include <algorithm>
#include <vector>

using anfis::BasketGroup;

TEST_CASE("group index arithmetic") {
    CHECK(anfis::group_cpi(100.0, 100.0) == doctest::Approx(100.0));
    CHECK(anfis::group_cpi(110.0, 100.0) == doctest::Approx(110.0));
    CHECK(anfis::group_cpi(157.21, 100.0) == doctest::Approx(157.21));
    // Scaling both costs by the same factor changes nothing.
    CHECK(anfis::group_cpi(3.3, 3.0) == doctest::Approx(anfis::group_cpi(33.0, 30.0)));
}

TEST_CASE("group index rejects nonpositive costs") {
    CHECK_THROWS_AS(anfis::group_cpi(0.0, 100.0), anfis::ConfigError);
    CHECK_THROWS_AS(anfis::group_cpi(100.0, 0.0), anfis::ConfigError);
    CHECK_THROWS_AS(anfis::group_cpi(-5.0, 100.0), anfis::ConfigError);
}

TEST_CASE("national index is the weighted sum") {
    CHECK(anfis::national_cpi({{"all", 120.0, 1.0}}) == doctest::Approx(120.0));
    CHECK(anfis::national_cpi({{"a", 100.0, 0.5}, {"b", 200.0, 0.5}}) ==
          doctest::Approx(150.0));

    // Equal group indices pass through regardless of the weight split.
    const std::vector<BasketGroup> flat{{"a", 130.0, 0.2}, {"b", 130.0, 0.3},
                                        {"c", 130.0, 0.5}};
    CHECK(anfis::national_cpi(flat) == doctest::Approx(130.0));
}

TEST_CASE("national index stays inside the group range") {
    const std::vector<BasketGroup> groups{
        {"food", 171.3, 0.386}, {"housing", 148.2, 0.214}, {"transport", 120.5, 0.125},
        {"other", 139.9, 0.275}};
    const double ncpi = anfis::national_cpi(groups);
    double lo = groups[0].group_cpi, hi = groups[0].group_cpi;
    for (const auto& g : groups) {
        lo = std::min(lo, g.group_cpi);
        hi = std::max(hi, g.group_cpi);
    }
    CHECK(ncpi >= lo);
    CHECK(ncpi <= hi);
}

TEST_CASE("weight sum violations are reported with the sum") {
    const std::vector<BasketGroup> bad{{"a", 100.0, 0.5}, {"b", 100.0, 0.6}};
    CHECK_THROWS_WITH_AS(anfis::national_cpi(bad), doctest::Contains("1.1"),
                         anfis::DataError);
    CHECK_THROWS_AS(anfis::national_cpi({}), anfis::DataError);

    // Rounded published weights within the tolerance are accepted.
    const std::vector<BasketGroup> rounded{{"a", 100.0, 0.3333333334},
                                           {"b", 100.0, 0.3333333333},
                                           {"c", 100.0, 0.3333333333}};
    CHECK_NOTHROW(anfis::national_cpi(rounded));
}
