#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anfis/errors.hpp"
#include "anfis/fis.hpp"
#include "anfis/membership.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

using anfis::Dataset;
using anfis::MfType;
using anfis::SugenoFis;

namespace {

// Dataset with exact per-column ranges: two corner rows pin min and max,
// interior rows keep the columns non-degenerate.
Dataset range_dataset(const std::vector<std::pair<double, double>>& ranges, int extra_rows = 3) {
    Dataset data;
    std::vector<double> lo_row, hi_row;
    for (const auto& [lo, hi] : ranges) {
        lo_row.push_back(lo);
        hi_row.push_back(hi);
    }
    data.push_row(lo_row, 0.0);
    data.push_row(hi_row, 1.0);
    std::mt19937_64 rng(1);
    for (int r = 0; r < extra_rows; ++r) {
        std::vector<double> row;
        for (const auto& [lo, hi] : ranges) {
            row.push_back(std::uniform_real_distribution<double>(lo, hi)(rng));
        }
        data.push_row(std::move(row), 0.5);
    }
    return data;
}

} // namespace

TEST_CASE("grid partition sizes and rule enumeration") {
    const auto data = range_dataset({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const auto fis = grid_partition(data, {2, 2, 2, 2, 2}, MfType::gaussian);
    CHECK(fis.num_inputs() == 5);
    CHECK(fis.total_mfs() == 10);
    CHECK(fis.num_rules() == 32);
    CHECK_NOTHROW(fis.validate());

    // Antecedents exhaust the Cartesian product exactly once.
    std::set<std::vector<std::size_t>> seen;
    for (const auto& rule : fis.rules) {
        seen.insert(rule.antecedent);
        CHECK(rule.consequent.size() == 6);
        for (double c : rule.consequent) CHECK(c == 0.0);
    }
    CHECK(seen.size() == 32);

    // The last input's MF index varies fastest.
    CHECK(fis.rules[0].antecedent == std::vector<std::size_t>{0, 0, 0, 0, 0});
    CHECK(fis.rules[1].antecedent == std::vector<std::size_t>{0, 0, 0, 0, 1});
    CHECK(fis.rules[2].antecedent == std::vector<std::size_t>{0, 0, 0, 1, 0});
}

TEST_CASE("grid partition with mixed counts") {
    const auto data = range_dataset({{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const auto fis = grid_partition(data, {3, 3, 3, 2}, MfType::gaussian);
    CHECK(fis.total_mfs() == 11);
    CHECK(fis.num_rules() == 54);
}

TEST_CASE("grid partition gaussian placement and half overlap") {
    const auto data = range_dataset({{0, 10}});
    const auto fis = grid_partition(data, {2}, MfType::gaussian);
    REQUIRE(fis.inputs.size() == 1);
    const auto& mfs = fis.inputs[0].mfs;
    REQUIRE(mfs.size() == 2);
    CHECK(mfs[0].params[0] == doctest::Approx(0.0));
    CHECK(mfs[1].params[0] == doctest::Approx(10.0));
    CHECK(mfs[0].params[1] == doctest::Approx(10.0 / (2.0 * std::sqrt(2.0 * std::log(2.0)))));
    CHECK(mfs[0].params[1] == doctest::Approx(4.2466).epsilon(1e-4));

    // Adjacent Gaussians cross at one half, at the midpoint between centers.
    CHECK(anfis::evaluate(mfs[0], 5.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(anfis::evaluate(mfs[1], 5.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("grid partition crossover holds for more than two MFs") {
    const auto data = range_dataset({{-3, 9}});
    const auto fis = grid_partition(data, {4}, MfType::gaussian);
    const auto& mfs = fis.inputs[0].mfs;
    REQUIRE(mfs.size() == 4);
    const double spacing = 4.0;
    for (std::size_t m = 0; m + 1 < mfs.size(); ++m) {
        CHECK(mfs[m + 1].params[0] - mfs[m].params[0] == doctest::Approx(spacing));
        const double mid = 0.5 * (mfs[m].params[0] + mfs[m + 1].params[0]);
        CHECK(anfis::evaluate(mfs[m], mid) == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(anfis::evaluate(mfs[m + 1], mid) == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("grid partition shapes for the other families") {
    const auto data = range_dataset({{0, 10}});

    const auto bell = grid_partition(data, {2}, MfType::bell);
    // a = half spacing, b = 2, center as placed.
    CHECK(bell.inputs[0].mfs[0].params[0] == doctest::Approx(5.0));
    CHECK(bell.inputs[0].mfs[0].params[1] == doctest::Approx(2.0));
    CHECK(bell.inputs[0].mfs[0].params[2] == doctest::Approx(0.0));
    CHECK(anfis::evaluate(bell.inputs[0].mfs[0], 5.0) == doctest::Approx(0.5).epsilon(1e-9));

    const auto tri = grid_partition(data, {2}, MfType::triangular);
    CHECK(tri.inputs[0].mfs[0].params == std::vector<double>{-10.0, 0.0, 10.0});
    CHECK(tri.inputs[0].mfs[1].params == std::vector<double>{0.0, 10.0, 20.0});
    CHECK(anfis::evaluate(tri.inputs[0].mfs[0], 5.0) == doctest::Approx(0.5));

    const auto trap = grid_partition(data, {2}, MfType::trapezoidal);
    CHECK(trap.inputs[0].mfs[0].params ==
          std::vector<double>{-10.0, -2.5, 2.5, 10.0});
    CHECK(anfis::evaluate(trap.inputs[0].mfs[0], 0.0) == doctest::Approx(1.0));
}

TEST_CASE("grid partition input validation") {
    auto degenerate = range_dataset({{0, 1}, {0, 1}});
    for (auto& row : degenerate.rows) row[1] = 3.0; // column 1 collapses
    CHECK_THROWS_WITH_AS(grid_partition(degenerate, {2, 2}, MfType::gaussian),
                         doctest::Contains("column 1"), anfis::DataError);

    const auto data = range_dataset({{0, 1}, {0, 1}});
    CHECK_THROWS_AS(grid_partition(data, {1, 2}, MfType::gaussian), anfis::ConfigError);
    CHECK_THROWS_AS(grid_partition(data, {2}, MfType::gaussian), anfis::ConfigError);
    CHECK_THROWS_AS(grid_partition(Dataset{}, {2, 2}, MfType::gaussian), anfis::DataError);
}

TEST_CASE("architecture string reproduces the published sweep table") {
    struct Row {
        std::vector<int> counts;
        const char* expect;
    };
    const Row rows[] = {
        {{3, 3, 3, 2}, "4:119:1"},    {{3, 3, 3, 3}, "4:174:1"},
        {{3, 2, 2, 2, 2}, "5:107:1"}, {{3, 3, 2, 3, 2}, "5:229:1"},
        {{3, 3, 2, 2, 2}, "5:156:1"}, {{2, 2, 2, 2}, "4:40:1"},
        {{2, 3, 3, 2, 2}, "5:156:1"}, {{2, 2, 2, 2, 2}, "5:74:1"},
        {{2, 2, 2, 2, 2}, "5:74:1"},  {{2, 2, 2, 2, 2}, "5:74:1"},
        {{2, 2, 3, 3}, "4:82:1"},
    };
    for (const auto& row : rows) {
        std::vector<std::pair<double, double>> ranges(row.counts.size(), {0.0, 1.0});
        const auto fis = grid_partition(range_dataset(ranges), row.counts, MfType::gaussian);
        CHECK(architecture_string(fis) == row.expect);
    }
}

TEST_CASE("subtractive clustering separates two blobs") {
    Dataset data;
    std::mt19937_64 rng(3);
    auto jitter = [&rng] { return std::uniform_real_distribution<double>(-0.05, 0.05)(rng); };
    for (int i = 0; i < 20; ++i) {
        data.push_row({0.0 + jitter(), 0.0 + jitter()}, 0.0 + jitter());
        data.push_row({10.0 + jitter(), 10.0 + jitter()}, 10.0 + jitter());
    }
    const auto fis = subtractive_clustering(data, 0.5);
    CHECK(fis.num_rules() == 2);
    CHECK(fis.num_inputs() == 2);
    CHECK_NOTHROW(fis.validate());

    // One Gaussian MF per cluster per input, centers near the blob centers.
    for (const auto& var : fis.inputs) {
        REQUIRE(var.mfs.size() == 2);
        std::vector<double> centers{var.mfs[0].params[0], var.mfs[1].params[0]};
        std::sort(centers.begin(), centers.end());
        CHECK(centers[0] == doctest::Approx(0.0).epsilon(0.1));
        CHECK(centers[1] == doctest::Approx(10.0).epsilon(0.1));
    }
    // Rule k reads the k-th MF of every input.
    for (std::size_t k = 0; k < fis.num_rules(); ++k) {
        for (std::size_t idx : fis.rules[k].antecedent) CHECK(idx == k);
    }
}

TEST_CASE("subtractive clustering degenerate and bound cases") {
    Dataset repeated;
    for (int i = 0; i < 5; ++i) repeated.push_row({1.0, 2.0}, 3.0);
    const auto one = subtractive_clustering(repeated, 0.5);
    CHECK(one.num_rules() == 1);

    Dataset spread;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        spread.push_row({std::uniform_real_distribution<double>(0, 1)(rng),
                         std::uniform_real_distribution<double>(0, 1)(rng)},
                        std::uniform_real_distribution<double>(0, 1)(rng));
    }
    const auto fis = subtractive_clustering(spread, 0.4);
    CHECK(fis.num_rules() >= 1);
    CHECK(fis.num_rules() <= spread.size());

    // Wider radius cannot produce more clusters than a narrower one.
    const auto wide = subtractive_clustering(spread, 0.9);
    CHECK(wide.num_rules() <= fis.num_rules());

    CHECK_THROWS_AS(subtractive_clustering(spread, 0.0), anfis::ConfigError);
    CHECK_THROWS_AS(subtractive_clustering(spread, 1.5), anfis::ConfigError);
    CHECK_THROWS_AS(subtractive_clustering(Dataset{}, 0.5), anfis::DataError);
}

TEST_CASE("subtractive clustering is deterministic") {
    Dataset data;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        data.push_row({std::uniform_real_distribution<double>(0, 4)(rng),
                       std::uniform_real_distribution<double>(-1, 1)(rng)},
                      std::uniform_real_distribution<double>(0, 2)(rng));
    }
    const auto a = subtractive_clustering(data, 0.5);
    const auto b = subtractive_clustering(data, 0.5);
    REQUIRE(a.num_rules() == b.num_rules());
    for (std::size_t j = 0; j < a.inputs.size(); ++j) {
        for (std::size_t m = 0; m < a.inputs[j].mfs.size(); ++m) {
            CHECK(a.inputs[j].mfs[m] == b.inputs[j].mfs[m]);
        }
    }
}

TEST_CASE("fis structural validation") {
    const auto data = range_dataset({{0, 1}, {0, 1}});
    auto fis = grid_partition(data, {2, 2}, MfType::gaussian);

    auto bad_index = fis;
    bad_index.rules[0].antecedent[0] = 7;
    CHECK_THROWS_AS(bad_index.validate(), anfis::ConfigError);

    auto bad_consequent = fis;
    bad_consequent.rules[1].consequent.pop_back();
    CHECK_THROWS_AS(bad_consequent.validate(), anfis::ConfigError);

    auto bad_range = fis;
    bad_range.inputs[0].lo = bad_range.inputs[0].hi;
    CHECK_THROWS_AS(bad_range.validate(), anfis::ConfigError);

    auto no_rules = fis;
    no_rules.rules.clear();
    CHECK_THROWS_AS(no_rules.validate(), anfis::ConfigError);
}
