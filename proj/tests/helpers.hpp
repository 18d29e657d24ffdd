// Shared fixtures and small oracles used across the test executables.
#pragma once

#include "anfis/dataset.hpp"
#include "anfis/fis.hpp"
#include "anfis/membership.hpp"
#include "anfis/network.hpp"

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace testutil {

// Nine-month forecast fixture: month, target index, predicted index and the
// published target-minus-predicted error.
struct FixtureRow {
    const char* month;
    double target;
    double predicted;
    double error;
};

inline constexpr std::array<FixtureRow, 9> kNineMonthFixture = {{
    {"2015-04", 157.21, 156.5460181, 0.663981936},
    {"2015-05", 157.86, 157.8974576, -0.037457551},
    {"2015-06", 158.12, 158.2561941, -0.136194111},
    {"2015-07", 158.78, 158.5041795, 0.275820524},
    {"2015-08", 158.81, 159.3802297, -0.570229734},
    {"2015-09", 159.04, 159.2140768, -0.174076814},
    {"2015-10", 159.17, 159.5692438, -0.399243834},
    {"2015-11", 160.49, 159.6562615, 0.833738462},
    {"2015-12", 161.24, 161.4976339, -0.257633946},
}};

inline std::vector<double> fixture_targets() {
    std::vector<double> v;
    for (const auto& row : kNineMonthFixture) v.push_back(row.target);
    return v;
}

inline std::vector<double> fixture_predictions() {
    std::vector<double> v;
    for (const auto& row : kNineMonthFixture) v.push_back(row.predicted);
    return v;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// A structurally valid random model: full Cartesian rule base over
// `mfs_per_input` random MFs per input, random affine consequents.
inline anfis::SugenoFis random_fis(std::mt19937_64& rng, int inputs, int mfs_per_input,
                                   anfis::MfType type) {
    anfis::SugenoFis fis;
    for (int j = 0; j < inputs; ++j) {
        anfis::FuzzyVariable var;
        var.name = "x" + std::to_string(j + 1);
        var.lo = uniform(rng, -3.0, -1.0);
        var.hi = uniform(rng, 1.0, 3.0);
        const double range = var.hi - var.lo;
        for (int m = 0; m < mfs_per_input; ++m) {
            const double center = uniform(rng, var.lo, var.hi);
            switch (type) {
            case anfis::MfType::gaussian:
                var.mfs.push_back(anfis::MembershipFunction::gaussian(
                    center, uniform(rng, 0.15, 0.6) * range));
                break;
            case anfis::MfType::bell:
                var.mfs.push_back(anfis::MembershipFunction::bell(
                    uniform(rng, 0.2, 0.5) * range, uniform(rng, 1.5, 3.0), center));
                break;
            case anfis::MfType::triangular: {
                const double left = center - uniform(rng, 0.4, 1.2) * range;
                const double right = center + uniform(rng, 0.4, 1.2) * range;
                var.mfs.push_back(anfis::MembershipFunction::triangular(left, center, right));
                break;
            }
            case anfis::MfType::trapezoidal: {
                const double b = center - uniform(rng, 0.1, 0.4) * range;
                const double c = center + uniform(rng, 0.1, 0.4) * range;
                var.mfs.push_back(anfis::MembershipFunction::trapezoidal(
                    b - uniform(rng, 0.3, 0.9) * range, b, c,
                    c + uniform(rng, 0.3, 0.9) * range));
                break;
            }
            }
        }
        fis.inputs.push_back(std::move(var));
    }

    const std::size_t n = static_cast<std::size_t>(inputs);
    std::vector<std::size_t> odo(n, 0);
    while (true) {
        anfis::Rule rule;
        rule.antecedent = odo;
        for (std::size_t j = 0; j <= n; ++j) {
            rule.consequent.push_back(uniform(rng, -2.0, 2.0));
        }
        fis.rules.push_back(std::move(rule));
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (++odo[j] < fis.inputs[j].mfs.size()) break;
            odo[j] = 0;
            if (j == 0) return fis;
        }
        if (n == 0) return fis;
    }
}

// Breakpoints where the piecewise families are non-differentiable (plus the
// smooth families' centers, where finite differences lose accuracy).
inline std::vector<double> mf_breakpoints(const anfis::MembershipFunction& mf) {
    if (mf.type == anfis::MfType::gaussian) return {mf.params[0]};
    if (mf.type == anfis::MfType::bell) return {mf.params[2]};
    return mf.params;
}

// Random in-range inputs kept clear of every MF breakpoint so loss surfaces
// stay locally smooth for finite-difference checks.
inline anfis::Dataset random_dataset(std::mt19937_64& rng, const anfis::SugenoFis& fis,
                                     int rows) {
    anfis::Dataset data;
    for (int r = 0; r < rows; ++r) {
        std::vector<double> row;
        for (const auto& var : fis.inputs) {
            const double margin = 5e-3 * (var.hi - var.lo);
            double x = 0.0;
            for (int attempt = 0; attempt < 200; ++attempt) {
                x = uniform(rng, var.lo + margin, var.hi - margin);
                bool clear = true;
                for (const auto& mf : var.mfs) {
                    for (double bp : mf_breakpoints(mf)) {
                        if (std::abs(x - bp) < margin) clear = false;
                    }
                }
                if (clear) break;
            }
            row.push_back(x);
        }
        data.push_row(std::move(row), uniform(rng, -2.0, 2.0));
    }
    return data;
}

// The loss the premise/consequent gradients differentiate.
inline double half_sse(const anfis::SugenoFis& fis, const anfis::Dataset& data) {
    double sum = 0.0;
    for (std::size_t r = 0; r < data.size(); ++r) {
        const double e = data.targets[r] - anfis::forward(fis, data.rows[r]);
        sum += 0.5 * e * e;
    }
    return sum;
}

// Straight transcription of the normalized weighted-consequent formula,
// independent of the layered forward pass. Valid while some rule fires.
inline double oracle_forward(const anfis::SugenoFis& fis, const std::vector<double>& x) {
    double num = 0.0, den = 0.0;
    for (const auto& rule : fis.rules) {
        double w = 1.0;
        for (std::size_t j = 0; j < fis.inputs.size(); ++j) {
            w *= anfis::evaluate(fis.inputs[j].mfs[rule.antecedent[j]], x[j]);
        }
        double f = rule.consequent.back();
        for (std::size_t j = 0; j < fis.inputs.size(); ++j) {
            f += rule.consequent[j] * x[j];
        }
        num += w * f;
        den += w;
    }
    return num / den;
}

} // namespace testutil
