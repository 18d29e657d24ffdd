#include "anfis/fis.hpp"
#include "anfis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace anfis {

std::size_t SugenoFis::total_mfs() const {
    std::size_t n = 0;
    for (const auto& v : inputs) n += v.mfs.size();
    return n;
}

std::size_t SugenoFis::premise_parameter_count() const {
    std::size_t n = 0;
    for (const auto& v : inputs) {
        for (const auto& mf : v.mfs) n += mf.params.size();
    }
    return n;
}

void SugenoFis::validate() const {
    if (inputs.empty()) throw ConfigError("fis: no input variables");
    if (rules.empty()) throw ConfigError("fis: empty rule base");
    for (const auto& v : inputs) {
        if (!(v.lo < v.hi)) {
            throw ConfigError("fis: variable '" + v.name + "' has empty range");
        }
        if (v.mfs.empty()) {
            throw ConfigError("fis: variable '" + v.name + "' has no membership functions");
        }
        for (const auto& mf : v.mfs) anfis::validate(mf);
    }
    for (const auto& r : rules) {
        if (r.antecedent.size() != inputs.size()) {
            throw ConfigError("fis: rule antecedent arity mismatch");
        }
        for (std::size_t j = 0; j < r.antecedent.size(); ++j) {
            if (r.antecedent[j] >= inputs[j].mfs.size()) {
                throw ConfigError("fis: rule references missing MF on variable '" +
                                  inputs[j].name + "'");
            }
        }
        if (r.consequent.size() != inputs.size() + 1) {
            throw ConfigError("fis: rule consequent must have n_inputs + 1 coefficients");
        }
    }
}

namespace {

// Gaussian sigma giving a 0.5 crossover between neighbors spaced d apart.
double gaussian_width(double spacing) {
    return spacing / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

MembershipFunction make_grid_mf(MfType type, double center, double spacing) {
    switch (type) {
        case MfType::gaussian:
            return MembershipFunction::gaussian(center, gaussian_width(spacing));
        case MfType::bell:
            return MembershipFunction::bell(spacing / 2.0, 2.0, center);
        case MfType::triangular:
            return MembershipFunction::triangular(center - spacing, center, center + spacing);
        case MfType::trapezoidal:
            return MembershipFunction::trapezoidal(center - spacing, center - spacing / 4.0,
                                                   center + spacing / 4.0, center + spacing);
    }
    throw ConfigError("fis: unknown MF type tag");
}

} // namespace

SugenoFis grid_partition(const Dataset& data, const std::vector<int>& mf_counts,
                         MfType mf_type) {
    if (data.empty()) throw DataError("grid_partition: empty dataset");
    data.validate();
    if (mf_counts.size() != data.arity) {
        throw ConfigError("grid_partition: mf_counts length " + std::to_string(mf_counts.size()) +
                          " does not match input arity " + std::to_string(data.arity));
    }
    for (int c : mf_counts) {
        if (c < 2) throw ConfigError("grid_partition: each input needs at least 2 MFs");
    }

    SugenoFis fis;
    fis.inputs.reserve(data.arity);
    for (std::size_t j = 0; j < data.arity; ++j) {
        const double lo = data.column_min(j);
        const double hi = data.column_max(j);
        if (lo == hi) {
            throw DataError("grid_partition: input column " + std::to_string(j) +
                            " is degenerate (min == max)");
        }
        const int count = mf_counts[j];
        const double spacing = (hi - lo) / (count - 1);

        FuzzyVariable var;
        var.name = "in" + std::to_string(j + 1);
        var.lo = lo;
        var.hi = hi;
        var.mfs.reserve(count);
        for (int k = 0; k < count; ++k) {
            var.mfs.push_back(make_grid_mf(mf_type, lo + k * spacing, spacing));
        }
        fis.inputs.push_back(std::move(var));
    }

    // Full Cartesian product of antecedents, last input varying fastest.
    std::size_t rule_count = 1;
    for (int c : mf_counts) rule_count *= static_cast<std::size_t>(c);
    fis.rules.reserve(rule_count);
    std::vector<std::size_t> idx(data.arity, 0);
    for (std::size_t r = 0; r < rule_count; ++r) {
        Rule rule;
        rule.antecedent = idx;
        rule.consequent.assign(data.arity + 1, 0.0);
        fis.rules.push_back(std::move(rule));
        for (std::size_t j = data.arity; j-- > 0;) {
            if (++idx[j] < static_cast<std::size_t>(mf_counts[j])) break;
            idx[j] = 0;
        }
    }

    fis.validate();
    return fis;
}

namespace {

// Squared Euclidean distance between normalized points.
double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace

SugenoFis subtractive_clustering(const Dataset& data, double radius,
                                 const SubclustOptions& options) {
    if (data.empty()) throw DataError("subtractive_clustering: empty dataset");
    data.validate();
    if (!(radius > 0.0 && radius <= 1.0)) {
        throw ConfigError("subtractive_clustering: radius must be in (0, 1]");
    }

    const std::size_t n = data.size();
    const std::size_t dims = data.arity + 1; // inputs plus target

    // Normalize the joint input+output space to [0,1] per dimension;
    // degenerate dimensions collapse to 0.
    std::vector<double> lo(dims), hi(dims);
    for (std::size_t j = 0; j < data.arity; ++j) {
        lo[j] = data.column_min(j);
        hi[j] = data.column_max(j);
    }
    lo[data.arity] = *std::min_element(data.targets.begin(), data.targets.end());
    hi[data.arity] = *std::max_element(data.targets.begin(), data.targets.end());

    std::vector<std::vector<double>> pts(n, std::vector<double>(dims));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dims; ++j) {
            const double raw = j < data.arity ? data.rows[i][j] : data.targets[i];
            const double span = hi[j] - lo[j];
            pts[i][j] = span > 0.0 ? (raw - lo[j]) / span : 0.0;
        }
    }

    const double alpha = 4.0 / (radius * radius);
    const double squash_radius = options.squash_factor * radius;
    const double beta = 4.0 / (squash_radius * squash_radius);

    std::vector<double> potential(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            potential[i] += std::exp(-alpha * sq_dist(pts[i], pts[j]));
        }
    }

    std::vector<std::size_t> centers;
    double first_peak = 0.0;
    while (true) {
        const auto it = std::max_element(potential.begin(), potential.end());
        const std::size_t cand = static_cast<std::size_t>(it - potential.begin());
        const double peak = *it;

        if (centers.empty()) {
            first_peak = peak;
            centers.push_back(cand);
        } else {
            const double ratio = peak / first_peak;
            if (ratio < options.reject_ratio) break;
            bool accept = ratio > options.accept_ratio;
            if (!accept) {
                // Gray zone: accept only if far enough from existing centers.
                double dmin_sq = std::numeric_limits<double>::infinity();
                for (std::size_t c : centers) {
                    dmin_sq = std::min(dmin_sq, sq_dist(pts[cand], pts[c]));
                }
                if (std::sqrt(dmin_sq) / radius + ratio >= 1.0) {
                    accept = true;
                } else {
                    potential[cand] = 0.0;
                    continue;
                }
            }
            centers.push_back(cand);
        }

        for (std::size_t i = 0; i < n; ++i) {
            potential[i] -= peak * std::exp(-beta * sq_dist(pts[i], pts[cand]));
        }
        if (centers.size() == n) break;
    }

    SugenoFis fis;
    fis.inputs.reserve(data.arity);
    for (std::size_t j = 0; j < data.arity; ++j) {
        FuzzyVariable var;
        var.name = "in" + std::to_string(j + 1);
        var.lo = lo[j];
        var.hi = hi[j];
        if (var.lo == var.hi) {
            // Widen a point range so the variable stays usable.
            var.lo -= 0.5;
            var.hi += 0.5;
        }
        const double sigma = std::max(radius * (hi[j] - lo[j]) / std::sqrt(8.0), kMinWidth);
        for (std::size_t c : centers) {
            var.mfs.push_back(MembershipFunction::gaussian(data.rows[c][j], sigma));
        }
        fis.inputs.push_back(std::move(var));
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
        Rule rule;
        rule.antecedent.assign(data.arity, k);
        rule.consequent.assign(data.arity + 1, 0.0);
        fis.rules.push_back(std::move(rule));
    }

    fis.validate();
    return fis;
}

std::string architecture_string(const SugenoFis& fis) {
    fis.validate();
    const std::size_t hidden = fis.total_mfs() + 2 * fis.num_rules();
    return std::to_string(fis.num_inputs()) + ":" + std::to_string(hidden) + ":1";
}

} // namespace anfis
