#pragma once

#include "anfis/dataset.hpp"
#include "anfis/membership.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace anfis {

/// One model input with its fuzzy partition.
struct FuzzyVariable {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<MembershipFunction> mfs;
};

/// IF-THEN rule of a first-order Sugeno system: the antecedent picks one
/// MF per input, the consequent is an affine function of the inputs
/// (n coefficients followed by the constant term).
struct Rule {
    std::vector<std::size_t> antecedent;
    std::vector<double> consequent;
};

struct SugenoFis {
    std::vector<FuzzyVariable> inputs;
    std::vector<Rule> rules;

    std::size_t num_inputs() const { return inputs.size(); }
    std::size_t num_rules() const { return rules.size(); }
    std::size_t total_mfs() const;

    /// Count of all tunable MF parameters across inputs.
    std::size_t premise_parameter_count() const;

    /// Throws ConfigError if structure invariants are violated.
    void validate() const;
};

/// Builds a FIS by grid partition: mf_counts[i] membership functions
/// evenly spaced over column i's [min, max] (endpoints included), full
/// Cartesian-product rule base, consequents zeroed. Widths follow the
/// half-overlap convention (adjacent Gaussians cross at degree 0.5).
SugenoFis grid_partition(const Dataset& data, const std::vector<int>& mf_counts,
                         MfType mf_type);

/// Tuning knobs of the subtractive-clustering FIS generator. The
/// defaults are the standard ones for the method.
struct SubclustOptions {
    double squash_factor = 1.25;
    double accept_ratio = 0.5;
    double reject_ratio = 0.15;
};

/// Builds a FIS by subtractive clustering on the normalized joint
/// input+output space: one rule per cluster, one Gaussian MF per cluster
/// on each input (sigma = radius * column range / sqrt(8)), consequents
/// zeroed.
SugenoFis subtractive_clustering(const Dataset& data, double radius,
                                 const SubclustOptions& options = {});

/// "n:h:1" layer-size summary, h = total MFs + 2 * rule count.
std::string architecture_string(const SugenoFis& fis);

} // namespace anfis
