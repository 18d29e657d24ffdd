#pragma once

#include "anfis/fis.hpp"

#include <span>
#include <string>
#include <vector>

namespace anfis {

/// Total firing strength is floored at this value before normalization
/// so the output stays defined when every rule fires near zero.
inline constexpr double kFiringFloor = 1e-12;

/// Per-layer outputs of one forward evaluation.
struct ForwardTrace {
    std::vector<std::vector<double>> memberships; // layer 1, per (input, MF)
    std::vector<double> firing;                   // layer 2, w per rule
    std::vector<double> normalized;               // layer 3, w-bar per rule
    std::vector<double> rule_values;              // consequent value f per rule
    std::vector<double> weighted;                 // layer 4, w-bar * f
    double output = 0.0;                          // layer 5
    bool degenerate = false; // all firing strengths below kFiringFloor
};

/// Evaluates the model on one input vector. Inputs are clamped to each
/// variable's range for membership evaluation; the affine consequents
/// use the raw inputs so the model extrapolates linearly off-range.
double forward(const SugenoFis& fis, std::span<const double> input);

/// Same evaluation, returning every layer's outputs.
ForwardTrace forward_trace(const SugenoFis& fis, std::span<const double> input);

/// Human-readable rule base listing.
std::string describe_rules(const SugenoFis& fis);

/// Textual per-rule trace (membership degrees, firing strengths, rule
/// outputs) for one input vector.
std::string format_trace(const SugenoFis& fis, std::span<const double> input);

} // namespace anfis
