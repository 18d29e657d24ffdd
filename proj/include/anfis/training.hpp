#pragma once

#include "anfis/dataset.hpp"
#include "anfis/fis.hpp"

#include <vector>

namespace anfis {

enum class TrainMethod { backprop, hybrid };

enum class StopReason { epochs_exhausted, error_goal_met };

struct TrainConfig {
    int epochs = 100;
    TrainMethod method = TrainMethod::hybrid;
    double error_goal = 0.0;
    double initial_step = 0.01;
    double step_decrease = 0.9;
    double step_increase = 1.1;
};

/// Throws ConfigError on invalid settings (epochs < 1, rates out of
/// order, negative step).
void validate(const TrainConfig& config);

struct TrainHistory {
    std::vector<double> epoch_rmse;   // per epoch, after that epoch's updates
    std::vector<double> pre_lse_rmse; // hybrid only: before the consequent solve
    double final_step = 0.0;
    int epochs_run = 0;
    StopReason reason = StopReason::epochs_exhausted;
    bool ridge_used = false;
};

/// Step-size schedule driven by the training-error sequence: the step
/// grows by step_increase after four consecutive error decreases (the
/// first epoch starts a decrease run) and shrinks by step_decrease
/// after two consecutive up-down alternations.
class StepSizeSchedule {
public:
    StepSizeSchedule(double initial, double decrease_rate, double increase_rate);

    double current() const { return step_; }

    /// Feeds one epoch error and returns the step for the next epoch.
    double observe(double epoch_error);

private:
    double step_;
    double decrease_rate_;
    double increase_rate_;
    double last_error_ = 0.0;
    bool has_last_ = false;
    int decrease_streak_ = 0;
    std::vector<int> signs_; // recent comparison signs, cleared on a decrease fire
};

struct LseResult {
    double rmse = 0.0;
    bool ridge_used = false;
};

/// Replaces every rule consequent with the least-squares optimum for the
/// current premises: the design matrix row for a sample concatenates,
/// per rule, (wbar * inputs..., wbar). Rank-deficient or underdetermined
/// systems fall back to ridge-regularized normal equations (lambda =
/// 1e-9, columns equilibrated to unit norm) and are flagged in the
/// result.
LseResult lse_consequents(SugenoFis& fis, const Dataset& data);

/// Gradient of 0.5 * sum of squared errors with respect to every MF
/// parameter, flattened input-major (then MF order, then parameter
/// order), summed over samples.
std::vector<double> premise_gradient(const SugenoFis& fis, const Dataset& data);

/// Gradient of the same loss with respect to every consequent
/// coefficient, flattened rule-major.
std::vector<double> consequent_gradient(const SugenoFis& fis, const Dataset& data);

/// Root mean square error of the model over the dataset.
double training_rmse(const SugenoFis& fis, const Dataset& data);

/// Trains the model in place. Hybrid epochs take one normalized premise
/// gradient step (a no-op while the gradient is zero, e.g. with freshly
/// zeroed consequents) and then re-solve the consequents by least
/// squares; backprop epochs take one normalized step on premise and
/// consequent parameters together. The recorded epoch RMSE always
/// matches the model state at the end of that epoch.
TrainHistory train(SugenoFis& fis, const Dataset& data, const TrainConfig& config);

} // namespace anfis
