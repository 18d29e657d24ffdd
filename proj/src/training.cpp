#include "anfis/training.hpp"
#include "anfis/errors.hpp"
#include "anfis/network.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace anfis {

void validate(const TrainConfig& config) {
    if (config.epochs < 1) {
        throw ConfigError("train: epochs must be >= 1");
    }
    if (!(config.step_decrease > 0.0 && config.step_decrease < 1.0)) {
        throw ConfigError("train: step_decrease must be in (0, 1)");
    }
    if (!(config.step_increase > 1.0)) {
        throw ConfigError("train: step_increase must be > 1");
    }
    if (!(config.initial_step >= 0.0) || !std::isfinite(config.initial_step)) {
        throw ConfigError("train: initial_step must be finite and >= 0");
    }
    if (std::isnan(config.error_goal)) {
        throw ConfigError("train: error_goal must not be NaN");
    }
}

StepSizeSchedule::StepSizeSchedule(double initial, double decrease_rate, double increase_rate)
    : step_(initial), decrease_rate_(decrease_rate), increase_rate_(increase_rate) {}

double StepSizeSchedule::observe(double epoch_error) {
    if (!has_last_) {
        has_last_ = true;
        last_error_ = epoch_error;
        decrease_streak_ = 1;
        return step_;
    }
    const int sign = epoch_error < last_error_ ? -1 : (epoch_error > last_error_ ? 1 : 0);
    last_error_ = epoch_error;

    if (sign < 0) {
        ++decrease_streak_;
    } else {
        decrease_streak_ = 0;
    }
    if (decrease_streak_ == 4) {
        step_ *= increase_rate_;
        decrease_streak_ = 0;
    }

    signs_.push_back(sign);
    if (signs_.size() > 4) signs_.erase(signs_.begin());
    if (signs_.size() == 4 && signs_[0] == 1 && signs_[1] == -1 && signs_[2] == 1 &&
        signs_[3] == -1) {
        step_ *= decrease_rate_;
        signs_.clear();
    }
    return step_;
}

namespace {

// Rows of the consequent design matrix are per-rule blocks
// (wbar * x_1 .. wbar * x_n, wbar); raw inputs, matching forward().
Eigen::MatrixXd build_design(const SugenoFis& fis, const Dataset& data) {
    const std::size_t n = fis.num_inputs();
    const std::size_t r = fis.num_rules();
    Eigen::MatrixXd design(data.size(), r * (n + 1));
    for (std::size_t s = 0; s < data.size(); ++s) {
        const ForwardTrace t = forward_trace(fis, data.rows[s]);
        for (std::size_t k = 0; k < r; ++k) {
            const double wbar = t.normalized[k];
            const std::size_t base = k * (n + 1);
            for (std::size_t j = 0; j < n; ++j) {
                design(s, base + j) = wbar * data.rows[s][j];
            }
            design(s, base + n) = wbar;
        }
    }
    return design;
}

void check_arity(const SugenoFis& fis, const Dataset& data, const char* who) {
    if (data.arity != fis.num_inputs()) {
        throw DataError(std::string(who) + ": dataset arity " + std::to_string(data.arity) +
                        " does not match model arity " + std::to_string(fis.num_inputs()));
    }
}

} // namespace

LseResult lse_consequents(SugenoFis& fis, const Dataset& data) {
    fis.validate();
    if (data.empty()) throw DataError("lse_consequents: empty dataset");
    data.validate();
    check_arity(fis, data, "lse_consequents");

    const std::size_t n = fis.num_inputs();
    const Eigen::MatrixXd design = build_design(fis, data);
    const Eigen::Map<const Eigen::VectorXd> targets(data.targets.data(),
                                                    static_cast<Eigen::Index>(data.size()));

    constexpr double kRidgeLambda = 1e-9;
    LseResult result;
    Eigen::VectorXd theta;
    if (design.rows() >= design.cols()) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
        if (qr.rank() == design.cols()) {
            theta = qr.solve(targets);
        }
    }
    if (theta.size() == 0) {
        // Underdetermined or rank-deficient: ridge on the normal equations.
        // Columns are equilibrated to unit norm first so the ridge term is
        // meaningful regardless of input magnitudes; raw input levels can
        // otherwise dwarf it and leave the solve effectively unregularized.
        Eigen::VectorXd scale = design.colwise().norm();
        for (Eigen::Index c = 0; c < scale.size(); ++c) {
            if (scale(c) == 0.0) scale(c) = 1.0;
        }
        const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
        Eigen::MatrixXd gram = scaled.transpose() * scaled;
        gram.diagonal().array() += kRidgeLambda;
        const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
        if (ldlt.info() != Eigen::Success) {
            throw NumericError("lse_consequents: ridge factorization failed");
        }
        theta = ldlt.solve(scaled.transpose() * targets);
        theta.array() /= scale.array();
        result.ridge_used = true;
    }
    if (!theta.allFinite()) {
        throw NumericError("lse_consequents: least-squares solution is not finite");
    }

    for (std::size_t k = 0; k < fis.num_rules(); ++k) {
        auto& consequent = fis.rules[k].consequent;
        for (std::size_t j = 0; j <= n; ++j) {
            consequent[j] = theta(static_cast<Eigen::Index>(k * (n + 1) + j));
        }
    }
    result.rmse = training_rmse(fis, data);
    return result;
}

std::vector<double> premise_gradient(const SugenoFis& fis, const Dataset& data) {
    fis.validate();
    data.validate();
    check_arity(fis, data, "premise_gradient");

    const std::size_t n = fis.num_inputs();

    // Flat parameter offsets, input-major.
    std::vector<std::vector<std::size_t>> offset(n);
    std::size_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        offset[j].resize(fis.inputs[j].mfs.size());
        for (std::size_t m = 0; m < fis.inputs[j].mfs.size(); ++m) {
            offset[j][m] = total;
            total += fis.inputs[j].mfs[m].params.size();
        }
    }
    std::vector<double> grad(total, 0.0);

    for (std::size_t s = 0; s < data.size(); ++s) {
        const auto& x = data.rows[s];
        const ForwardTrace t = forward_trace(fis, x);
        const double residual = t.output - data.targets[s];
        const double denom = std::max(
            std::accumulate(t.firing.begin(), t.firing.end(), 0.0), kFiringFloor);

        for (std::size_t k = 0; k < fis.num_rules(); ++k) {
            // d(output)/d(w_k); the floored denominator is constant.
            const double dout_dw = t.degenerate
                                       ? t.rule_values[k] / denom
                                       : (t.rule_values[k] - t.output) / denom;
            const double common = residual * dout_dw;
            if (common == 0.0) continue;

            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t m = fis.rules[k].antecedent[j];
                double partner = 1.0;
                for (std::size_t l = 0; l < n; ++l) {
                    if (l != j) partner *= t.memberships[l][fis.rules[k].antecedent[l]];
                }
                if (partner == 0.0) continue;
                const auto& var = fis.inputs[j];
                const double cx = std::clamp(x[j], var.lo, var.hi);
                const std::vector<double> dmu = parameter_gradient(var.mfs[m], cx);
                for (std::size_t p = 0; p < dmu.size(); ++p) {
                    grad[offset[j][m] + p] += common * partner * dmu[p];
                }
            }
        }
    }
    return grad;
}

std::vector<double> consequent_gradient(const SugenoFis& fis, const Dataset& data) {
    fis.validate();
    data.validate();
    check_arity(fis, data, "consequent_gradient");

    const std::size_t n = fis.num_inputs();
    std::vector<double> grad(fis.num_rules() * (n + 1), 0.0);
    for (std::size_t s = 0; s < data.size(); ++s) {
        const auto& x = data.rows[s];
        const ForwardTrace t = forward_trace(fis, x);
        const double residual = t.output - data.targets[s];
        for (std::size_t k = 0; k < fis.num_rules(); ++k) {
            const std::size_t base = k * (n + 1);
            const double common = residual * t.normalized[k];
            for (std::size_t j = 0; j < n; ++j) {
                grad[base + j] += common * x[j];
            }
            grad[base + n] += common;
        }
    }
    return grad;
}

double training_rmse(const SugenoFis& fis, const Dataset& data) {
    if (data.empty()) throw DataError("training_rmse: empty dataset");
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < data.size(); ++s) {
        const double err = data.targets[s] - forward(fis, data.rows[s]);
        sum_sq += err * err;
    }
    return std::sqrt(sum_sq / static_cast<double>(data.size()));
}

namespace {

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Normalized descent step of the given size; skipped entirely when the
// step or the gradient vanishes so parameters stay bit-identical.
void apply_premise_step(SugenoFis& fis, const std::vector<double>& grad, double step) {
    const double g = norm(grad);
    if (step == 0.0 || g == 0.0) return;
    const double scale = step / g;
    std::size_t idx = 0;
    for (auto& var : fis.inputs) {
        for (auto& mf : var.mfs) {
            for (double& p : mf.params) {
                p -= scale * grad[idx++];
            }
            project_parameters(mf);
        }
    }
}

void apply_backprop_step(SugenoFis& fis, const std::vector<double>& premise_grad,
                         const std::vector<double>& consequent_grad, double step) {
    double g = 0.0;
    for (double x : premise_grad) g += x * x;
    for (double x : consequent_grad) g += x * x;
    g = std::sqrt(g);
    if (step == 0.0 || g == 0.0) return;
    const double scale = step / g;

    std::size_t idx = 0;
    for (auto& var : fis.inputs) {
        for (auto& mf : var.mfs) {
            for (double& p : mf.params) {
                p -= scale * premise_grad[idx++];
            }
            project_parameters(mf);
        }
    }
    idx = 0;
    for (auto& rule : fis.rules) {
        for (double& c : rule.consequent) {
            c -= scale * consequent_grad[idx++];
        }
    }
}

} // namespace

TrainHistory train(SugenoFis& fis, const Dataset& data, const TrainConfig& config) {
    validate(config);
    fis.validate();
    if (data.empty()) throw DataError("train: empty dataset");
    data.validate();
    check_arity(fis, data, "train");

    TrainHistory history;
    StepSizeSchedule schedule(config.initial_step, config.step_decrease, config.step_increase);

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        const double step = schedule.current();
        double epoch_error = 0.0;

        if (config.method == TrainMethod::hybrid) {
            apply_premise_step(fis, premise_gradient(fis, data), step);
            history.pre_lse_rmse.push_back(training_rmse(fis, data));
            const LseResult lse = lse_consequents(fis, data);
            history.ridge_used = history.ridge_used || lse.ridge_used;
            epoch_error = lse.rmse;
        } else {
            apply_backprop_step(fis, premise_gradient(fis, data),
                                consequent_gradient(fis, data), step);
            epoch_error = training_rmse(fis, data);
        }

        history.epoch_rmse.push_back(epoch_error);
        history.epochs_run = epoch;
        if (epoch_error <= config.error_goal) {
            history.reason = StopReason::error_goal_met;
            break;
        }
        schedule.observe(epoch_error);
    }

    history.final_step = schedule.current();
    return history;
}

} // namespace anfis
