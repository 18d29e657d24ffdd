// Experiment runner: one config -> generate FIS, train, evaluate; plus a
// Cartesian sweep over config lists with deterministic tabular reports.
#pragma once

#include "anfis/dataset.hpp"
#include "anfis/fis.hpp"
#include "anfis/membership.hpp"
#include "anfis/training.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anfis {

enum class FisGenerator { grid, clustering };

const char* generator_name(FisGenerator gen);
FisGenerator generator_from_name(const std::string& name);
const char* method_name(TrainMethod method);
TrainMethod method_from_name(const std::string& name);

// A single forecasting experiment.  For the grid generator `mf_counts` has
// one entry per lag input; for clustering the rule count is data-driven and
// `mf_counts` stays empty.
struct ExperimentConfig {
    MfType mf_type = MfType::gaussian;
    std::vector<int> mf_counts;
    int lags = 5;
    int epochs = 650;
    TrainMethod method = TrainMethod::hybrid;
    FisGenerator generator = FisGenerator::grid;
    double radius = 0.5;                    // clustering only
    double split_fraction = 0.75;           // used when split_stamp is unset
    std::optional<YearMonth> split_stamp;   // first test-set month
    std::uint64_t seed = 0;

    // Enforces the supported ranges: lags in [2,6], grid MF counts in [2,4],
    // epochs in [30,5000], radius in (0,1], split fraction in (0,1).
    void validate() const;
};

// One report row.  `wall_seconds` is informational only and is deliberately
// not rendered, so reports are byte-identical across runs.
struct ExperimentRecord {
    ExperimentConfig config;
    std::vector<int> mf_counts_built;  // per-input MF counts actually used
    std::string architecture;
    std::size_t rule_count = 0;
    double train_rmse = 0.0;
    double test_rmse = 0.0;
    double test_mape = 0.0;
    double wall_seconds = 0.0;
    bool best = false;
    bool overfit = false;
    bool failed = false;
    std::string error;
};

struct ExperimentResult {
    ExperimentRecord record;
    SugenoFis model;
    TrainHistory history;
};

// Runs the full pipeline on an already-ingested series: lag-embed, split,
// generate FIS, train, score train and test sets.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<SeriesPoint>& series);

// Value lists to expand into a Cartesian product of ExperimentConfigs.
// Grid-generator runs take lags from each mf_counts tuple's length; the
// `lags` list applies to clustering runs only.
struct SweepGrid {
    std::string data_path;  // carried for the CLI; unused by sweep() itself
    std::vector<FisGenerator> generators{FisGenerator::grid};
    std::vector<MfType> mf_types{MfType::gaussian};
    std::vector<std::vector<int>> mf_counts;
    std::vector<int> lags_list;
    std::vector<double> radii{0.5};
    std::vector<int> epochs_list;
    std::vector<TrainMethod> methods{TrainMethod::hybrid};
    double split_fraction = 0.75;
    std::optional<YearMonth> split_stamp;
    std::uint64_t seed = 0;
};

std::vector<ExperimentConfig> expand_grid(const SweepGrid& grid);

// Runs every combination sequentially.  A failing run is recorded in its row
// (failed/error fields) without aborting the rest.  Afterwards the rows are
// sorted by config, exactly one non-failed row is flagged best (lowest test
// RMSE, ties broken by test MAPE then rule count), and rows whose test RMSE
// exceeds that of a sibling config with fewer epochs are flagged overfit.
std::vector<ExperimentRecord> sweep(const SweepGrid& grid,
                                    const std::vector<SeriesPoint>& series);

enum class ReportFormat { csv, markdown };

// Renders rows as CSV or a markdown table with columns
//   MF | MFs per input | Epochs | Architecture | RMSE Training |
//   RMSE Testing | MAPE Testing | Best | Overfit | Error
// Metrics carry 8 significant digits; both formats print identical numbers.
std::string render_report(const std::vector<ExperimentRecord>& records,
                          ReportFormat format);

// Parses the flat key=value sweep config format (see README): lists are
// comma-separated, mf_counts tuples use ';' between counts.
SweepGrid parse_sweep_config(const std::string& text);
SweepGrid load_sweep_config(const std::string& path);

} // namespace anfis
