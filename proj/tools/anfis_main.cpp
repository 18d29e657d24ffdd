// anfis: command-line front end for training, forecasting, evaluating and
// sweeping Sugeno neuro-fuzzy forecasting models on monthly series.
#include "anfis/cpi.hpp"
#include "anfis/errors.hpp"
#include "anfis/experiment.hpp"
#include "anfis/metrics.hpp"
#include "anfis/model_io.hpp"
#include "anfis/network.hpp"
#include "anfis/series_io.hpp"
#include "anfis/synthetic.hpp"
#include "anfis/timeseries.hpp"
#include "anfis/training.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g8(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

std::vector<int> parse_count_list(const std::string& text) {
    std::vector<int> counts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            counts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw anfis::ConfigError("bad MF count '" + item + "' in --mf-counts");
        }
    }
    if (counts.empty()) throw anfis::ConfigError("--mf-counts is empty");
    return counts;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw anfis::DataError("cannot write '" + path + "'");
    out << text;
}

struct TrainOpts {
    std::string data, mf = "gaussian", mf_counts, method = "hybrid";
    std::string gen = "grid", split_date, out;
    int lags = 0; // 0 = take from --mf-counts
    int epochs = 650;
    double split = 0.75;
    double radius = 0.5;
};

void cmd_train(const TrainOpts& opts) {
    const auto series = anfis::ingest_series(opts.data);

    anfis::ExperimentConfig config;
    config.generator = anfis::generator_from_name(opts.gen);
    config.mf_type = anfis::mf_type_from_name(opts.mf);
    config.method = anfis::method_from_name(opts.method);
    config.epochs = opts.epochs;
    config.radius = opts.radius;
    if (!opts.mf_counts.empty()) config.mf_counts = parse_count_list(opts.mf_counts);
    if (opts.lags > 0) {
        config.lags = opts.lags;
    } else if (config.generator == anfis::FisGenerator::grid) {
        if (config.mf_counts.empty()) {
            throw anfis::ConfigError("the grid generator needs --mf-counts (or give --lags)");
        }
        config.lags = static_cast<int>(config.mf_counts.size());
    } else {
        throw anfis::ConfigError("the cluster generator needs --lags");
    }
    if (!opts.split_date.empty()) {
        config.split_stamp = anfis::YearMonth::parse(opts.split_date);
    } else {
        config.split_fraction = opts.split;
    }

    const auto result = anfis::run_experiment(config, series);
    const auto& rec = result.record;
    std::cout << "architecture  " << rec.architecture << "\n"
              << "rules         " << rec.rule_count << "\n"
              << "epochs run    " << result.history.epochs_run
              << (result.history.reason == anfis::StopReason::error_goal_met
                      ? " (error goal met)\n"
                      : " (epochs exhausted)\n")
              << "train rmse    " << g8(rec.train_rmse) << "\n"
              << "test rmse     " << g8(rec.test_rmse) << "\n"
              << "test mape %   " << g8(rec.test_mape) << "\n";

    if (!opts.out.empty()) {
        anfis::ModelMetadata meta;
        meta.lags = config.lags;
        meta.extra["generator"] = anfis::generator_name(config.generator);
        meta.extra["method"] = anfis::method_name(config.method);
        meta.extra["epochs"] = std::to_string(result.history.epochs_run);
        meta.extra["train_rmse"] = g8(rec.train_rmse);
        meta.extra["test_rmse"] = g8(rec.test_rmse);
        meta.extra["test_mape"] = g8(rec.test_mape);
        anfis::save_model(opts.out, result.model, meta);
        std::cout << "model saved   " << opts.out << "\n";
    }
}

struct ForecastOpts {
    std::string model, data;
    bool trace = false;
};

void cmd_forecast(const ForecastOpts& opts) {
    const auto loaded = anfis::load_model(opts.model);
    const auto series = anfis::ingest_series(opts.data);
    const int lags = loaded.meta.lags;
    if (lags < 1) throw anfis::DataError("model metadata has no usable lag count");
    if (series.size() < static_cast<std::size_t>(lags)) {
        throw anfis::DataError("series has " + std::to_string(series.size()) +
                               " points but the model needs " + std::to_string(lags));
    }

    std::vector<double> window;
    for (std::size_t i = series.size() - static_cast<std::size_t>(lags); i < series.size(); ++i) {
        window.push_back(series[i].value);
    }
    if (opts.trace) {
        std::cout << anfis::describe_rules(loaded.fis) << "\n"
                  << anfis::format_trace(loaded.fis, window);
    }
    const double value = anfis::forward(loaded.fis, window);
    std::cout << series.back().stamp.next().str() << "," << g8(value) << "\n";
}

struct EvaluateOpts {
    std::string model, data, from_date;
};

void cmd_evaluate(const EvaluateOpts& opts) {
    const auto loaded = anfis::load_model(opts.model);
    const auto series = anfis::ingest_series(opts.data);
    anfis::Dataset ds = anfis::lag_embed(series, loaded.meta.lags);
    if (!opts.from_date.empty()) {
        ds = anfis::filter_from(ds, anfis::YearMonth::parse(opts.from_date));
    }
    const auto predictions = anfis::forecast_one_step(loaded.fis, ds);
    const auto report = anfis::evaluate_forecast(ds.targets, predictions);

    std::cout << "date,target,predicted,error\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::cout << ds.stamps[i].str() << "," << g8(ds.targets[i]) << ","
                  << g8(predictions[i]) << "," << g8(report.errors[i]) << "\n";
    }
    std::cout << "# rmse " << g8(report.rmse) << "\n"
              << "# mape_percent " << g8(report.mape) << "\n";
}

struct SweepOpts {
    std::string config, out_format = "csv", out;
};

void cmd_sweep(const SweepOpts& opts) {
    const auto grid = anfis::load_sweep_config(opts.config);
    if (grid.data_path.empty()) {
        throw anfis::ConfigError(opts.config + ": sweep config must set data = <series csv>");
    }
    const auto series = anfis::ingest_series(grid.data_path);
    const auto records = anfis::sweep(grid, series);
    const auto text = anfis::render_report(records, opts.out_format == "markdown"
                                                        ? anfis::ReportFormat::markdown
                                                        : anfis::ReportFormat::csv);
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        write_text(opts.out, text);
        std::cout << "report saved " << opts.out << "\n";
    }
}

void cmd_cpi(const std::string& basket_path) {
    const auto groups = anfis::ingest_basket(basket_path);
    std::cout << "group,cpi,weight\n";
    for (const auto& group : groups) {
        std::cout << group.name << "," << g8(group.group_cpi) << "," << g8(group.weight)
                  << "\n";
    }
    std::cout << "# national_cpi " << g8(anfis::national_cpi(groups)) << "\n";
}

struct SynthOpts {
    std::string start = "2000-01", out;
    int months = 192;
    double base = 100.0, trend = 0.05, season_amp = 3.0, noise_sd = 0.05;
    std::uint64_t seed = 42;
};

void cmd_synth(const SynthOpts& opts) {
    anfis::SyntheticConfig config;
    config.months = opts.months;
    config.start = anfis::YearMonth::parse(opts.start);
    config.base = opts.base;
    config.trend = opts.trend;
    config.season_amp = opts.season_amp;
    config.noise_sd = opts.noise_sd;
    config.seed = opts.seed;
    anfis::write_series(opts.out, anfis::synthetic_series(config));
    std::cout << "series saved " << opts.out << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sugeno neuro-fuzzy (ANFIS) one-step-ahead forecasting toolkit"};
    app.require_subcommand(1);

    TrainOpts train_opts;
    auto* train = app.add_subcommand("train", "Train a model on a monthly series");
    train->add_option("--data", train_opts.data, "Series CSV (date,cpi)")->required();
    train->add_option("--lags", train_opts.lags, "Input window length (2-6)");
    train->add_option("--mf", train_opts.mf, "MF family: gaussian|bell|triangular|trapezoidal");
    train->add_option("--mf-counts", train_opts.mf_counts, "MFs per input, e.g. 2,2,2,2,2");
    train->add_option("--method", train_opts.method, "hybrid|backprop");
    train->add_option("--epochs", train_opts.epochs, "Training epochs (30-5000)");
    auto* split_opt = train->add_option("--split", train_opts.split, "Training fraction (0,1)");
    train->add_option("--split-date", train_opts.split_date, "First test month YYYY-MM")
        ->excludes(split_opt);
    train->add_option("--gen", train_opts.gen, "FIS generator: grid|cluster");
    train->add_option("--radius", train_opts.radius, "Cluster radius (0,1]");
    train->add_option("--out", train_opts.out, "Save the trained model here");
    train->callback([&] { cmd_train(train_opts); });

    ForecastOpts forecast_opts;
    auto* forecast = app.add_subcommand("forecast", "Predict the month after a series ends");
    forecast->add_option("--model", forecast_opts.model, "Model file")->required();
    forecast->add_option("--data", forecast_opts.data, "Series CSV")->required();
    forecast->add_flag("--trace", forecast_opts.trace, "Print the per-rule trace");
    forecast->callback([&] { cmd_forecast(forecast_opts); });

    EvaluateOpts evaluate_opts;
    auto* evaluate = app.add_subcommand("evaluate", "Score a model on a series");
    evaluate->add_option("--model", evaluate_opts.model, "Model file")->required();
    evaluate->add_option("--data", evaluate_opts.data, "Series CSV")->required();
    evaluate->add_option("--from-date", evaluate_opts.from_date,
                         "Only score targets from this month on");
    evaluate->callback([&] { cmd_evaluate(evaluate_opts); });

    SweepOpts sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Run a hyperparameter sweep from a config file");
    sweep->add_option("--config", sweep_opts.config, "Sweep config file")->required();
    sweep->add_option("--out-format", sweep_opts.out_format, "csv|markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    sweep->add_option("--out", sweep_opts.out, "Write the report here instead of stdout");
    sweep->callback([&] { cmd_sweep(sweep_opts); });

    std::string basket_path;
    auto* cpi = app.add_subcommand("cpi", "Compute group and national CPI from a basket");
    cpi->add_option("--basket", basket_path, "Basket CSV (group,cost_current,cost_base,weight)")
        ->required();
    cpi->callback([&] { cmd_cpi(basket_path); });

    SynthOpts synth_opts;
    auto* synth = app.add_subcommand("synth", "Generate a deterministic synthetic series");
    synth->add_option("--months", synth_opts.months, "Number of months");
    synth->add_option("--start", synth_opts.start, "First month YYYY-MM");
    synth->add_option("--base", synth_opts.base, "Starting level");
    synth->add_option("--trend", synth_opts.trend, "Per-month drift");
    synth->add_option("--season-amp", synth_opts.season_amp, "12-month cycle amplitude");
    synth->add_option("--noise-sd", synth_opts.noise_sd, "Noise std-dev");
    synth->add_option("--seed", synth_opts.seed, "RNG seed");
    synth->add_option("--out", synth_opts.out, "Output CSV path")->required();
    synth->callback([&] { cmd_synth(synth_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const anfis::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const anfis::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const anfis::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
