#include "anfis/experiment.hpp"

#include "anfis/errors.hpp"
#include "anfis/metrics.hpp"
#include "anfis/network.hpp"
#include "anfis/timeseries.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

namespace anfis {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) return {};
    const auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0') {
        throw ConfigError("bad " + what + " '" + text + "'");
    }
    return static_cast<int>(v);
}

double parse_double(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        throw ConfigError("bad " + what + " '" + text + "'");
    }
    return v;
}

std::string join_counts(const std::vector<int>& counts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(counts[i]);
    }
    return out;
}

std::string describe_config(const ExperimentConfig& c) {
    std::string out = "config[generator=";
    out += generator_name(c.generator);
    if (c.generator == FisGenerator::grid) {
        out += " mf_type=";
        out += mf_type_name(c.mf_type);
        out += " mf_counts=" + join_counts(c.mf_counts, ';');
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", c.radius);
        out += " radius=";
        out += buf;
    }
    out += " lags=" + std::to_string(c.lags);
    out += " epochs=" + std::to_string(c.epochs);
    out += " method=";
    out += method_name(c.method);
    out += "]";
    return out;
}

// Sort key covering every swept field; keeps report order independent of
// execution order.
auto config_key(const ExperimentConfig& c) {
    return std::make_tuple(static_cast<int>(c.generator), static_cast<int>(c.mf_type),
                           c.lags, c.mf_counts, c.radius, static_cast<int>(c.method),
                           c.epochs);
}

// Same key minus epochs: rows differing only in epochs are overfit siblings.
auto sibling_key(const ExperimentConfig& c) {
    return std::make_tuple(static_cast<int>(c.generator), static_cast<int>(c.mf_type),
                           c.lags, c.mf_counts, c.radius, static_cast<int>(c.method));
}

std::string format_metric(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

const char* generator_name(FisGenerator gen) {
    return gen == FisGenerator::grid ? "grid" : "cluster";
}

FisGenerator generator_from_name(const std::string& name) {
    if (name == "grid") return FisGenerator::grid;
    if (name == "cluster") return FisGenerator::clustering;
    throw ConfigError("unknown FIS generator '" + name + "' (expected grid or cluster)");
}

const char* method_name(TrainMethod method) {
    return method == TrainMethod::hybrid ? "hybrid" : "backprop";
}

TrainMethod method_from_name(const std::string& name) {
    if (name == "hybrid") return TrainMethod::hybrid;
    if (name == "backprop") return TrainMethod::backprop;
    throw ConfigError("unknown training method '" + name + "' (expected hybrid or backprop)");
}

void ExperimentConfig::validate() const {
    if (lags < 2 || lags > 6) {
        throw ConfigError("lags must be in [2,6], got " + std::to_string(lags));
    }
    if (epochs < 30 || epochs > 5000) {
        throw ConfigError("epochs must be in [30,5000], got " + std::to_string(epochs));
    }
    if (generator == FisGenerator::grid) {
        if (mf_counts.size() != static_cast<std::size_t>(lags)) {
            throw ConfigError("mf_counts has " + std::to_string(mf_counts.size()) +
                              " entries but lags is " + std::to_string(lags));
        }
        for (int count : mf_counts) {
            if (count < 2 || count > 4) {
                throw ConfigError("MF counts must be in [2,4], got " + std::to_string(count));
            }
        }
    } else {
        if (radius <= 0.0 || radius > 1.0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", radius);
            throw ConfigError(std::string("cluster radius must be in (0,1], got ") + buf);
        }
    }
    if (!split_stamp && (split_fraction <= 0.0 || split_fraction >= 1.0)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", split_fraction);
        throw ConfigError(std::string("split fraction must be in (0,1), got ") + buf);
    }
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<SeriesPoint>& series) {
    const auto started = std::chrono::steady_clock::now();
    try {
        config.validate();
        const Dataset all = lag_embed(series, config.lags);
        auto [train_set, test_set] = config.split_stamp
                                         ? split_at_stamp(all, *config.split_stamp)
                                         : split(all, config.split_fraction);

        SugenoFis fis = config.generator == FisGenerator::grid
                            ? grid_partition(train_set, config.mf_counts, config.mf_type)
                            : subtractive_clustering(train_set, config.radius);

        TrainConfig tc;
        tc.epochs = config.epochs;
        tc.method = config.method;
        TrainHistory history = train(fis, train_set, tc);

        ExperimentResult result;
        result.record.config = config;
        for (const auto& var : fis.inputs) {
            result.record.mf_counts_built.push_back(static_cast<int>(var.mfs.size()));
        }
        result.record.architecture = architecture_string(fis);
        result.record.rule_count = fis.num_rules();
        result.record.train_rmse = training_rmse(fis, train_set);
        const std::vector<double> test_predictions = forecast_one_step(fis, test_set);
        const EvalReport test_report = evaluate_forecast(test_set.targets, test_predictions);
        result.record.test_rmse = test_report.rmse;
        result.record.test_mape = test_report.mape;
        result.record.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        result.model = std::move(fis);
        result.history = std::move(history);
        return result;
    } catch (const ConfigError& e) {
        throw ConfigError(describe_config(config) + ": " + e.what());
    } catch (const DataError& e) {
        throw DataError(describe_config(config) + ": " + e.what());
    } catch (const NumericError& e) {
        throw NumericError(describe_config(config) + ": " + e.what());
    }
}

std::vector<ExperimentConfig> expand_grid(const SweepGrid& grid) {
    if (grid.generators.empty()) throw ConfigError("sweep: generator list is empty");
    if (grid.epochs_list.empty()) throw ConfigError("sweep: epochs list is empty");
    if (grid.methods.empty()) throw ConfigError("sweep: method list is empty");

    std::vector<ExperimentConfig> configs;
    for (FisGenerator gen : grid.generators) {
        if (gen == FisGenerator::grid) {
            if (grid.mf_types.empty()) throw ConfigError("sweep: mf_type list is empty");
            if (grid.mf_counts.empty()) {
                throw ConfigError("sweep: mf_counts list is empty (required for the grid generator)");
            }
            for (MfType mf_type : grid.mf_types) {
                for (const auto& counts : grid.mf_counts) {
                    for (int epochs : grid.epochs_list) {
                        for (TrainMethod method : grid.methods) {
                            ExperimentConfig c;
                            c.generator = gen;
                            c.mf_type = mf_type;
                            c.mf_counts = counts;
                            c.lags = static_cast<int>(counts.size());
                            c.epochs = epochs;
                            c.method = method;
                            c.split_fraction = grid.split_fraction;
                            c.split_stamp = grid.split_stamp;
                            c.seed = grid.seed;
                            configs.push_back(std::move(c));
                        }
                    }
                }
            }
        } else {
            if (grid.lags_list.empty()) {
                throw ConfigError("sweep: lags list is empty (required for the cluster generator)");
            }
            if (grid.radii.empty()) throw ConfigError("sweep: radius list is empty");
            for (int lags : grid.lags_list) {
                for (double radius : grid.radii) {
                    for (int epochs : grid.epochs_list) {
                        for (TrainMethod method : grid.methods) {
                            ExperimentConfig c;
                            c.generator = gen;
                            c.lags = lags;
                            c.radius = radius;
                            c.epochs = epochs;
                            c.method = method;
                            c.split_fraction = grid.split_fraction;
                            c.split_stamp = grid.split_stamp;
                            c.seed = grid.seed;
                            configs.push_back(std::move(c));
                        }
                    }
                }
            }
        }
    }
    return configs;
}

std::vector<ExperimentRecord> sweep(const SweepGrid& grid,
                                    const std::vector<SeriesPoint>& series) {
    const auto configs = expand_grid(grid);
    std::vector<ExperimentRecord> records;
    records.reserve(configs.size());
    for (const auto& config : configs) {
        try {
            records.push_back(run_experiment(config, series).record);
        } catch (const Error& e) {
            ExperimentRecord row;
            row.config = config;
            row.mf_counts_built = config.mf_counts;
            row.failed = true;
            row.error = e.what();
            records.push_back(std::move(row));
        }
    }

    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return config_key(a.config) < config_key(b.config);
              });

    const ExperimentRecord* best = nullptr;
    for (const auto& row : records) {
        if (row.failed) continue;
        if (!best ||
            std::make_tuple(row.test_rmse, row.test_mape, row.rule_count) <
                std::make_tuple(best->test_rmse, best->test_mape, best->rule_count)) {
            best = &row;
        }
    }
    for (auto& row : records) row.best = (&row == best);

    for (auto& row : records) {
        if (row.failed) continue;
        for (const auto& other : records) {
            if (other.failed || &other == &row) continue;
            if (sibling_key(other.config) != sibling_key(row.config)) continue;
            if (other.config.epochs < row.config.epochs && other.test_rmse < row.test_rmse) {
                row.overfit = true;
                break;
            }
        }
    }
    return records;
}

std::string render_report(const std::vector<ExperimentRecord>& records, ReportFormat format) {
    if (records.empty()) throw ConfigError("cannot render an empty report");

    static constexpr std::array<const char*, 10> kHeaders = {
        "MF",           "MFs per input", "Epochs",       "Architecture", "RMSE Training",
        "RMSE Testing", "MAPE Testing",  "Best",         "Overfit",      "Error"};

    std::vector<std::array<std::string, 10>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        std::array<std::string, 10> row;
        row[0] = mf_type_name(r.config.generator == FisGenerator::grid ? r.config.mf_type
                                                                       : MfType::gaussian);
        row[1] = r.mf_counts_built.empty() ? std::string("-")
                                           : join_counts(r.mf_counts_built, ' ');
        row[2] = std::to_string(r.config.epochs);
        if (r.failed) {
            row[3] = row[4] = row[5] = row[6] = "-";
        } else {
            row[3] = r.architecture;
            row[4] = format_metric(r.train_rmse);
            row[5] = format_metric(r.test_rmse);
            row[6] = format_metric(r.test_mape);
        }
        row[7] = r.best ? "yes" : "";
        row[8] = r.overfit ? "yes" : "";
        row[9] = r.error;
        rows.push_back(std::move(row));
    }

    std::string out;
    if (format == ReportFormat::csv) {
        out = "mf,mfs_per_input,epochs,architecture,rmse_training,rmse_testing,"
              "mape_testing,best,overfit,error\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += csv_escape(row[i]);
            }
            out += '\n';
        }
    } else {
        out = "|";
        for (const char* h : kHeaders) out += std::string(" ") + h + " |";
        out += "\n|";
        for (std::size_t i = 0; i < kHeaders.size(); ++i) out += " --- |";
        out += "\n";
        for (const auto& row : rows) {
            out += "|";
            for (const auto& cell : row) {
                std::string safe = cell;
                std::replace(safe.begin(), safe.end(), '|', '/');
                out += " " + safe + " |";
            }
            out += "\n";
        }
    }
    return out;
}

SweepGrid parse_sweep_config(const std::string& text) {
    SweepGrid grid;
    bool saw_split = false, saw_split_date = false;
    std::vector<std::string> seen;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("sweep config line " + std::to_string(line_no) +
                              ": expected key = value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError("sweep config line " + std::to_string(line_no) +
                              ": empty value for '" + key + "'");
        }
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw ConfigError("sweep config line " + std::to_string(line_no) +
                              ": duplicate key '" + key + "'");
        }
        seen.push_back(key);

        const auto items = split_on(value, ',');
        if (key == "data") {
            grid.data_path = value;
        } else if (key == "generator") {
            grid.generators.clear();
            for (const auto& item : items) grid.generators.push_back(generator_from_name(item));
        } else if (key == "mf_type") {
            grid.mf_types.clear();
            for (const auto& item : items) grid.mf_types.push_back(mf_type_from_name(item));
        } else if (key == "mf_counts") {
            for (const auto& item : items) {
                std::vector<int> counts;
                for (const auto& piece : split_on(item, ';')) {
                    const int n = parse_int(piece, "MF count");
                    if (n < 1) throw ConfigError("bad MF count '" + piece + "'");
                    counts.push_back(n);
                }
                grid.mf_counts.push_back(std::move(counts));
            }
        } else if (key == "lags") {
            for (const auto& item : items) grid.lags_list.push_back(parse_int(item, "lags"));
        } else if (key == "radius") {
            grid.radii.clear();
            for (const auto& item : items) grid.radii.push_back(parse_double(item, "radius"));
        } else if (key == "epochs") {
            for (const auto& item : items) grid.epochs_list.push_back(parse_int(item, "epochs"));
        } else if (key == "method") {
            grid.methods.clear();
            for (const auto& item : items) grid.methods.push_back(method_from_name(item));
        } else if (key == "split") {
            grid.split_fraction = parse_double(value, "split fraction");
            saw_split = true;
        } else if (key == "split_date") {
            grid.split_stamp = YearMonth::parse(value);
            saw_split_date = true;
        } else if (key == "seed") {
            char* end = nullptr;
            grid.seed = std::strtoull(value.c_str(), &end, 10);
            if (end == value.c_str() || *end != '\0') {
                throw ConfigError("bad seed '" + value + "'");
            }
        } else {
            throw ConfigError("sweep config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
    }
    if (saw_split && saw_split_date) {
        throw ConfigError("sweep config: give either split or split_date, not both");
    }
    return grid;
}

SweepGrid load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sweep_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace anfis
