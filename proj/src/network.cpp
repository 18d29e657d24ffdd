#include "anfis/network.hpp"
#include "anfis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace anfis {

namespace {

void check_input(const SugenoFis& fis, std::span<const double> input) {
    if (input.size() != fis.num_inputs()) {
        throw DataError("forward: input has " + std::to_string(input.size()) +
                        " values, model expects " + std::to_string(fis.num_inputs()));
    }
    for (double v : input) {
        if (!std::isfinite(v)) throw NumericError("forward: non-finite input value");
    }
}

void run_layers(const SugenoFis& fis, std::span<const double> input, ForwardTrace& t) {
    const std::size_t n = fis.num_inputs();
    const std::size_t r = fis.num_rules();

    t.memberships.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& var = fis.inputs[j];
        const double x = std::clamp(input[j], var.lo, var.hi);
        t.memberships[j].resize(var.mfs.size());
        for (std::size_t m = 0; m < var.mfs.size(); ++m) {
            t.memberships[j][m] = evaluate(var.mfs[m], x);
        }
    }

    t.firing.resize(r);
    t.rule_values.resize(r);
    double total = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
        const Rule& rule = fis.rules[k];
        double w = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            w *= t.memberships[j][rule.antecedent[j]];
        }
        t.firing[k] = w;
        total += w;

        double f = rule.consequent[n];
        for (std::size_t j = 0; j < n; ++j) {
            f += rule.consequent[j] * input[j];
        }
        t.rule_values[k] = f;
    }

    t.degenerate = total < kFiringFloor;
    const double denom = std::max(total, kFiringFloor);

    t.normalized.resize(r);
    t.weighted.resize(r);
    t.output = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
        t.normalized[k] = t.firing[k] / denom;
        t.weighted[k] = t.normalized[k] * t.rule_values[k];
        t.output += t.weighted[k];
    }
}

} // namespace

double forward(const SugenoFis& fis, std::span<const double> input) {
    check_input(fis, input);
    ForwardTrace t;
    run_layers(fis, input, t);
    return t.output;
}

ForwardTrace forward_trace(const SugenoFis& fis, std::span<const double> input) {
    check_input(fis, input);
    ForwardTrace t;
    run_layers(fis, input, t);
    return t;
}

namespace {

std::string affine_text(const Rule& rule, const std::vector<FuzzyVariable>& inputs) {
    std::ostringstream out;
    out << "f = ";
    const std::size_t n = inputs.size();
    for (std::size_t j = 0; j < n; ++j) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.6g", rule.consequent[j]);
        out << buf << "*" << inputs[j].name << " + ";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", rule.consequent[n]);
    out << buf;
    return out.str();
}

} // namespace

std::string describe_rules(const SugenoFis& fis) {
    fis.validate();
    std::ostringstream out;
    for (std::size_t k = 0; k < fis.num_rules(); ++k) {
        const Rule& rule = fis.rules[k];
        out << "rule " << k << ": IF ";
        for (std::size_t j = 0; j < fis.num_inputs(); ++j) {
            if (j > 0) out << " AND ";
            out << fis.inputs[j].name << " is mf" << rule.antecedent[j] + 1;
        }
        out << " THEN " << affine_text(rule, fis.inputs) << "\n";
    }
    return out.str();
}

std::string format_trace(const SugenoFis& fis, std::span<const double> input) {
    const ForwardTrace t = forward_trace(fis, input);
    std::ostringstream out;
    out << "input:";
    for (double v : input) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " %.6g", v);
        out << buf;
    }
    out << "\n";
    for (std::size_t k = 0; k < fis.num_rules(); ++k) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "rule %zu: w=%.6g wbar=%.6g f=%.6g contrib=%.6g\n",
                      k, t.firing[k], t.normalized[k], t.rule_values[k], t.weighted[k]);
        out << buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "output: %.10g%s\n", t.output,
                  t.degenerate ? " (no rule fired above floor)" : "");
    out << buf;
    return out.str();
}

} // namespace anfis
