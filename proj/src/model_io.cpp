#include "anfis/model_io.hpp"
#include "anfis/errors.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace anfis {

namespace {

constexpr const char* kVersionLine = "anfis-model v1";

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            ++line_no_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw DataError("model file: line " + std::to_string(line_no_) + ": " + what);
    }

    std::string expect(const std::string& what) {
        std::string line;
        if (!next(line)) {
            throw DataError("model file: truncated, expected " + what);
        }
        return line;
    }

private:
    std::istringstream in_;
    int line_no_ = 0;
};

double read_double(std::istringstream& in, LineReader& reader, const char* what) {
    std::string tok;
    if (!(in >> tok)) reader.fail(std::string("missing ") + what);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') {
        reader.fail(std::string("bad ") + what + " '" + tok + "'");
    }
    return v;
}

} // namespace

std::string serialize_model(const SugenoFis& fis, const ModelMetadata& meta) {
    fis.validate();
    std::ostringstream body;
    body << kVersionLine << "\n";
    body << "lags " << meta.lags << "\n";
    body << "input_order " << meta.input_order << "\n";
    for (const auto& [key, value] : meta.extra) {
        body << "meta " << key << " " << value << "\n";
    }
    body << "inputs " << fis.num_inputs() << "\n";
    for (std::size_t j = 0; j < fis.num_inputs(); ++j) {
        const auto& var = fis.inputs[j];
        body << "input " << j << " " << var.name << " " << fmt_double(var.lo) << " "
             << fmt_double(var.hi) << " " << var.mfs.size() << "\n";
        for (const auto& mf : var.mfs) {
            body << "mf " << mf_type_name(mf.type);
            for (double p : mf.params) body << " " << fmt_double(p);
            body << "\n";
        }
    }
    body << "rules " << fis.num_rules() << "\n";
    for (const auto& rule : fis.rules) {
        body << "rule";
        for (std::size_t idx : rule.antecedent) body << " " << idx;
        body << " :";
        for (double c : rule.consequent) body << " " << fmt_double(c);
        body << "\n";
    }

    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "checksum %016" PRIx64, fnv1a64(body.str()));
    return body.str() + checksum + "\n";
}

void save_model(const std::string& path, const SugenoFis& fis, const ModelMetadata& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << serialize_model(fis, meta);
    if (!out) throw DataError("write failed for '" + path + "'");
}

LoadedModel parse_model(const std::string& text) {
    // Verify the trailing checksum over everything before it.
    const std::size_t mark = text.rfind("checksum ");
    if (mark == std::string::npos) {
        throw DataError("model file: missing checksum line (truncated?)");
    }
    std::uint64_t stored = 0;
    if (std::sscanf(text.c_str() + mark, "checksum %" SCNx64, &stored) != 1) {
        throw DataError("model file: malformed checksum line");
    }
    if (stored != fnv1a64(text.substr(0, mark))) {
        throw DataError("model file: checksum mismatch");
    }

    LineReader reader(text.substr(0, mark));
    std::string line = reader.expect("version line");
    if (line != kVersionLine) {
        throw DataError("model file: unsupported version '" + line + "'");
    }

    LoadedModel model;
    std::size_t input_count = 0;
    bool saw_inputs = false;
    while (true) {
        line = reader.expect("header or inputs section");
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "lags") {
            if (!(in >> model.meta.lags)) reader.fail("bad lags value");
        } else if (key == "input_order") {
            if (!(in >> model.meta.input_order)) reader.fail("bad input_order value");
        } else if (key == "meta") {
            std::string name;
            if (!(in >> name)) reader.fail("bad meta line");
            std::string rest;
            std::getline(in, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            model.meta.extra[name] = rest;
        } else if (key == "inputs") {
            if (!(in >> input_count) || input_count == 0) reader.fail("bad inputs count");
            saw_inputs = true;
            break;
        } else {
            reader.fail("unexpected keyword '" + key + "'");
        }
    }
    if (!saw_inputs) throw DataError("model file: missing inputs section");

    for (std::size_t j = 0; j < input_count; ++j) {
        line = reader.expect("input declaration");
        std::istringstream in(line);
        std::string key;
        std::size_t index = 0, mf_count = 0;
        in >> key >> index;
        if (key != "input" || index != j) reader.fail("expected 'input " + std::to_string(j) + "'");
        FuzzyVariable var;
        if (!(in >> var.name)) reader.fail("missing input name");
        var.lo = read_double(in, reader, "range low");
        var.hi = read_double(in, reader, "range high");
        if (!(in >> mf_count) || mf_count == 0) reader.fail("bad MF count");

        for (std::size_t m = 0; m < mf_count; ++m) {
            line = reader.expect("mf line");
            std::istringstream mfin(line);
            std::string mfkey, type_name;
            mfin >> mfkey >> type_name;
            if (mfkey != "mf") reader.fail("expected 'mf' line");
            MembershipFunction mf;
            mf.type = mf_type_from_name(type_name);
            const std::size_t count = parameter_count(mf.type);
            for (std::size_t p = 0; p < count; ++p) {
                mf.params.push_back(read_double(mfin, reader, "MF parameter"));
            }
            var.mfs.push_back(std::move(mf));
        }
        model.fis.inputs.push_back(std::move(var));
    }

    line = reader.expect("rules section");
    std::size_t rule_count = 0;
    {
        std::istringstream in(line);
        std::string key;
        in >> key >> rule_count;
        if (key != "rules" || rule_count == 0) reader.fail("expected 'rules <count>'");
    }
    for (std::size_t k = 0; k < rule_count; ++k) {
        line = reader.expect("rule line");
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key != "rule") reader.fail("expected 'rule' line");
        Rule rule;
        for (std::size_t j = 0; j < input_count; ++j) {
            std::size_t idx = 0;
            if (!(in >> idx)) reader.fail("missing antecedent index");
            rule.antecedent.push_back(idx);
        }
        std::string sep;
        if (!(in >> sep) || sep != ":") reader.fail("missing ':' separator");
        for (std::size_t j = 0; j <= input_count; ++j) {
            rule.consequent.push_back(read_double(in, reader, "consequent coefficient"));
        }
        model.fis.rules.push_back(std::move(rule));
    }

    try {
        model.fis.validate();
    } catch (const ConfigError& e) {
        throw DataError(std::string("model file: invalid model: ") + e.what());
    }
    return model;
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_model(buf.str());
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

} // namespace anfis
