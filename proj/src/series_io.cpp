#include "anfis/series_io.hpp"
#include "anfis/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace anfis {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, int line_no, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ": bad " + what + " '" + text + "'");
    }
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::vector<SeriesPoint> parse_series_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<SeriesPoint> series;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;

        const auto fields = split_csv_line(trimmed);
        if (!header_seen) {
            if (fields.size() != 2 || fields[0] != "date" || fields[1] != "cpi") {
                throw DataError("line " + std::to_string(line_no) +
                                ": expected header 'date,cpi'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 2) {
            throw DataError("line " + std::to_string(line_no) + ": expected 'YYYY-MM,value'");
        }

        SeriesPoint point;
        try {
            point.stamp = YearMonth::parse(fields[0]);
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
        point.value = parse_number(fields[1], line_no, "value");

        if (!series.empty()) {
            const YearMonth& prev = series.back().stamp;
            if (point.stamp <= prev) {
                throw DataError("line " + std::to_string(line_no) + ": stamp " +
                                point.stamp.str() + " is not after " + prev.str());
            }
            if (point.stamp != prev.next()) {
                throw DataError("line " + std::to_string(line_no) + ": gap between " +
                                prev.str() + " and " + point.stamp.str());
            }
        }
        series.push_back(point);
    }
    if (series.empty()) throw DataError("series is empty");
    return series;
}

std::vector<SeriesPoint> ingest_series(const std::string& path) {
    try {
        return parse_series_csv(read_file(path));
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_series(const std::string& path, const std::vector<SeriesPoint>& series) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << "date,cpi\n";
    for (const auto& p : series) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.17g", p.value);
        out << p.stamp.str() << "," << buf << "\n";
    }
}

std::vector<BasketGroup> ingest_basket(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    std::vector<BasketGroup> groups;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;

        const auto fields = split_csv_line(trimmed);
        if (groups.empty() && fields.size() == 4 && fields[0] == "group") {
            if (fields != std::vector<std::string>{"group", "cost_current", "cost_base", "weight"}) {
                throw DataError(path + ": line " + std::to_string(line_no) +
                                ": expected header 'group,cost_current,cost_base,weight'");
            }
            continue;
        }
        if (fields.size() != 4) {
            throw DataError(path + ": line " + std::to_string(line_no) +
                            ": expected 4 fields");
        }
        BasketGroup g;
        g.name = fields[0];
        const double current = parse_number(fields[1], line_no, "cost_current");
        const double base = parse_number(fields[2], line_no, "cost_base");
        g.group_cpi = group_cpi(current, base);
        g.weight = parse_number(fields[3], line_no, "weight");
        groups.push_back(std::move(g));
    }
    if (groups.empty()) throw DataError(path + ": basket is empty");
    return groups;
}

} // namespace anfis
