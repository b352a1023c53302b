#include "topolevel/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

void append_num17(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

double parse_finite(const std::string& field, std::size_t line) {
    if (field.empty()) throw ParseError(line, "empty numeric field");
    const char* begin = field.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + field.size())
        throw ParseError(line, "malformed numeric field '" + field + "'");
    if (!std::isfinite(v))
        throw ParseError(line, "non-finite value '" + field + "'");
    return v;
}

}  // namespace

std::string sample_to_csv(const LabeledSample& sample) {
    const int d = sample.dimension();
    std::string out;
    for (int j = 0; j < d; ++j) {
        if (j > 0) out += ',';
        out += 'x';
        out += std::to_string(j + 1);
    }
    if (sample.has_responses()) out += ",y";
    out += '\n';
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double* p = sample.points.point(i);
        for (int j = 0; j < d; ++j) {
            if (j > 0) out += ',';
            append_num17(out, p[j]);
        }
        if (sample.has_responses()) {
            out += ',';
            append_num17(out, (*sample.responses)[i]);
        }
        out += '\n';
    }
    return out;
}

LabeledSample sample_from_csv(const std::string& text) {
    LabeledSample sample;
    bool header_seen = false;
    bool has_y = false;
    int d = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(
            pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields = split_fields(line);
        if (!header_seen) {
            header_seen = true;
            has_y = fields.back() == "y";
            d = static_cast<int>(fields.size()) - (has_y ? 1 : 0);
            if (d < 1) throw ParseError(line_no, "header has no x columns");
            for (int j = 0; j < d; ++j)
                if (fields[static_cast<std::size_t>(j)] !=
                    "x" + std::to_string(j + 1))
                    throw ParseError(line_no,
                                     "header column " + std::to_string(j + 1) +
                                         " must be x" + std::to_string(j + 1));
            sample.points.d = d;
            if (has_y) sample.responses.emplace();
            continue;
        }
        if (static_cast<int>(fields.size()) != d + (has_y ? 1 : 0))
            throw ParseError(line_no, "row has " +
                                          std::to_string(fields.size()) +
                                          " fields, header implies " +
                                          std::to_string(d + (has_y ? 1 : 0)));
        for (int j = 0; j < d; ++j)
            sample.points.coords.push_back(
                parse_finite(fields[static_cast<std::size_t>(j)], line_no));
        if (has_y)
            sample.responses->push_back(
                parse_finite(fields.back(), line_no));
    }
    if (!header_seen) throw ParseError(1, "empty file");
    if (sample.size() == 0) throw ParseError(line_no, "no data rows");
    return sample;
}

}  // namespace topolevel
