#include "topolevel/diagram_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// whole-field finite double; "-inf" is accepted only where the caller
// allows an essential death
double parse_value(const std::string& field, std::size_t line, bool allow_inf,
                   bool* is_inf) {
    if (is_inf) *is_inf = false;
    if (allow_inf && field == "-inf") {
        if (is_inf) *is_inf = true;
        return kEssentialDeath;
    }
    if (field.empty())
        throw ParseError(line, "empty numeric field");
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

std::string diagrams_to_tsv(const std::vector<PersistenceDiagram>& diagrams) {
    std::string out;
    for (const PersistenceDiagram& d : diagrams) {
        for (const DiagramPoint& p : d.pairs) {
            out += std::to_string(d.degree);
            out += '\t';
            out += num17(p.birth);
            out += '\t';
            out += std::isinf(p.death) ? std::string("-inf") : num17(p.death);
            out += '\n';
        }
    }
    return out;
}

std::vector<PersistenceDiagram> diagrams_from_tsv(const std::string& text) {
    std::map<int, PersistenceDiagram> by_degree;
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

        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos ||
            line.find('\t', t2 + 1) != std::string::npos)
            throw ParseError(line_no, "expected degree<TAB>birth<TAB>death");

        std::string deg_field = line.substr(0, t1);
        const char* begin = deg_field.c_str();
        char* end = nullptr;
        long degree = std::strtol(begin, &end, 10);
        if (deg_field.empty() || end != begin + deg_field.size() || degree < 0)
            throw ParseError(line_no, "malformed degree '" + deg_field + "'");

        double birth =
            parse_value(line.substr(t1 + 1, t2 - t1 - 1), line_no, false,
                        nullptr);
        bool essential = false;
        double death =
            parse_value(line.substr(t2 + 1), line_no, true, &essential);
        if (!essential && death >= birth)
            throw ParseError(line_no, "death must lie below birth");

        PersistenceDiagram& d = by_degree[static_cast<int>(degree)];
        d.degree = static_cast<int>(degree);
        d.pairs.push_back({birth, death});
    }
    std::vector<PersistenceDiagram> out;
    out.reserve(by_degree.size());
    for (auto& [degree, diagram] : by_degree) out.push_back(std::move(diagram));
    return out;
}

PersistenceDiagram diagram_for_degree(
    const std::vector<PersistenceDiagram>& diagrams, int degree) {
    for (const PersistenceDiagram& d : diagrams)
        if (d.degree == degree) return d;
    PersistenceDiagram empty;
    empty.degree = degree;
    return empty;
}

}  // namespace topolevel
