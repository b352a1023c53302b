#include "topolevel/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bar {
    double birth;
    double death;  // kEssentialDeath when essential
};

struct Panel {
    int degree;
    std::vector<Bar> bars;
};

// Bars surviving the min_length filter, plus the level range they span.
// An empty range is widened to a unit span so positions stay defined.
std::vector<Panel> collect(const std::vector<PersistenceDiagram>& diagrams,
                           double min_length, double& hi, double& lo) {
    std::vector<Panel> panels;
    hi = -kInf;
    lo = kInf;
    for (const PersistenceDiagram& d : diagrams) {
        Panel panel;
        panel.degree = d.degree;
        for (const DiagramPoint& p : d.pairs) {
            double len = std::isinf(p.death) ? kInf : p.birth - p.death;
            if (len < min_length) continue;
            panel.bars.push_back({p.birth, p.death});
            hi = std::max(hi, p.birth);
            lo = std::min(lo, std::isinf(p.death) ? p.birth : p.death);
        }
        panels.push_back(std::move(panel));
    }
    if (hi < lo) {
        hi = 1.0;
        lo = 0.0;
    } else if (hi == lo) {
        lo = hi - 1.0;
    }
    return panels;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

constexpr int kTextWidth = 48;

std::string render_text(const std::vector<Panel>& panels, double hi,
                        double lo) {
    std::string out;
    auto pos = [&](double v) {
        double frac = (hi - v) / (hi - lo);
        int col = static_cast<int>(std::lround(frac * (kTextWidth - 1)));
        return std::clamp(col, 0, kTextWidth - 1);
    };
    for (const Panel& panel : panels) {
        out += "degree " + std::to_string(panel.degree);
        if (panel.bars.empty()) {
            out += ": no bars\n";
            continue;
        }
        out += ": " + std::to_string(panel.bars.size()) + " bars, level " +
               num(hi) + " at the left edge down to " + num(lo) + "\n";
        for (const Bar& bar : panel.bars) {
            bool essential = std::isinf(bar.death);
            std::string row(kTextWidth, ' ');
            int a = pos(bar.birth);
            int b = essential ? kTextWidth - 1 : pos(bar.death);
            for (int c = a; c <= b; ++c) row[static_cast<std::size_t>(c)] = '=';
            if (essential) row[kTextWidth - 1] = '>';
            out += "  |" + row + "|  " + num(bar.birth) + " -> " +
                   (essential ? std::string("-inf") : num(bar.death)) + "\n";
        }
    }
    return out;
}

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 40.0;
constexpr double kPlotWidth = 520.0;
constexpr double kTitleHeight = 20.0;
constexpr double kRowHeight = 12.0;
constexpr double kAxisHeight = 26.0;
constexpr double kPanelGap = 14.0;

std::string render_svg(const std::vector<Panel>& panels, double hi,
                       double lo) {
    const double width = kMarginLeft + kPlotWidth + kMarginRight;
    double height = kPanelGap;
    for (const Panel& panel : panels) {
        height += kTitleHeight + kAxisHeight + kPanelGap;
        height += kRowHeight *
                  static_cast<double>(std::max<std::size_t>(panel.bars.size(), 1));
    }
    height = std::max(height, 40.0);

    auto x_of = [&](double v) {
        return kMarginLeft + (hi - v) / (hi - lo) * kPlotWidth;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           coord(width) + "\" height=\"" + coord(height) + "\" viewBox=\"0 0 " +
           coord(width) + " " + coord(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    double y = kPanelGap;
    for (const Panel& panel : panels) {
        out += "<text x=\"8\" y=\"" + coord(y + 14) +
               "\" font-family=\"monospace\" font-size=\"13\">degree " +
               std::to_string(panel.degree) + "</text>\n";
        double rows_top = y + kTitleHeight;
        if (panel.bars.empty()) {
            out += "<text x=\"" + coord(kMarginLeft) + "\" y=\"" +
                   coord(rows_top + 9) +
                   "\" font-family=\"monospace\" font-size=\"11\" "
                   "fill=\"#888888\">no bars</text>\n";
        }
        for (std::size_t i = 0; i < panel.bars.size(); ++i) {
            const Bar& bar = panel.bars[i];
            bool essential = std::isinf(bar.death);
            double by = rows_top + kRowHeight * static_cast<double>(i) + 2.0;
            double x0 = x_of(bar.birth);
            double x1 = essential ? kMarginLeft + kPlotWidth : x_of(bar.death);
            double w = std::max(x1 - x0, 0.75);
            out += "<rect x=\"" + coord(x0) + "\" y=\"" + coord(by) +
                   "\" width=\"" + coord(w) +
                   "\" height=\"7\" fill=\"#4477aa\"/>\n";
            if (essential) {
                // open end marker past the right edge of the axis
                out += "<polygon points=\"" + coord(x1) + "," + coord(by - 1) +
                       " " + coord(x1) + "," + coord(by + 8) + " " +
                       coord(x1 + 9) + "," + coord(by + 3.5) +
                       "\" fill=\"#4477aa\"/>\n";
            }
        }
        double rows_h = kRowHeight *
                        static_cast<double>(std::max<std::size_t>(panel.bars.size(), 1));
        double ay = rows_top + rows_h + 8.0;
        out += "<line x1=\"" + coord(kMarginLeft) + "\" y1=\"" + coord(ay) +
               "\" x2=\"" + coord(kMarginLeft + kPlotWidth) + "\" y2=\"" +
               coord(ay) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + coord(kMarginLeft) + "\" y=\"" + coord(ay + 14) +
               "\" font-family=\"monospace\" font-size=\"11\" "
               "text-anchor=\"start\">level " +
               num(hi) + "</text>\n";
        out += "<text x=\"" + coord(kMarginLeft + kPlotWidth) + "\" y=\"" +
               coord(ay + 14) +
               "\" font-family=\"monospace\" font-size=\"11\" "
               "text-anchor=\"end\">level " +
               num(lo) + "</text>\n";
        y = ay + kAxisHeight - 8.0 + kPanelGap;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string render_barcode(const std::vector<PersistenceDiagram>& diagrams,
                           const std::string& format, double min_length) {
    if (format != "text" && format != "svg")
        throw UnsupportedFormatError("barcode format must be text or svg");
    double hi = 0.0, lo = 0.0;
    std::vector<Panel> panels = collect(diagrams, min_length, hi, lo);
    return format == "text" ? render_text(panels, hi, lo)
                            : render_svg(panels, hi, lo);
}

}  // namespace topolevel
