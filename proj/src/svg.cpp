#include "vectorsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "vectorsim/io.hpp"

namespace vectorsim {

namespace {

constexpr int kWidth = 860;
constexpr int kPanelHeight = 300;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 40;

const char* kColors[] = {"#1f6fb4", "#222222", "#c23b22", "#3a923a",
                         "#8a5fa8", "#b8860b"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    if (std::abs(v) >= 1e5 || (v != 0.0 && std::abs(v) < 1e-3))
        std::snprintf(buf, sizeof(buf), "%.2e", v);
    else
        std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void widen() {
        if (lo > hi) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi == lo) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            const double pad = 0.05 * (hi - lo);
            lo -= pad;
            hi += pad;
        }
    }
};

}  // namespace

void emit_svg(const std::vector<Panel>& panels, const std::string& path) {
    if (panels.empty()) throw std::invalid_argument("emit_svg: no panels");
    const int total_h = static_cast<int>(panels.size()) * kPanelHeight;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(kWidth) + "\" height=\"" + std::to_string(total_h) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const Panel& panel = panels[pi];
        const double top = static_cast<double>(pi) * kPanelHeight + kMarginTop;
        const double bottom = static_cast<double>(pi + 1) * kPanelHeight - kMarginBottom;
        const double left = kMarginLeft, right = kWidth - kMarginRight;

        Range xr, yr;
        for (const auto& s : panel.series) {
            for (double v : s.x) xr.add(v);
            for (double v : s.y) yr.add(v);
        }
        xr.widen();
        yr.widen();
        const auto X = [&](double v) {
            return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left);
        };
        const auto Y = [&](double v) {
            return bottom - (v - yr.lo) / (yr.hi - yr.lo) * (bottom - top);
        };

        out += "<text x=\"" + fmt((left + right) / 2) + "\" y=\"" +
               fmt(top - 18) + "\" text-anchor=\"middle\" font-size=\"14\">" +
               panel.title + "</text>\n";
        // axes
        out += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" +
               fmt(right) + "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";
        out += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(top) + "\" x2=\"" +
               fmt(left) + "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";
        for (int k = 0; k <= 5; ++k) {
            const double fx = xr.lo + (xr.hi - xr.lo) * k / 5.0;
            const double fy = yr.lo + (yr.hi - yr.lo) * k / 5.0;
            out += "<line x1=\"" + fmt(X(fx)) + "\" y1=\"" + fmt(bottom) +
                   "\" x2=\"" + fmt(X(fx)) + "\" y2=\"" + fmt(bottom + 4) +
                   "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + fmt(X(fx)) + "\" y=\"" + fmt(bottom + 16) +
                   "\" text-anchor=\"middle\">" + fmt_tick(fx) + "</text>\n";
            out += "<line x1=\"" + fmt(left - 4) + "\" y1=\"" + fmt(Y(fy)) +
                   "\" x2=\"" + fmt(left) + "\" y2=\"" + fmt(Y(fy)) +
                   "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + fmt(left - 8) + "\" y=\"" + fmt(Y(fy) + 4) +
                   "\" text-anchor=\"end\">" + fmt_tick(fy) + "</text>\n";
        }
        out += "<text x=\"" + fmt((left + right) / 2) + "\" y=\"" +
               fmt(bottom + 32) + "\" text-anchor=\"middle\">t [day]</text>\n";
        out += "<text x=\"16\" y=\"" + fmt((top + bottom) / 2) +
               "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
               fmt((top + bottom) / 2) + ")\">" + panel.y_label + "</text>\n";

        for (std::size_t si = 0; si < panel.series.size(); ++si) {
            const Series& s = panel.series[si];
            if (s.x.size() != s.y.size())
                throw std::invalid_argument("emit_svg: series size mismatch");
            std::string pts;
            for (std::size_t k = 0; k < s.x.size(); ++k) {
                pts += fmt(X(s.x[k]));
                pts += ',';
                pts += fmt(Y(s.y[k]));
                pts += ' ';
            }
            const char* color = kColors[si % 6];
            out += "<polyline fill=\"none\" stroke=\"";
            out += color;
            out += "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
            out += "<text x=\"" + fmt(right - 150) + "\" y=\"" +
                   fmt(top + 16 + 16 * static_cast<double>(si)) + "\" fill=\"";
            out += color;
            out += "\">" + s.name + "</text>\n";
        }
    }
    out += "</svg>\n";
    write_file(path, out);
}

}  // namespace vectorsim
