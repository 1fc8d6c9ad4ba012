#ifndef VECTORSIM_SVG_HPP
#define VECTORSIM_SVG_HPP

#include <string>
#include <vector>

namespace vectorsim {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct Panel {
    std::string title;
    std::string y_label;
    std::vector<Series> series;
};

// Stacked line-plot panels sharing the x axis (time in days).
void emit_svg(const std::vector<Panel>& panels, const std::string& path);

}  // namespace vectorsim

#endif
