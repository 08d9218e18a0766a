#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "liftform/errors.hpp"

namespace liftform {

struct PlotTrace {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotTrace> traces;
};

// Standalone SVG line chart; byte-identical output for identical inputs.
void render_line_chart(const PlotSpec& spec, const std::filesystem::path& path);
std::string render_line_chart_string(const PlotSpec& spec);

}  // namespace liftform
