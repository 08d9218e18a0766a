#include "liftform/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace liftform {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 168.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 6;

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#17becf", "#e377c2", "#7f7f7f", "#bcbd22",
};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string tick_label(double v) {
    // %g keeps tick labels short; -0 would render inconsistently.
    if (v == 0.0) v = 0.0;
    return fmt(v, "%.4g");
}

}  // namespace

std::string render_line_chart_string(const PlotSpec& spec) {
    bool any_points = false;
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    for (const PlotTrace& tr : spec.traces) {
        if (tr.x.size() != tr.y.size())
            throw AnalysisError("render_line_chart: trace \"" + tr.label +
                                "\" has mismatched x/y lengths");
        for (std::size_t i = 0; i < tr.x.size(); ++i) {
            if (!any_points) {
                x_min = x_max = tr.x[i];
                y_min = y_max = tr.y[i];
                any_points = true;
            } else {
                x_min = std::min(x_min, tr.x[i]);
                x_max = std::max(x_max, tr.x[i]);
                y_min = std::min(y_min, tr.y[i]);
                y_max = std::max(y_max, tr.y[i]);
            }
        }
    }
    if (!any_points) throw EmptySeriesError("render_line_chart: no data points");

    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    } else {
        const double pad = 0.05 * (y_max - y_min);
        y_min -= pad;
        y_max += pad;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" "
           "viewBox=\"0 0 960 540\">\n";
    svg += "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(kMarginLeft + plot_w / 2.0) +
           "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
           xml_escape(spec.title) + "</text>\n";

    // Gridlines and tick labels.
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / kTicks;
        const double fy = y_min + (y_max - y_min) * i / kTicks;
        const std::string gx = fmt(sx(fx));
        const std::string gy = fmt(sy(fy));
        svg += "<line x1=\"" + gx + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" + gx + "\" y2=\"" +
               fmt(kMarginTop + plot_h) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + gy + "\" x2=\"" +
               fmt(kMarginLeft + plot_w) + "\" y2=\"" + gy +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + gx + "\" y=\"" + fmt(kMarginTop + plot_h + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_label(fx) + "</text>\n";
        svg += "<text x=\"" + fmt(kMarginLeft - 8.0) + "\" y=\"" + fmt(sy(fy) + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_label(fy) + "</text>\n";
    }

    // Axes.
    svg += "<rect x=\"" + fmt(kMarginLeft) + "\" y=\"" + fmt(kMarginTop) + "\" width=\"" +
           fmt(plot_w) + "\" height=\"" + fmt(plot_h) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(kMarginLeft + plot_w / 2.0) + "\" y=\"" + fmt(kHeight - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           xml_escape(spec.x_label) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt(kMarginTop + plot_h / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 20 " +
           fmt(kMarginTop + plot_h / 2.0) + ")\">" + xml_escape(spec.y_label) + "</text>\n";

    // Traces.
    for (std::size_t k = 0; k < spec.traces.size(); ++k) {
        const PlotTrace& tr = spec.traces[k];
        if (tr.x.empty()) continue;
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < tr.x.size(); ++i) {
            if (i) svg += ' ';
            svg += fmt(sx(tr.x[i])) + "," + fmt(sy(tr.y[i]));
        }
        svg += "\"/>\n";
    }

    // Legend.
    const double legend_x = kMarginLeft + plot_w + 16.0;
    for (std::size_t k = 0; k < spec.traces.size(); ++k) {
        const double ly = kMarginTop + 12.0 + 20.0 * static_cast<double>(k);
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "<line x1=\"" + fmt(legend_x) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
               fmt(legend_x + 22.0) + "\" y2=\"" + fmt(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(legend_x + 28.0) + "\" y=\"" + fmt(ly + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(spec.traces[k].label) +
               "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

void render_line_chart(const PlotSpec& spec, const std::filesystem::path& path) {
    const std::string svg = render_line_chart_string(spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << svg;
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace liftform
