// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace supersinglet {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 150.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;
constexpr double kProbabilityScale = 10.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Series {
    const char* label;
    const char* color;
    std::vector<std::pair<double, double>> points;
};

}  // namespace

std::string render_svg(const ScenarioResult& result) {
    if (result.records.empty()) throw InvalidArgument("cannot plot a result with no records");

    Series fid{"fidelity", "#1f77b4", {}};
    Series prob{"success probability x10", "#d62728", {}};
    double x_max = 1.0;
    double y_max = 1.0;
    for (const auto& r : result.records) {
        fid.points.emplace_back(r.iteration, r.fidelity);
        prob.points.emplace_back(r.iteration, kProbabilityScale * r.success_probability);
        x_max = std::max(x_max, static_cast<double>(r.iteration));
        y_max = std::max({y_max, r.fidelity, kProbabilityScale * r.success_probability});
    }
    y_max *= 1.05;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + pw * x / x_max; };
    auto py = [&](double y) { return kTop + ph * (1.0 - y / y_max); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    s += "<title>" + result.name + "</title>\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(kLeft + pw) +
         "\" y2=\"" + fmt(kTop + ph) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kTop + ph) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double y = y_max * i / 4.0;
        s += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py(y) + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">" + fmt(y) + "</text>\n";
    }
    const int x_ticks = static_cast<int>(x_max);
    const int step = std::max(1, x_ticks / 10);
    for (int i = 0; i <= x_ticks; i += step) {
        s += "<text x=\"" + fmt(px(i)) + "\" y=\"" + fmt(kTop + ph + 16) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
    }
    s += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 10) +
         "\" font-size=\"13\" text-anchor=\"middle\">iteration</text>\n";
    s += "<text x=\"15\" y=\"" + fmt(kTop + ph / 2) + "\" font-size=\"13\" text-anchor=\"middle\"" +
         " transform=\"rotate(-90 15 " + fmt(kTop + ph / 2) + ")\">value</text>\n";

    double legend_y = kTop + 10;
    for (const Series* series : {&fid, &prob}) {
        if (series->points.size() > 1) {
            s += "<polyline fill=\"none\" stroke=\"";
            s += series->color;
            s += "\" stroke-width=\"2\" points=\"";
            for (const auto& [x, y] : series->points) s += fmt(px(x)) + "," + fmt(py(y)) + " ";
            s.back() = '"';
            s += "/>\n";
        }
        for (const auto& [x, y] : series->points) {
            s += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"3\" fill=\"";
            s += series->color;
            s += "\"/>\n";
        }
        const double lx = kLeft + pw + 10;
        s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(legend_y) + "\" x2=\"" + fmt(lx + 20) +
             "\" y2=\"" + fmt(legend_y) + "\" stroke=\"" + series->color +
             "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + fmt(lx + 25) + "\" y=\"" + fmt(legend_y + 4) + "\" font-size=\"11\">" +
             series->label + "</text>\n";
        legend_y += 18;
    }
    s += "</svg>\n";
    return s;
}

void emit_plot(const ScenarioResult& result, const std::filesystem::path& path) {
    const std::string svg = render_svg(result);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace supersinglet
