#pragma once

// Static two-panel SVG rendering of a trajectory: basis populations on
// top, the three quantifiers below. Pure text generation with fixed
// coordinate formatting, so a given trajectory always yields identical
// bytes. Series are the only <polyline> elements (7 in total); axes and
// ticks are <line>s.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cohlab/cli/config.hpp"
#include "cohlab/pulsesim.hpp"

namespace cohlab::cli {

namespace detail {

struct SvgPanel {
    double x0, y0, w, h;      // plot box in pixels
    double area_min, area_max;
    double val_max;

    double sx(double area) const {
        return x0 + (area - area_min) / (area_max - area_min) * w;
    }
    double sy(double v) const { return y0 + h - v / val_max * h; }
};

inline std::string format_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string format_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

inline void svg_polyline(std::ostream& out, const SvgPanel& panel,
                         const Trajectory& traj,
                         double TrajectorySample::*field, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const TrajectorySample& s = traj.samples[i];
        const double v = s.*field;
        if (!std::isfinite(s.area) || !std::isfinite(v)) {
            throw ParseError("plot data contains a non-finite value at row " +
                             std::to_string(i + 1));
        }
        if (i) {
            out << ' ';
        }
        out << format_px(panel.sx(s.area)) << ',' << format_px(panel.sy(v));
    }
    out << "\"/>\n";
}

inline void svg_axes(std::ostream& out, const SvgPanel& p, const char* title) {
    out << "  <rect x=\"" << format_px(p.x0) << "\" y=\"" << format_px(p.y0)
        << "\" width=\"" << format_px(p.w) << "\" height=\"" << format_px(p.h)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << format_px(p.x0) << "\" y=\"" << format_px(p.y0 - 24.0)
        << "\" font-family=\"sans-serif\" font-size=\"15\" fill=\"#111111\">" << title
        << "</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double area = p.area_min + (p.area_max - p.area_min) * k / 4.0;
        const double x = p.sx(area);
        out << "  <line x1=\"" << format_px(x) << "\" y1=\"" << format_px(p.y0 + p.h)
            << "\" x2=\"" << format_px(x) << "\" y2=\"" << format_px(p.y0 + p.h + 5.0)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << format_px(x - 10.0) << "\" y=\""
            << format_px(p.y0 + p.h + 18.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
            << format_tick(area) << "</text>\n";
        const double v = p.val_max * k / 4.0;
        const double y = p.sy(v);
        out << "  <line x1=\"" << format_px(p.x0 - 5.0) << "\" y1=\"" << format_px(y)
            << "\" x2=\"" << format_px(p.x0) << "\" y2=\"" << format_px(y)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << format_px(p.x0 - 42.0) << "\" y=\""
            << format_px(y + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
            << format_tick(v) << "</text>\n";
    }
    out << "  <text x=\"" << format_px(p.x0 + p.w / 2.0 - 30.0) << "\" y=\""
        << format_px(p.y0 + p.h + 34.0)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#111111\">"
        << "pulse area</text>\n";
}

inline void svg_label(std::ostream& out, double x, double y, const char* color,
                      const char* text) {
    out << "  <text x=\"" << format_px(x) << "\" y=\"" << format_px(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << text << "</text>\n";
}

}  // namespace detail

inline void write_plot_svg(std::ostream& out, const Trajectory& traj) {
    if (traj.samples.empty()) {
        throw ParseError("plot data contains no rows");
    }
    double area_min = traj.samples.front().area;
    double area_max = traj.samples.front().area;
    for (const TrajectorySample& s : traj.samples) {
        area_min = std::min(area_min, s.area);
        area_max = std::max(area_max, s.area);
    }
    if (!(area_max > area_min)) {
        area_max = area_min + 1.0;
    }
    const detail::SvgPanel top{70.0, 50.0, 780.0, 230.0, area_min, area_max, 1.05};
    const detail::SvgPanel bottom{70.0, 380.0, 780.0, 230.0, area_min, area_max, 1.05};

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"660\" "
           "viewBox=\"0 0 900 660\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"900\" height=\"660\" fill=\"#ffffff\"/>\n";

    detail::svg_axes(out, top, "basis-state populations");
    detail::svg_label(out, 560.0, 26.0, "#1f77b4", "p00");
    detail::svg_label(out, 610.0, 26.0, "#ff7f0e", "p01");
    detail::svg_label(out, 660.0, 26.0, "#2ca02c", "p10");
    detail::svg_label(out, 710.0, 26.0, "#d62728", "p11");
    detail::svg_polyline(out, top, traj, &TrajectorySample::pop00, "#1f77b4");
    detail::svg_polyline(out, top, traj, &TrajectorySample::pop01, "#ff7f0e");
    detail::svg_polyline(out, top, traj, &TrajectorySample::pop10, "#2ca02c");
    detail::svg_polyline(out, top, traj, &TrajectorySample::pop11, "#d62728");

    detail::svg_axes(out, bottom, "coherence quantifiers");
    detail::svg_label(out, 560.0, 356.0, "#9467bd", "C_pdd");
    detail::svg_label(out, 630.0, 356.0, "#8c564b", "C_l1");
    detail::svg_label(out, 690.0, 356.0, "#e377c2", "C_re");
    detail::svg_polyline(out, bottom, traj, &TrajectorySample::c_pdd, "#9467bd");
    detail::svg_polyline(out, bottom, traj, &TrajectorySample::c_l1, "#8c564b");
    detail::svg_polyline(out, bottom, traj, &TrajectorySample::c_re, "#e377c2");

    out << "</svg>\n";
}

}  // namespace cohlab::cli
