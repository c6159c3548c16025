#ifndef MIXDIMER_SVG_HPP
#define MIXDIMER_SVG_HPP

// Static SVG figures: heatmaps with isolines, categorical phase maps and
// line plots. All coordinates are printed with fixed precision so the
// output is byte-identical for identical input.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixdimer/grid.hpp"
#include "mixdimer/phases.hpp"
#include "mixdimer/scan.hpp"

namespace mixdimer::svg {

struct Frame {
    double width = 640;
    double height = 480;
    double left = 70;
    double right = 90;
    double top = 30;
    double bottom = 50;

    double plot_w() const { return width - left - right; }
    double plot_h() const { return height - top - bottom; }
};

struct Rgb {
    int r, g, b;
};

inline std::string fmt(double v, int digits = 2) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline std::string hex(const Rgb& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

/// Piecewise-linear map through five viridis stops, t in [0, 1].
inline Rgb colormap(double t) {
    static constexpr std::array<std::array<double, 3>, 5> stops{{
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
    const double pos = t * (stops.size() - 1);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(pos), stops.size() - 2);
    const double f = pos - static_cast<double>(i);
    const auto mix = [&](std::size_t k) {
        return static_cast<int>(std::lround(stops[i][k] + f * (stops[i + 1][k] - stops[i][k])));
    };
    return {mix(0), mix(1), mix(2)};
}

class Canvas {
public:
    Canvas(Frame frame, double x0, double x1, double y0, double y1)
        : f_(frame), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
        out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(f_.width, 0) +
                "\" height=\"" + fmt(f_.height, 0) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        out_ += "<rect x=\"0\" y=\"0\" width=\"" + fmt(f_.width, 0) + "\" height=\"" + fmt(f_.height, 0) +
                "\" fill=\"white\"/>\n";
    }

    double px(double x) const { return f_.left + (x - x0_) / (x1_ - x0_) * f_.plot_w(); }
    double py(double y) const { return f_.top + (1.0 - (y - y0_) / (y1_ - y0_)) * f_.plot_h(); }

    void rect(double xa, double ya, double xb, double yb, const std::string& fill) {
        const double l = px(xa), r = px(xb), t = py(yb), b = py(ya);
        out_ += "<rect x=\"" + fmt(l) + "\" y=\"" + fmt(t) + "\" width=\"" + fmt(r - l) + "\" height=\"" +
                fmt(b - t) + "\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
    }

    void swatch(double x, double y, double w, double h, const std::string& fill) {
        out_ += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
                "\" fill=\"" + fill + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }

    void polyline(std::span<const Point> pts, const std::string& stroke, double width = 1.2,
                  const std::string& dash = "") {
        if (pts.size() < 2) return;
        out_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width, 1) + "\"";
        if (!dash.empty()) out_ += " stroke-dasharray=\"" + dash + "\"";
        out_ += " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out_ += ' ';
            out_ += fmt(px(pts[i].x)) + "," + fmt(py(pts[i].y));
        }
        out_ += "\"/>\n";
    }

    void text(double x, double y, const std::string& s, const std::string& anchor = "middle", double rotate = 0) {
        out_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" text-anchor=\"" + anchor + "\"";
        if (rotate != 0) out_ += " transform=\"rotate(" + fmt(rotate, 0) + " " + fmt(x) + " " + fmt(y) + ")\"";
        out_ += ">" + s + "</text>\n";
    }

    void axes(const std::string& xlabel, const std::string& ylabel) {
        const double l = f_.left, r = f_.left + f_.plot_w(), t = f_.top, b = f_.top + f_.plot_h();
        out_ += "<rect x=\"" + fmt(l) + "\" y=\"" + fmt(t) + "\" width=\"" + fmt(r - l) + "\" height=\"" +
                fmt(b - t) + "\" fill=\"none\" stroke=\"black\"/>\n";
        for (int k = 0; k <= 4; ++k) {
            const double xv = x0_ + (x1_ - x0_) * k / 4.0;
            const double yv = y0_ + (y1_ - y0_) * k / 4.0;
            text(px(xv), b + 16, fmt(xv, 3));
            text(l - 6, py(yv) + 4, fmt(yv, 3), "end");
        }
        text(l + 0.5 * (r - l), f_.height - 10, xlabel);
        text(16, t + 0.5 * (b - t), ylabel, "middle", -90);
    }

    void colorbar(double vmin, double vmax) {
        const double x = f_.left + f_.plot_w() + 20;
        const int steps = 64;
        const double h = f_.plot_h() / steps;
        for (int k = 0; k < steps; ++k) {
            const double ytop = f_.top + f_.plot_h() - (k + 1) * h;
            out_ += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(ytop) + "\" width=\"14\" height=\"" + fmt(h + 0.3) +
                    "\" fill=\"" + hex(colormap((k + 0.5) / steps)) + "\" stroke=\"none\"/>\n";
        }
        text(x + 18, f_.top + 4, fmt(vmax, 3), "start");
        text(x + 18, f_.top + f_.plot_h(), fmt(vmin, 3), "start");
    }

    std::string finish() {
        out_ += "</svg>\n";
        return std::move(out_);
    }

private:
    Frame f_;
    double x0_, x1_, y0_, y1_;
    std::string out_;
};

/// Cell edges halfway between samples, clamped to the axis ends.
inline std::vector<double> cell_edges(const std::vector<double>& v) {
    std::vector<double> e(v.size() + 1);
    e.front() = v.front();
    e.back() = v.back();
    for (std::size_t i = 1; i < v.size(); ++i) e[i] = 0.5 * (v[i - 1] + v[i]);
    return e;
}

/// Linear color map over [min, max] of the grid, quantized to 64 levels so
/// horizontal runs of equal color collapse into one rectangle.
inline std::string heatmap(const Grid2D& g, std::span<const Polyline> isolines,
                           std::span<const double> highlight_levels = {}, Frame frame = {}) {
    g.check();
    const auto [mn, mx] = std::minmax_element(g.values.begin(), g.values.end());
    const double vmin = *mn;
    const double vmax = *mx > *mn ? *mx : *mn + 1.0;
    Canvas c(frame, g.x.values.front(), g.x.values.back(), g.y.values.front(), g.y.values.back());
    const auto ex = cell_edges(g.x.values);
    const auto ey = cell_edges(g.y.values);
    constexpr int levels = 64;
    const auto bucket = [&](double v) {
        return std::clamp(static_cast<int>((v - vmin) / (vmax - vmin) * levels), 0, levels - 1);
    };
    for (std::size_t iy = 0; iy < g.ny(); ++iy) {
        std::size_t start = 0;
        while (start < g.nx()) {
            const int q = bucket(g.at(start, iy));
            std::size_t end = start + 1;
            while (end < g.nx() && bucket(g.at(end, iy)) == q) ++end;
            c.rect(ex[start], ey[iy], ex[end], ey[iy + 1], hex(colormap((q + 0.5) / levels)));
            start = end;
        }
    }
    for (const auto& line : isolines) {
        const bool hl = std::any_of(highlight_levels.begin(), highlight_levels.end(),
                                    [&](double l) { return std::abs(l - line.level) < 1e-12; });
        c.polyline(line.points, hl ? "white" : "black", hl ? 2.0 : 0.8);
    }
    c.axes(g.x.name, g.y.name);
    c.colorbar(vmin, vmax);
    return c.finish();
}

inline std::string phase_map(const PhaseDiagram& pd, Frame frame = {}) {
    static const std::array<std::pair<const char*, const char*>, 4> palette{{
        {"F+", "#f4a261"}, {"QF+", "#2a9d8f"}, {"QF-", "#8ab17d"}, {"F-", "#e9c46a"}}};
    const auto color_of = [&](const PhaseLabel& l) -> std::string {
        if (l.degenerate()) return "#555555";
        for (const auto& [name, col] : palette)
            if (l.name() == name) return col;
        return "#cccccc";
    };
    Canvas c(frame, pd.e_axis.front(), pd.e_axis.back(), pd.b_axis.front(), pd.b_axis.back());
    const auto ex = cell_edges(pd.e_axis);
    const auto eb = cell_edges(pd.b_axis);
    for (std::size_t ib = 0; ib < pd.b_axis.size(); ++ib) {
        std::size_t start = 0;
        while (start < pd.e_axis.size()) {
            const std::string col = color_of(pd.at(start, ib));
            std::size_t end = start + 1;
            while (end < pd.e_axis.size() && color_of(pd.at(end, ib)) == col) ++end;
            c.rect(ex[start], eb[ib], ex[end], eb[ib + 1], col);
            start = end;
        }
    }
    for (const auto& curve : pd.boundaries) {
        std::vector<Point> pts;
        for (const auto& [e, b] : curve.samples) pts.push_back({e, b});
        const std::string dash = curve.kind == BoundaryKind::QfpFp   ? ""
                                 : curve.kind == BoundaryKind::QfmFp ? "6,3"
                                                                     : "6,3,1,3";
        c.polyline(pts, "black", 1.5, dash);
    }
    c.axes("e_over_J", "b_over_J");
    double y = frame.top + 10;
    for (const auto& [name, col] : palette) {
        const double x = frame.left + frame.plot_w() + 12;
        c.swatch(x, y, 14, 12, col);
        c.text(x + 20, y + 10, name, "start");
        y += 18;
    }
    return c.finish();
}

struct Series {
    std::string name;
    std::vector<Point> points;
};

inline std::string line_plot(std::span<const Series> series, const std::string& xlabel, const std::string& ylabel,
                             Frame frame = {}) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const auto& s : series)
        for (const auto& p : s.points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
            if (first) {
                x0 = x1 = p.x;
                y0 = y1 = p.y;
                first = false;
            }
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    if (x1 <= x0) x1 = x0 + 1;
    if (y1 <= y0) y1 = y0 + 1;
    Canvas c(frame, x0, x1, y0, y1);
    static constexpr std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::string col = colors[i % colors.size()];
        // split at non-finite points
        std::vector<Point> run;
        for (const auto& p : series[i].points) {
            if (std::isfinite(p.x) && std::isfinite(p.y)) {
                run.push_back(p);
            } else {
                c.polyline(run, col);
                run.clear();
            }
        }
        c.polyline(run, col);
        c.text(frame.left + frame.plot_w() + 10, frame.top + 14 + 16 * static_cast<double>(i), series[i].name, "start");
    }
    c.axes(xlabel, ylabel);
    return c.finish();
}

} // namespace mixdimer::svg

#endif
