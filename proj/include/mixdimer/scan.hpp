#ifndef MIXDIMER_SCAN_HPP
#define MIXDIMER_SCAN_HPP

// Field-temperature sweeps behind the density plots, and marching-squares
// isolines on the resulting grids.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixdimer/caloric.hpp"
#include "mixdimer/grid.hpp"
#include "mixdimer/model.hpp"
#include "mixdimer/thermo.hpp"

namespace mixdimer {

inline constexpr std::size_t kDefaultMapResolution = 400;
inline constexpr std::size_t kDefaultCurveResolution = 200;

/// S/k_B over (field, T). x = swept field, y = temperature.
inline Grid2D entropy_map(const ModelParams& p, FieldAxis axis, double fixed_field, const AxisRange& field_range,
                          const AxisRange& t_range, std::size_t threads = 0) {
    validate(p);
    if (!(t_range.lo > 0.0)) throw NonPositiveTemperature(t_range.lo);
    Grid2D g;
    g.x = {std::string(axis_name(axis)) + "_over_J", field_range.values()};
    g.y = {"t_over_J", t_range.values()};
    g.value_name = "s_over_kB";
    g.values.assign(g.nx() * g.ny(), 0.0);
    for_each_row(
        g.ny(),
        [&](std::size_t iy) {
            const double t = g.y.values[iy];
            for (std::size_t ix = 0; ix < g.nx(); ++ix)
                g.at(ix, iy) = entropy(p, fields_along(axis, g.x.values[ix], fixed_field), t);
        },
        threads);
    return g;
}

inline Grid2D entropy_map(const ModelParams& p, double e_fixed, const AxisRange& b_range, const AxisRange& t_range,
                          std::size_t threads = 0) {
    return entropy_map(p, FieldAxis::Magnetic, e_fixed, b_range, t_range, threads);
}

inline Grid2D entropy_map_electric(const ModelParams& p, double b_fixed, const AxisRange& e_range,
                                   const AxisRange& t_range, std::size_t threads = 0) {
    return entropy_map(p, FieldAxis::Electric, b_fixed, e_range, t_range, threads);
}

/// -dS/k_B over (field span, T).
inline Grid2D delta_s_map(const ModelParams& p, FieldAxis mode, double fixed_field, const AxisRange& span_range,
                          const AxisRange& t_range, std::size_t threads = 0) {
    validate(p);
    if (!(span_range.lo >= 0.0)) throw InvalidParameter("field spans must be >= 0");
    if (!(t_range.lo > 0.0)) throw NonPositiveTemperature(t_range.lo);
    Grid2D g;
    g.x = {std::string("d") + axis_name(mode) + "_over_J", span_range.values()};
    g.y = {"t_over_J", t_range.values()};
    g.value_name = "minus_ds_over_kB";
    g.values.assign(g.nx() * g.ny(), 0.0);
    for_each_row(
        g.ny(),
        [&](std::size_t iy) {
            const double t = g.y.values[iy];
            const double s0 = entropy(p, fields_along(mode, 0.0, fixed_field), t);
            for (std::size_t ix = 0; ix < g.nx(); ++ix)
                g.at(ix, iy) = -(entropy(p, fields_along(mode, g.x.values[ix], fixed_field), t) - s0);
        },
        threads);
    return g;
}

struct Point {
    double x;
    double y;
    friend bool operator==(const Point&, const Point&) = default;
};

struct Polyline {
    double level = 0.0;
    std::vector<Point> points;

    bool closed() const { return points.size() > 2 && points.front() == points.back(); }
};

/// Bilinear interpolation of the grid at (x, y) inside the axis bounds.
inline double bilinear(const Grid2D& g, double x, double y) {
    const auto locate = [](const std::vector<double>& axis, double v) {
        std::size_t i = 0;
        while (i + 2 < axis.size() && v > axis[i + 1]) ++i;
        const double t = (v - axis[i]) / (axis[i + 1] - axis[i]);
        return std::pair{i, t};
    };
    const auto [ix, tx] = locate(g.x.values, x);
    const auto [iy, ty] = locate(g.y.values, y);
    return (1 - tx) * (1 - ty) * g.at(ix, iy) + tx * (1 - ty) * g.at(ix + 1, iy) + (1 - tx) * ty * g.at(ix, iy + 1) +
           tx * ty * g.at(ix + 1, iy + 1);
}

namespace detail {

/// Marching squares for one level. Edge ids: horizontal edge (ix, iy) ->
/// iy * (nx - 1) + ix; vertical edge (ix, iy) -> ny * (nx - 1) + iy * nx + ix.
class IsolineTracer {
public:
    IsolineTracer(const Grid2D& g, double level) : g_(g), level_(level) {}

    std::vector<Polyline> trace() {
        collect_segments();
        return link();
    }

private:
    using EdgeId = std::uint64_t;

    bool above(std::size_t ix, std::size_t iy) const { return g_.at(ix, iy) >= level_; }

    EdgeId horizontal(std::size_t ix, std::size_t iy) const { return iy * (g_.nx() - 1) + ix; }
    EdgeId vertical(std::size_t ix, std::size_t iy) const { return g_.ny() * (g_.nx() - 1) + iy * g_.nx() + ix; }

    Point edge_point(EdgeId id) const {
        const std::size_t nx = g_.nx();
        const std::size_t nh = g_.ny() * (nx - 1);
        std::size_t ax, ay, bx, by;
        if (id < nh) {
            ay = by = id / (nx - 1);
            ax = id % (nx - 1);
            bx = ax + 1;
        } else {
            const std::size_t k = id - nh;
            ax = bx = k % nx;
            ay = k / nx;
            by = ay + 1;
        }
        const double va = g_.at(ax, ay);
        const double vb = g_.at(bx, by);
        const double t = va == vb ? 0.5 : (level_ - va) / (vb - va);
        return {g_.x.values[ax] + t * (g_.x.values[bx] - g_.x.values[ax]),
                g_.y.values[ay] + t * (g_.y.values[by] - g_.y.values[ay])};
    }

    void add_segment(EdgeId a, EdgeId b) {
        const std::size_t id = segments_.size();
        segments_.push_back({a, b});
        incident_[a].push_back(id);
        incident_[b].push_back(id);
    }

    void collect_segments() {
        for (std::size_t iy = 0; iy + 1 < g_.ny(); ++iy) {
            for (std::size_t ix = 0; ix + 1 < g_.nx(); ++ix) {
                const bool c00 = above(ix, iy), c10 = above(ix + 1, iy);
                const bool c11 = above(ix + 1, iy + 1), c01 = above(ix, iy + 1);
                // edges in order: bottom, right, top, left
                const std::array<EdgeId, 4> edge{horizontal(ix, iy), vertical(ix + 1, iy), horizontal(ix, iy + 1),
                                                 vertical(ix, iy)};
                const std::array<bool, 4> cut{c00 != c10, c10 != c11, c01 != c11, c00 != c01};
                std::vector<std::size_t> crossed;
                for (std::size_t k = 0; k < 4; ++k)
                    if (cut[k]) crossed.push_back(k);
                if (crossed.size() == 2) {
                    add_segment(edge[crossed[0]], edge[crossed[1]]);
                } else if (crossed.size() == 4) {
                    const double center =
                        0.25 * (g_.at(ix, iy) + g_.at(ix + 1, iy) + g_.at(ix + 1, iy + 1) + g_.at(ix, iy + 1));
                    if (c10 != (center >= level_)) {
                        // corner (ix+1, iy) is isolated
                        add_segment(edge[0], edge[1]);
                        add_segment(edge[2], edge[3]);
                    } else {
                        add_segment(edge[3], edge[0]);
                        add_segment(edge[1], edge[2]);
                    }
                }
            }
        }
    }

    std::vector<Polyline> link() {
        std::vector<Polyline> lines;
        std::vector<bool> used(segments_.size(), false);

        const auto walk = [&](std::size_t start, EdgeId from) {
            Polyline line{level_, {edge_point(from)}};
            std::size_t seg = start;
            EdgeId at = from;
            while (true) {
                used[seg] = true;
                const EdgeId next = segments_[seg].first == at ? segments_[seg].second : segments_[seg].first;
                line.points.push_back(edge_point(next));
                at = next;
                std::optional<std::size_t> follow;
                for (std::size_t cand : incident_[at])
                    if (!used[cand]) follow = cand;
                if (!follow) break;
                seg = *follow;
            }
            return line;
        };

        // open lines start at edges touched by a single segment
        for (const auto& [edge, segs] : incident_) {
            if (segs.size() == 1 && !used[segs[0]]) lines.push_back(walk(segs[0], edge));
        }
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            if (!used[s]) lines.push_back(walk(s, segments_[s].first));
        }
        return lines;
    }

    const Grid2D& g_;
    double level_;
    std::vector<std::pair<EdgeId, EdgeId>> segments_;
    std::map<EdgeId, std::vector<std::size_t>> incident_;
};

} // namespace detail

inline std::vector<Polyline> extract_isolines(const Grid2D& grid, std::span<const double> levels) {
    grid.check();
    std::vector<Polyline> out;
    if (grid.nx() < 2 || grid.ny() < 2) return out;
    for (double level : levels) {
        if (!std::isfinite(level)) throw InvalidParameter("isoline levels must be finite");
        auto lines = detail::IsolineTracer(grid, level).trace();
        for (auto& l : lines) out.push_back(std::move(l));
    }
    return out;
}

} // namespace mixdimer

#endif
