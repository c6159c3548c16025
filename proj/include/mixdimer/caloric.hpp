#ifndef MIXDIMER_CALORIC_HPP
#define MIXDIMER_CALORIC_HPP

// Magnetocaloric and electrocaloric figures of merit: isentropes,
// isothermal entropy changes and the refrigerant capacity.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mixdimer/errors.hpp"
#include "mixdimer/model.hpp"
#include "mixdimer/thermo.hpp"

namespace mixdimer {

inline constexpr double kTemperatureCeiling = 1e3; ///< in units of J
inline constexpr double kIsentropeRelativeTolerance = 1e-10;

enum class FieldAxis { Magnetic, Electric };

inline const char* axis_name(FieldAxis a) { return a == FieldAxis::Magnetic ? "b" : "e"; }

/// Fields with the swept component set to `value` and the other to `fixed`.
inline Fields fields_along(FieldAxis axis, double value, double fixed) {
    return axis == FieldAxis::Magnetic ? Fields{value, fixed} : Fields{fixed, value};
}

/// Temperature at which S(t) = target at fixed fields. S is non-decreasing
/// in t, so bisection on log t over [t_floor, t_ceiling] is safe. Returns
/// nullopt if the target lies outside [S(t_floor), S(t_ceiling)].
inline std::optional<double> isentropic_temperature(const ModelParams& p, const Fields& f, double target) {
    double lo = kTemperatureFloor * p.j;
    double hi = kTemperatureCeiling * p.j;
    const double s_lo = entropy(p, f, lo);
    if (s_lo >= target) {
        return std::abs(s_lo - target) <= 1e-12 ? std::optional<double>(lo) : std::nullopt;
    }
    if (entropy(p, f, hi) < target) return std::nullopt;
    while (hi - lo > kIsentropeRelativeTolerance * lo) {
        const double mid = std::sqrt(lo * hi);
        if (entropy(p, f, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    // final linear step in S between the bracketing temperatures
    const double s0 = entropy(p, f, lo);
    const double s1 = entropy(p, f, hi);
    if (s1 > s0) return lo + (target - s0) / (s1 - s0) * (hi - lo);
    return 0.5 * (lo + hi);
}

struct Isentrope {
    double target_s = 0.0;
    FieldAxis axis = FieldAxis::Magnetic;
    double fixed_field = 0.0;
    std::vector<std::pair<double, double>> samples; ///< (field, temperature)
    std::vector<double> gaps;                       ///< fields with no solution in range
};

inline Isentrope isentrope(const ModelParams& p, FieldAxis axis, double fixed_field, double target_s,
                           std::span<const double> grid) {
    if (!(target_s > 0.0) || !(target_s < std::log(6.0)))
        throw TargetOutOfRange("isentrope target must lie in (0, ln 6)");
    Isentrope out{target_s, axis, fixed_field, {}, {}};
    for (double x : grid) {
        const auto t = isentropic_temperature(p, fields_along(axis, x, fixed_field), target_s);
        if (t)
            out.samples.emplace_back(x, *t);
        else
            out.gaps.push_back(x);
    }
    return out;
}

inline Isentrope isentrope_magnetic(const ModelParams& p, double e_fixed, double target_s,
                                    std::span<const double> b_grid) {
    return isentrope(p, FieldAxis::Magnetic, e_fixed, target_s, b_grid);
}

inline Isentrope isentrope_electric(const ModelParams& p, double b_fixed, double target_s,
                                    std::span<const double> e_grid) {
    return isentrope(p, FieldAxis::Electric, b_fixed, target_s, e_grid);
}

/// Isothermal entropy change S(span) - S(0) along one field axis.
inline double delta_s(const ModelParams& p, FieldAxis axis, double fixed_field, double t, double span) {
    if (!(t > 0.0)) throw NonPositiveTemperature(t);
    if (!(span >= 0.0)) throw InvalidParameter("field span must be >= 0");
    return entropy(p, fields_along(axis, span, fixed_field), t) - entropy(p, fields_along(axis, 0.0, fixed_field), t);
}

inline double delta_s_magnetic(const ModelParams& p, double e, double t, double span_b) {
    return delta_s(p, FieldAxis::Magnetic, e, t, span_b);
}

inline double delta_s_electric(const ModelParams& p, double b, double t, double span_e) {
    return delta_s(p, FieldAxis::Electric, b, t, span_e);
}

enum class CaloricEffect { Conventional, Inverse, Null };

inline const char* caloric_name(CaloricEffect c) {
    switch (c) {
    case CaloricEffect::Conventional: return "conventional";
    case CaloricEffect::Inverse: return "inverse";
    case CaloricEffect::Null: return "null";
    }
    return "?";
}

/// -dS > 0 is the conventional effect, -dS < 0 the inverse one.
inline CaloricEffect classify_caloric(double delta_s_value) {
    if (std::abs(delta_s_value) < 1e-12) return CaloricEffect::Null;
    return delta_s_value < 0.0 ? CaloricEffect::Conventional : CaloricEffect::Inverse;
}

struct CaloricCurve {
    FieldAxis mode = FieldAxis::Magnetic;
    double span = 0.0;
    double fixed_field = 0.0;
    std::vector<std::pair<double, double>> samples; ///< (T, -dS)
};

inline CaloricCurve caloric_curve(const ModelParams& p, FieldAxis mode, double fixed_field, double span,
                                  std::span<const double> t_grid) {
    CaloricCurve c{mode, span, fixed_field, {}};
    c.samples.reserve(t_grid.size());
    for (double t : t_grid) c.samples.emplace_back(t, -delta_s(p, mode, fixed_field, t, span));
    return c;
}

struct RcResult {
    double rc_abs = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    CaloricEffect mode = CaloricEffect::Conventional;
    bool clamped_t1 = false;
    bool clamped_t2 = false;
    double peak_t = 0.0;     ///< location of the refined extremum of -dS
    double peak_value = 0.0; ///< refined extremum of -dS
};

namespace detail {

inline double interpolate(const std::vector<std::pair<double, double>>& s, double x) {
    if (x <= s.front().first) return s.front().second;
    if (x >= s.back().first) return s.back().second;
    const auto it = std::lower_bound(s.begin(), s.end(), x, [](const auto& pt, double v) { return pt.first < v; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    if (x1 == x0) return y1;
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

/// Composite Simpson on arbitrary (increasing) nodes; an odd trailing
/// interval gets the three-point end correction.
inline double simpson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * (x[1] - x[0]) * (y[0] + y[1]);
    const std::size_t intervals = n - 1;
    double sum = 0.0;
    std::size_t i = 0;
    for (; i + 2 <= intervals; i += 2) {
        const double h0 = x[i + 1] - x[i];
        const double h1 = x[i + 2] - x[i + 1];
        sum += (h0 + h1) / 6.0 *
               ((2.0 - h1 / h0) * y[i] + (h0 + h1) * (h0 + h1) / (h0 * h1) * y[i + 1] + (2.0 - h0 / h1) * y[i + 2]);
    }
    if (i < intervals) {
        const double h1 = x[n - 1] - x[n - 2];
        const double h0 = x[n - 2] - x[n - 3];
        const double alpha = (2.0 * h1 * h1 + 3.0 * h1 * h0) / (6.0 * (h0 + h1));
        const double beta = (h1 * h1 + 3.0 * h1 * h0) / (6.0 * h0);
        const double eta = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        sum += alpha * y[n - 1] + beta * y[n - 2] - eta * y[n - 3];
    }
    return sum;
}

} // namespace detail

/// Refrigerant capacity |integral of dS dT| between the two temperatures
/// where -dS falls to half of its extremum. The extremum is the maximum of
/// -dS for the conventional effect and the minimum for the inverse one,
/// refined by a parabola through the best sample and its neighbours.
/// fixed_t2 replaces the upper limit.
inline RcResult refrigerant_capacity(const CaloricCurve& curve, CaloricEffect mode,
                                     std::optional<double> fixed_t2 = std::nullopt) {
    const auto& s = curve.samples;
    if (s.size() < 8) throw InvalidParameter("refrigerant capacity needs at least 8 samples");
    if (mode == CaloricEffect::Null) throw InvalidParameter("caloric mode must be conventional or inverse");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i].first > s[i - 1].first)) throw InvalidParameter("curve temperatures must increase");

    const double sign = mode == CaloricEffect::Conventional ? 1.0 : -1.0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (sign * s[i].second > sign * s[best].second) best = i;
    if (!(sign * s[best].second > 1e-12))
        throw NoExtremumOfRequestedSign(std::string("curve has no ") + caloric_name(mode) + " extremum");

    RcResult r;
    r.mode = mode;
    r.peak_t = s[best].first;
    r.peak_value = s[best].second;
    if (best > 0 && best + 1 < s.size()) {
        const double x0 = s[best - 1].first, x1 = s[best].first, x2 = s[best + 1].first;
        const double y0 = s[best - 1].second, y1 = s[best].second, y2 = s[best + 1].second;
        // Lagrange parabola through the three points
        const double d01 = (y1 - y0) / (x1 - x0);
        const double d12 = (y2 - y1) / (x2 - x1);
        const double curvature = (d12 - d01) / (x2 - x0);
        if (sign * curvature < 0.0) {
            const double xv = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
            if (xv > x0 && xv < x2) {
                r.peak_t = xv;
                r.peak_value = y1 + d01 * (xv - x1) + curvature * (xv - x0) * (xv - x1);
                if (sign * r.peak_value < sign * y1) r.peak_value = y1;
            }
        }
    }

    const double half = 0.5 * r.peak_value;
    const auto below_half = [&](double y) { return sign * y < sign * half; };
    const auto crossing = [&](std::size_t inside, std::size_t outside) {
        const auto& [xa, ya] = s[inside];
        const auto& [xb, yb] = s[outside];
        return xa + (half - ya) / (yb - ya) * (xb - xa);
    };

    r.t1 = s.front().first;
    r.clamped_t1 = true;
    for (std::size_t i = best; i-- > 0;) {
        if (below_half(s[i].second)) {
            r.t1 = crossing(i + 1, i);
            r.clamped_t1 = false;
            break;
        }
    }
    r.t2 = s.back().first;
    r.clamped_t2 = true;
    for (std::size_t i = best + 1; i < s.size(); ++i) {
        if (below_half(s[i].second)) {
            r.t2 = crossing(i - 1, i);
            r.clamped_t2 = false;
            break;
        }
    }
    if (fixed_t2) {
        if (*fixed_t2 > s.back().first) throw InvalidParameter("fixed T2 lies beyond the sampled range");
        r.t2 = *fixed_t2;
        r.clamped_t2 = false;
    }
    if (!(r.t2 > r.t1)) throw InvalidParameter("refrigerant capacity needs T1 < T2");

    std::vector<double> xs{r.t1};
    std::vector<double> ys{detail::interpolate(s, r.t1)};
    const double eps = 1e-12 * std::max(1.0, std::abs(r.t2));
    for (const auto& [x, y] : s) {
        if (x > r.t1 + eps && x < r.t2 - eps) {
            xs.push_back(x);
            ys.push_back(y);
        }
    }
    xs.push_back(r.t2);
    ys.push_back(detail::interpolate(s, r.t2));
    r.rc_abs = std::abs(detail::simpson(xs, ys));
    return r;
}

} // namespace mixdimer

#endif
