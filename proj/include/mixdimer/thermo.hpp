#ifndef MIXDIMER_THERMO_HPP
#define MIXDIMER_THERMO_HPP

// Closed-form thermodynamics of the dimer. The expressions are the
// cosh/sinh forms of Z, -dF/db, -dF/dE and -dF/dT written in terms of the
// two block radicals r1, r2. Every exponential is evaluated with the
// factor exp(-eps_min / t) divided out, so nothing overflows down to
// t_floor. At or below t_floor the ground-state limits are used instead.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "mixdimer/errors.hpp"
#include "mixdimer/model.hpp"

namespace mixdimer {

inline constexpr double kTemperatureFloor = 1e-6;  ///< in units of J
inline constexpr double kDegeneracyTolerance = 1e-9; ///< in units of J

/// Z = scaled * exp(-ground / t).
struct ShiftedPartition {
    double scaled = 0.0;
    double ground = 0.0;
    double t = 1.0;

    double log_value() const { return std::log(scaled) - ground / t; }
    double value() const { return scaled * std::exp(-ground / t); }
};

struct ThermoPoint {
    ShiftedPartition z;
    double f = 0.0;
    double s = 0.0;
    double m_over_ms = 0.0;
    double p = 0.0;
};

/// Energy, normalized moment and polarization of one eigenlevel
/// (Hellmann-Feynman derivatives of the level energy).
struct LevelObservables {
    double energy;
    double m_over_ms;
    double p;
};

inline std::array<LevelObservables, 6> level_observables(const ModelParams& p, const Fields& f) {
    const Spectrum s = analytic_spectrum(p, f);
    const MixingTerms m = mixing_terms(p, f);
    const double gsum = p.g1 + 2.0 * p.g2;
    const double dg = p.g1 - p.g2;
    const double p1 = m.r1 > 0.0 ? 2.0 * f.e / m.r1 : 0.0;
    const double p2 = m.r2 > 0.0 ? 2.0 * f.e / m.r2 : 0.0;
    return {{
        {s.eps[0], 1.0, 0.0},
        {s.eps[1], -1.0, 0.0},
        {s.eps[2], (p.g2 - dg * m.x1()) / gsum, p.mu * p1},
        {s.eps[3], (p.g2 + dg * m.x1()) / gsum, -p.mu * p1},
        {s.eps[4], (-p.g2 + dg * m.x2()) / gsum, p.mu * p2},
        {s.eps[5], (-p.g2 - dg * m.x2()) / gsum, -p.mu * p2},
    }};
}

/// Low-temperature limit: uniform average over levels within
/// kDegeneracyTolerance of the ground level.
inline ThermoPoint ground_state_limit(const ModelParams& p, const Fields& f, double t) {
    const auto levels = level_observables(p, f);
    double ground = levels[0].energy;
    for (const auto& l : levels) ground = std::min(ground, l.energy);

    ThermoPoint out;
    int count = 0;
    for (const auto& l : levels) {
        if (l.energy - ground <= kDegeneracyTolerance * p.j) {
            ++count;
            out.m_over_ms += l.m_over_ms;
            out.p += l.p;
        }
    }
    out.m_over_ms /= count;
    out.p /= count;
    out.s = std::log(static_cast<double>(count));
    out.z = {static_cast<double>(count), ground, t};
    out.f = ground - t * out.s;
    return out;
}

namespace detail {

/// Exponent pieces of the closed forms at fixed beta.
struct ClosedForm {
    MixingTerms m;
    double beta;
    double xf;    ///< -beta (J + 2D) / 2
    double yf;    ///< beta (h1 + 2 h2) / 2
    double xq;    ///< beta (J - 2D) / 4
    double yh;    ///< beta h2 / 2
    double y1;    ///< beta r1 / 4
    double y2;    ///< beta r2 / 4
    double shift; ///< -beta eps_min

    /// exp(x - shift) cosh(y), exp(x - shift) sinh(y)
    double ecosh(double x, double y) const { return 0.5 * (std::exp(x + y - shift) + std::exp(x - y - shift)); }
    double esinh(double x, double y) const { return 0.5 * (std::exp(x + y - shift) - std::exp(x - y - shift)); }

    double scaled_partition() const {
        return 2.0 * (ecosh(xf, yf) + ecosh(xq + yh, y1) + ecosh(xq - yh, y2));
    }
};

inline ClosedForm closed_form(const ModelParams& p, const Fields& f, double t) {
    ClosedForm c{};
    c.m = mixing_terms(p, f);
    c.beta = 1.0 / t;
    c.xf = -0.5 * c.beta * (p.j + 2.0 * p.d);
    c.yf = 0.5 * c.beta * (c.m.h1 + 2.0 * c.m.h2);
    c.xq = 0.25 * c.beta * c.m.u;
    c.yh = 0.5 * c.beta * c.m.h2;
    c.y1 = 0.25 * c.beta * c.m.r1;
    c.y2 = 0.25 * c.beta * c.m.r2;
    c.shift = std::max({c.xf + std::abs(c.yf), c.xq + c.yh + c.y1, c.xq - c.yh + c.y2});
    return c;
}

inline void require_positive(double t) {
    if (!(t > 0.0)) throw NonPositiveTemperature(t);
}

inline double closed_entropy(const ModelParams& p, const ClosedForm& c) {
    const MixingTerms& m = c.m;
    const double zs = c.scaled_partition();
    // sum_i eps_i exp(-beta eps_i - shift)
    const double weighted =
        (p.j + 2.0 * p.d) * c.ecosh(c.xf, c.yf) - (m.h1 + 2.0 * m.h2) * c.esinh(c.xf, c.yf) -
        0.5 * ((m.u + 2.0 * m.h2) * c.ecosh(c.xq + c.yh, c.y1) + m.r1 * c.esinh(c.xq + c.yh, c.y1) +
               (m.u - 2.0 * m.h2) * c.ecosh(c.xq - c.yh, c.y2) + m.r2 * c.esinh(c.xq - c.yh, c.y2));
    const double ground = -c.shift / c.beta;
    return std::max(0.0, std::log(zs) + c.beta * (weighted / zs - ground));
}

/// Raw moment -dF/db (not normalized).
inline double closed_moment(const ModelParams& p, const ClosedForm& c) {
    const MixingTerms& m = c.m;
    const double dg = p.g1 - p.g2;
    const double numerator =
        (p.g1 + 2.0 * p.g2) * c.esinh(c.xf, c.yf) +
        (p.g2 * c.ecosh(c.xq + c.yh, c.y1) - dg * m.x1() * c.esinh(c.xq + c.yh, c.y1)) -
        (p.g2 * c.ecosh(c.xq - c.yh, c.y2) - dg * m.x2() * c.esinh(c.xq - c.yh, c.y2));
    return numerator / c.scaled_partition();
}

inline double closed_polarization(const ModelParams& p, const Fields& f, const ClosedForm& c) {
    if (f.e == 0.0) return 0.0;
    const MixingTerms& m = c.m;
    const double t1 = m.r1 > 0.0 ? c.esinh(c.xq + c.yh, c.y1) / m.r1 : 0.0;
    const double t2 = m.r2 > 0.0 ? c.esinh(c.xq - c.yh, c.y2) / m.r2 : 0.0;
    return p.mu * 4.0 * f.e * (t1 + t2) / c.scaled_partition();
}

} // namespace detail

inline ShiftedPartition partition_function(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    validate(p);
    validate(f);
    const auto c = detail::closed_form(p, f, t);
    return {c.scaled_partition(), -c.shift * t, t};
}

inline double free_energy(const ModelParams& p, const Fields& f, double t) {
    const ShiftedPartition z = partition_function(p, f, t);
    return z.ground - t * std::log(z.scaled);
}

inline double magnetization(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    if (t <= kTemperatureFloor * p.j) return ground_state_limit(p, f, t).m_over_ms;
    validate(p);
    validate(f);
    return detail::closed_moment(p, detail::closed_form(p, f, t)) / saturation_moment(p);
}

/// Unnormalized moment -dF/d(mu_B B), which saturates at g1/2 + g2.
inline double raw_moment(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    validate(p);
    validate(f);
    return detail::closed_moment(p, detail::closed_form(p, f, t));
}

inline double polarization(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    if (t <= kTemperatureFloor * p.j) return ground_state_limit(p, f, t).p;
    validate(p);
    validate(f);
    return detail::closed_polarization(p, f, detail::closed_form(p, f, t));
}

inline double entropy(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    if (t <= kTemperatureFloor * p.j) return ground_state_limit(p, f, t).s;
    validate(p);
    validate(f);
    return detail::closed_entropy(p, detail::closed_form(p, f, t));
}

inline ThermoPoint thermo_point(const ModelParams& p, const Fields& f, double t) {
    detail::require_positive(t);
    if (t <= kTemperatureFloor * p.j) return ground_state_limit(p, f, t);
    validate(p);
    validate(f);
    const auto c = detail::closed_form(p, f, t);
    ThermoPoint out;
    out.z = {c.scaled_partition(), -c.shift * t, t};
    out.f = out.z.ground - t * std::log(out.z.scaled);
    out.s = detail::closed_entropy(p, c);
    out.m_over_ms = detail::closed_moment(p, c) / saturation_moment(p);
    out.p = detail::closed_polarization(p, f, c);
    return out;
}

enum class Branch { Plus, Minus };

/// Zero-temperature m/m_s of |QF+> (Plus) or |QF->  (Minus).
inline double gs_magnetization_qf(const ModelParams& p, const Fields& f, Branch branch) {
    const MixingTerms m = mixing_terms(p, f);
    const double gsum = p.g1 + 2.0 * p.g2;
    const double dg = p.g1 - p.g2;
    return branch == Branch::Plus ? (p.g2 - dg * m.x1()) / gsum : (-p.g2 + dg * m.x2()) / gsum;
}

/// Zero-temperature polarization of |QF+> or |QF->, 2E / r, scaled by mu.
inline double gs_polarization_qf(const ModelParams& p, const Fields& f, Branch branch) {
    const MixingTerms m = mixing_terms(p, f);
    const double r = branch == Branch::Plus ? m.r1 : m.r2;
    return r > 0.0 ? p.mu * 2.0 * f.e / r : 0.0;
}

} // namespace mixdimer

#endif
