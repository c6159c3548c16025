#ifndef MIXDIMER_PHASES_HPP
#define MIXDIMER_PHASES_HPP

// Zero-temperature phases. Classification always compares the candidate
// level energies directly; the closed-form boundary expressions are used
// for drawing and cross-checking only.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixdimer/grid.hpp"
#include "mixdimer/model.hpp"
#include "mixdimer/thermo.hpp"

namespace mixdimer {

enum class Phase { FPlus, FMinus, QFPlus, QFMinus };

inline const char* phase_name(Phase ph) {
    switch (ph) {
    case Phase::FPlus: return "F+";
    case Phase::FMinus: return "F-";
    case Phase::QFPlus: return "QF+";
    case Phase::QFMinus: return "QF-";
    }
    return "?";
}

/// Ground-state identity. More than one member means the listed states
/// are degenerate within kDegeneracyTolerance.
struct PhaseLabel {
    std::vector<Phase> phases;

    bool degenerate() const { return phases.size() > 1; }
    bool contains(Phase ph) const { return std::find(phases.begin(), phases.end(), ph) != phases.end(); }
    Phase primary() const { return phases.front(); }

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            if (i) s += '|';
            s += phase_name(phases[i]);
        }
        return s;
    }

    friend bool operator==(const PhaseLabel&, const PhaseLabel&) = default;
};

/// Energy of the candidate ground state of a given type.
inline double phase_energy(const Spectrum& s, Phase ph) {
    switch (ph) {
    case Phase::FPlus: return s.eps[0];
    case Phase::FMinus: return s.eps[1];
    case Phase::QFPlus: return s.eps[2];
    case Phase::QFMinus: return s.eps[4];
    }
    return s.eps[0];
}

inline double phase_energy(const ModelParams& p, const Fields& f, Phase ph) {
    return phase_energy(analytic_spectrum(p, f), ph);
}

struct Classification {
    PhaseLabel label;
    double energy;
};

inline Classification classify_ground_state(const ModelParams& p, const Fields& f) {
    const Spectrum s = analytic_spectrum(p, f);
    constexpr std::array<Phase, 4> candidates{Phase::FPlus, Phase::FMinus, Phase::QFPlus, Phase::QFMinus};
    double ground = phase_energy(s, Phase::FPlus);
    for (Phase ph : candidates) ground = std::min(ground, phase_energy(s, ph));
    Classification c{{}, ground};
    for (Phase ph : candidates)
        if (phase_energy(s, ph) - ground <= kDegeneracyTolerance * p.j) c.label.phases.push_back(ph);
    return c;
}

// Closed-form zero-temperature phase boundaries, mu_B B as a function of E.

/// |QF+> - |F+>
inline double boundary_qfp_fp(const ModelParams& p, double e) {
    const double w = (p.j * p.delta) * (p.j * p.delta) + e * e;
    const double a = (p.j + 2.0 * p.d) / p.g2;
    const double c = 2.0 * p.j / p.g1;
    return 0.25 * ((a + c) + std::sqrt((a - c) * (a - c) + 8.0 * w / (p.g1 * p.g2)));
}

/// |QF-> - |QF+>; absent unless g1 > 2 g2, J > 2D and the radicand is
/// non-negative. For J <= 2D the root belongs to the squared equation only.
inline std::optional<double> boundary_qfm_qfp(const ModelParams& p, double e) {
    if (!(p.g1 > 2.0 * p.g2) || !(p.j > 2.0 * p.d)) return std::nullopt;
    const double w = (p.j * p.delta) * (p.j * p.delta) + e * e;
    const double a = (p.j - 2.0 * p.d) / p.g2;
    const double radicand = a * a - 8.0 * w / (p.g1 * (p.g1 - 2.0 * p.g2));
    if (radicand < 0.0) return std::nullopt;
    return 0.5 * std::sqrt(radicand);
}

/// |QF-> - |F+>
inline double boundary_qfm_fp(const ModelParams& p, double e) {
    const double w = (p.j * p.delta) * (p.j * p.delta) + e * e;
    const double a = (p.j + 2.0 * p.d) / (p.g1 + p.g2);
    const double c = p.j / p.g2;
    return 0.25 * ((a + c) + std::sqrt((a - c) * (a - c) + 4.0 * w / (p.g2 * (p.g1 + p.g2))));
}

struct CriticalRatio {
    double value;
    bool singular; ///< |J - 2D| < 1e-12; value reported as 0
};

/// Largest g2/g1 for which |QF-> can become a ground state; 0 when J < 2D.
inline CriticalRatio critical_g_ratio(const ModelParams& p, double e) {
    const double u = p.j - 2.0 * p.d;
    if (std::abs(u) < 1e-12) return {0.0, true};
    if (u < 0.0) return {0.0, false};
    const double w = (p.j * p.delta) * (p.j * p.delta) + e * e;
    return {1.0 / (1.0 + std::sqrt(1.0 + 8.0 * w / (u * u))), false};
}

inline bool qfm_exists(const ModelParams& p, const Fields& f) {
    const Spectrum s = analytic_spectrum(p, f);
    const double qfm = phase_energy(s, Phase::QFMinus);
    return qfm <= std::min(phase_energy(s, Phase::FPlus), phase_energy(s, Phase::QFPlus));
}

/// The two closed-form inequalities for eps_QF- <= eps_F+ and
/// eps_QF- <= eps_QF+, together with the parameter domains on which each
/// of them is an exact restatement of the energy comparison.
struct QfmConditions {
    bool below_fp = false;
    bool below_qfp = false;
    bool below_fp_domain = false;  ///< 2 h2 < J and 2h1 + 6h2 - 3J - 2D >= 0
    bool below_qfp_domain = false; ///< h1 > 2 h2 and J > 2D
};

inline QfmConditions qfm_closed_form_conditions(const ModelParams& p, const Fields& f) {
    const auto [h1, h2] = zeeman_terms(p, f.b);
    const double w = (p.j * p.delta) * (p.j * p.delta) + f.e * f.e;
    QfmConditions c;
    c.below_fp = p.d <= 0.5 * (2.0 * (h1 + h2) - p.j - w / (2.0 * h2 - p.j));
    const double ratio = h1 * (h1 - 2.0 * h2);
    const double radicand = 1.0 + 2.0 * w / ratio;
    c.below_qfp = ratio != 0.0 && radicand >= 0.0 && std::abs(p.j - 2.0 * p.d) >= 2.0 * h2 * std::sqrt(radicand);
    c.below_fp_domain = 2.0 * h2 < p.j && 2.0 * h1 + 6.0 * h2 - 3.0 * p.j - 2.0 * p.d >= 0.0;
    c.below_qfp_domain = h1 > 2.0 * h2 && p.j > 2.0 * p.d;
    return c;
}

enum class BoundaryKind { QfpFp, QfmFp, QfmQfp };

inline const char* boundary_name(BoundaryKind k) {
    switch (k) {
    case BoundaryKind::QfpFp: return "QF+|F+";
    case BoundaryKind::QfmFp: return "QF-|F+";
    case BoundaryKind::QfmQfp: return "QF-|QF+";
    }
    return "?";
}

inline std::pair<Phase, Phase> boundary_phases(BoundaryKind k) {
    switch (k) {
    case BoundaryKind::QfpFp: return {Phase::QFPlus, Phase::FPlus};
    case BoundaryKind::QfmFp: return {Phase::QFMinus, Phase::FPlus};
    case BoundaryKind::QfmQfp: return {Phase::QFMinus, Phase::QFPlus};
    }
    return {Phase::QFPlus, Phase::FPlus};
}

inline std::optional<BoundaryKind> boundary_between(Phase a, Phase b) {
    for (auto k : {BoundaryKind::QfpFp, BoundaryKind::QfmFp, BoundaryKind::QfmQfp}) {
        const auto [x, y] = boundary_phases(k);
        if ((a == x && b == y) || (a == y && b == x)) return k;
    }
    return std::nullopt;
}

inline std::optional<double> boundary_closed_form(const ModelParams& p, BoundaryKind k, double e) {
    switch (k) {
    case BoundaryKind::QfpFp: return boundary_qfp_fp(p, e);
    case BoundaryKind::QfmFp: return boundary_qfm_fp(p, e);
    case BoundaryKind::QfmQfp: return boundary_qfm_qfp(p, e);
    }
    return std::nullopt;
}

/// Field b in [lo, hi] where levels a and b cross at fixed e, by bisection
/// on their energy difference. Requires a sign change over the bracket.
inline std::optional<double> refine_crossing(const ModelParams& p, double e, Phase a, Phase b, double lo,
                                             double hi) {
    const auto gap = [&](double field) {
        const Spectrum s = analytic_spectrum(p, {field, e});
        return phase_energy(s, a) - phase_energy(s, b);
    };
    double glo = gap(lo);
    const double ghi = gap(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0)) return std::nullopt;
    for (int it = 0; it < 200 && hi - lo > 4e-16 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = gap(mid);
        if (gm == 0.0) return mid;
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct BoundaryCurve {
    BoundaryKind kind;
    std::vector<std::pair<double, double>> samples; ///< (e, b)
};

struct PhaseDiagram {
    std::vector<double> e_axis;     ///< columns
    std::vector<double> b_axis;     ///< rows
    std::vector<PhaseLabel> labels; ///< labels[ib * e_axis.size() + ie]
    std::vector<BoundaryCurve> boundaries;

    const PhaseLabel& at(std::size_t ie, std::size_t ib) const { return labels[ib * e_axis.size() + ie]; }

    std::vector<std::string> distinct_labels(bool include_degenerate = false) const {
        std::vector<std::string> names;
        for (const auto& l : labels) {
            if (l.degenerate() && !include_degenerate) continue;
            auto n = l.name();
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(std::move(n));
        }
        return names;
    }
};

inline PhaseDiagram phase_diagram(const ModelParams& p, const AxisRange& e_range, const AxisRange& b_range,
                                  std::size_t threads = 0) {
    validate(p);
    PhaseDiagram pd;
    pd.e_axis = e_range.values();
    pd.b_axis = b_range.values();
    const std::size_t ne = pd.e_axis.size();
    const std::size_t nb = pd.b_axis.size();
    pd.labels.resize(ne * nb);
    for_each_row(
        nb,
        [&](std::size_t ib) {
            for (std::size_t ie = 0; ie < ne; ++ie)
                pd.labels[ib * ne + ie] = classify_ground_state(p, {pd.b_axis[ib], pd.e_axis[ie]}).label;
        },
        threads);

    constexpr std::array<BoundaryKind, 3> kinds{BoundaryKind::QfpFp, BoundaryKind::QfmFp, BoundaryKind::QfmQfp};
    // column_points[kind][ie] = boundary field in column ie, if any
    std::array<std::vector<std::optional<double>>, 3> column_points;
    for (auto& c : column_points) c.assign(ne, std::nullopt);

    for (std::size_t ie = 0; ie < ne; ++ie) {
        const double e = pd.e_axis[ie];
        std::optional<std::size_t> prev;
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const PhaseLabel& lab = pd.at(ie, ib);
            if (lab.degenerate()) continue;
            if (prev && pd.at(ie, *prev).primary() != lab.primary()) {
                const Phase from = pd.at(ie, *prev).primary();
                const Phase to = lab.primary();
                const auto kind = boundary_between(from, to);
                if (kind) {
                    const double lo = pd.b_axis[*prev];
                    const double hi = pd.b_axis[ib];
                    std::optional<double> b = boundary_closed_form(p, *kind, e);
                    if (!b || *b < lo || *b > hi) b = refine_crossing(p, e, from, to, lo, hi);
                    if (b) {
                        const auto check = classify_ground_state(p, {*b, e}).label;
                        auto& slot = column_points[static_cast<std::size_t>(*kind)][ie];
                        if (check.contains(from) && check.contains(to) && !slot) slot = *b;
                    }
                }
            }
            prev = ib;
        }
    }

    for (BoundaryKind kind : kinds) {
        const auto& pts = column_points[static_cast<std::size_t>(kind)];
        BoundaryCurve current{kind, {}};
        for (std::size_t ie = 0; ie < ne; ++ie) {
            if (pts[ie]) {
                current.samples.emplace_back(pd.e_axis[ie], *pts[ie]);
            } else if (!current.samples.empty()) {
                pd.boundaries.push_back(std::move(current));
                current = BoundaryCurve{kind, {}};
            }
        }
        if (!current.samples.empty()) pd.boundaries.push_back(std::move(current));
    }
    return pd;
}

} // namespace mixdimer

#endif
