#ifndef MIXDIMER_VALIDATION_HPP
#define MIXDIMER_VALIDATION_HPP

// Seeded cross-checks of the closed forms against the numeric oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixdimer/model.hpp"
#include "mixdimer/oracle.hpp"
#include "mixdimer/phases.hpp"
#include "mixdimer/thermo.hpp"

namespace mixdimer {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct Check {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
    bool passed = true;
    std::vector<double> deviations; ///< per sample, kept only when requested
};

struct ValidationReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

struct ValidationOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t sample = 1000;
    std::size_t thermo_sample = 200;
    std::optional<double> tolerance; ///< overrides every per-check tolerance
    bool keep_deviations = false;
};

struct RandomPoint {
    ModelParams params;
    Fields fields;
};

/// J = 1, delta in [0, 2], D in [-2, 2], g1, g2 in [0.5, 4], b, e in [0, 4].
class ParameterSampler {
public:
    explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

    RandomPoint next() {
        RandomPoint r;
        r.params.j = 1.0;
        r.params.delta = uniform(0.0, 2.0);
        r.params.d = uniform(-2.0, 2.0);
        r.params.g1 = uniform(0.5, 4.0);
        r.params.g2 = uniform(0.5, 4.0);
        r.fields.b = uniform(0.0, 4.0);
        r.fields.e = uniform(0.0, 4.0);
        return r;
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

namespace detail {

class CheckBuilder {
public:
    CheckBuilder(std::string name, double tolerance, const ValidationOptions& o)
        : check_{std::move(name), 0.0, o.tolerance.value_or(tolerance), 0, true, {}}, keep_(o.keep_deviations) {}

    void add(double deviation) {
        ++check_.samples;
        if (!std::isfinite(deviation)) deviation = INFINITY;
        check_.max_deviation = std::max(check_.max_deviation, deviation);
        if (keep_) check_.deviations.push_back(deviation);
    }

    Check finish() {
        check_.passed = check_.max_deviation <= check_.tolerance;
        return std::move(check_);
    }

private:
    Check check_;
    bool keep_;
};

} // namespace detail

inline ValidationReport run_validation(const ValidationOptions& o = {}) {
    ValidationReport report;
    report.seed = o.seed;
    ParameterSampler sampler(o.seed);

    std::vector<RandomPoint> points(o.sample);
    for (auto& pt : points) pt = sampler.next();

    detail::CheckBuilder spectrum("spectrum_vs_eigensolver", 1e-10, o);
    detail::CheckBuilder trace("eigenvalue_sum_equals_4D", 1e-12, o);
    detail::CheckBuilder norm("coefficient_normalization", 1e-12, o);
    detail::CheckBuilder recon("eigensolver_reconstruction", 1e-11, o);
    detail::CheckBuilder m_zero("zero_field_magnetization", 1e-12, o);
    detail::CheckBuilder p_zero("zero_field_polarization", 1e-12, o);
    detail::CheckBuilder residual("residual_entropy_degeneracy", 1e-12, o);
    detail::CheckBuilder saturation("saturation_magnetization", 1e-8, o);
    detail::CheckBuilder b_qfp_fp("boundary_qfp_fp_vs_bisection", 1e-8, o);
    detail::CheckBuilder b_qfm_fp("boundary_qfm_fp_vs_bisection", 1e-8, o);
    detail::CheckBuilder b_qfm_qfp("boundary_qfm_qfp_vs_bisection", 1e-8, o);
    detail::CheckBuilder b_qfm_absent("qfm_qfp_no_crossing_without_closed_form", 0.0, o);
    detail::CheckBuilder boundary_monotone("boundary_qfp_fp_nondecreasing_in_e", 0.0, o);
    detail::CheckBuilder qfm_fp_domain("qfm_below_fp_condition_in_domain", 0.0, o);
    detail::CheckBuilder qfm_qfp_domain("qfm_below_qfp_condition_in_domain", 0.0, o);
    std::size_t qfm_outside_mismatch = 0;

    for (const auto& [p, f] : points) {
        const HermitianMatrix6 h = hamiltonian_matrix(p, f);
        const Spectrum s = analytic_spectrum(p, f);
        const EmbeddedEigensystem num = numeric_eigensystem(h);
        const auto analytic = s.sorted();
        const auto numeric = numeric_spectrum(h).eigenvalues;
        double dev = 0.0;
        for (std::size_t i = 0; i < 6; ++i) dev = std::max(dev, std::abs(analytic[i] - numeric[i]));
        spectrum.add(dev / p.j);

        double sum = 0.0;
        for (double e : s.eps) sum += e;
        trace.add(std::abs(sum - 4.0 * p.d) / p.j);
        norm.add(std::max(std::abs(s.c1_plus * s.c1_plus + s.c1_minus * s.c1_minus - 1.0),
                          std::abs(s.c2_plus * s.c2_plus + s.c2_minus * s.c2_minus - 1.0)));
        recon.add(num.relative_reconstruction_error());

        const double t = sampler.uniform(0.05, 5.0);
        m_zero.add(std::abs(magnetization(p, {0.0, f.e}, t)));
        p_zero.add(std::abs(polarization(p, {f.b, 0.0}, t)));

        const double gmin = *std::min_element(numeric.begin(), numeric.end());
        const auto n = std::count_if(numeric.begin(), numeric.end(),
                                     [&](double e) { return e - gmin <= kDegeneracyTolerance * p.j; });
        residual.add(std::abs(entropy(p, f, 0.1 * kTemperatureFloor * p.j) - std::log(static_cast<double>(n))));

        saturation.add(std::abs(magnetization(p, {50.0 * p.j, f.e}, 0.05 * p.j) - 1.0));

        const auto compare_boundary = [&](detail::CheckBuilder& c, BoundaryKind k) {
            const auto closed = boundary_closed_form(p, k, f.e);
            if (!closed || *closed < 1e-6) return;
            const auto [a, b] = boundary_phases(k);
            const auto root = refine_crossing(p, f.e, a, b, std::max(1e-7, *closed - 0.5), *closed + 0.5);
            if (root) c.add(std::abs(*root - *closed) / p.j);
        };
        compare_boundary(b_qfp_fp, BoundaryKind::QfpFp);
        compare_boundary(b_qfm_fp, BoundaryKind::QfmFp);
        compare_boundary(b_qfm_qfp, BoundaryKind::QfmQfp);
        if (!boundary_qfm_qfp(p, f.e)) {
            // no closed-form root: the QF-/QF+ gap must keep its sign on (0, 8 J]
            const auto gap = [&](double field) {
                const Spectrum g = analytic_spectrum(p, {field, f.e});
                return phase_energy(g, Phase::QFMinus) - phase_energy(g, Phase::QFPlus);
            };
            const double first = gap(1e-3 * p.j);
            double flips = 0.0;
            for (int k = 1; k <= 400; ++k)
                if ((gap((1e-3 + 0.02 * k) * p.j) > 0.0) != (first > 0.0)) flips = 1.0;
            b_qfm_absent.add(flips);
        }
        boundary_monotone.add(std::max(0.0, boundary_qfp_fp(p, f.e) - boundary_qfp_fp(p, f.e + 0.1)));

        const QfmConditions q = qfm_closed_form_conditions(p, f);
        const double e_qfm = phase_energy(s, Phase::QFMinus);
        const double margin = 1e-9 * p.j;
        const double gap_fp = phase_energy(s, Phase::FPlus) - e_qfm;
        const double gap_qfp = phase_energy(s, Phase::QFPlus) - e_qfm;
        if (std::abs(gap_fp) > margin) {
            const bool mismatch = q.below_fp != (gap_fp > 0.0);
            if (q.below_fp_domain)
                qfm_fp_domain.add(mismatch ? 1.0 : 0.0);
            else if (mismatch)
                ++qfm_outside_mismatch;
        }
        if (std::abs(gap_qfp) > margin) {
            const bool mismatch = q.below_qfp != (gap_qfp > 0.0);
            if (q.below_qfp_domain)
                qfm_qfp_domain.add(mismatch ? 1.0 : 0.0);
            else if (mismatch)
                ++qfm_outside_mismatch;
        }
    }

    detail::CheckBuilder lnz("log_partition_vs_level_sum", 1e-10, o);
    detail::CheckBuilder free("free_energy_vs_oracle", 1e-10, o);
    detail::CheckBuilder m_fd("magnetization_vs_finite_difference", 1e-6, o);
    detail::CheckBuilder p_fd("polarization_vs_finite_difference", 1e-6, o);
    detail::CheckBuilder s_fd("entropy_vs_finite_difference", 1e-6, o);
    detail::CheckBuilder bounds("entropy_bounds", 1e-12, o);
    detail::CheckBuilder monotone("entropy_nondecreasing_in_t", 1e-12, o);
    constexpr std::array<double, 5> temps{0.05, 0.2, 0.7, 1.8, 5.0};
    for (std::size_t k = 0; k < std::min(o.thermo_sample, points.size()); ++k) {
        const auto& [p, f] = points[k];
        const auto levels = numeric_spectrum(hamiltonian_matrix(p, f)).eigenvalues;
        double prev_s = 0.0;
        for (double t : temps) {
            const double gmin = *std::min_element(levels.begin(), levels.end());
            double acc = 0.0;
            for (double e : levels) acc += std::exp(-(e - gmin) / t);
            const double ln_z = std::log(acc) - gmin / t;
            lnz.add(std::abs(partition_function(p, f, t).log_value() - ln_z) / std::max(1.0, std::abs(ln_z)));
            free.add(std::abs(free_energy(p, f, t) - numeric_free_energy(p, f, t)) / p.j);
            m_fd.add(std::abs(magnetization(p, f, t) - fd_derivative(p, f, t, Variable::MagneticField)));
            p_fd.add(std::abs(polarization(p, f, t) / p.mu - fd_derivative(p, f, t, Variable::ElectricField)));
            const double s = entropy(p, f, t);
            s_fd.add(std::abs(s - fd_derivative(p, f, t, Variable::Temperature)));
            bounds.add(std::max({0.0, -s, s - std::log(6.0)}));
            monotone.add(std::max(0.0, prev_s - s));
            prev_s = s;
        }
    }

    for (auto* c : {&spectrum, &trace, &norm, &recon, &lnz, &free, &m_fd, &p_fd, &s_fd, &bounds, &monotone, &m_zero,
                    &p_zero, &residual, &saturation, &b_qfp_fp, &b_qfm_fp, &b_qfm_qfp, &b_qfm_absent, &boundary_monotone,
                    &qfm_fp_domain, &qfm_qfp_domain})
        report.checks.push_back(c->finish());

    report.notes.push_back("eigenvalue sum is checked against 4D, the trace of the Hamiltonian");
    report.notes.push_back("m/m_s is the raw moment -dF/db divided by g1/2 + g2");
    report.notes.push_back("closed-form QF- conditions disagree with the energy comparison at " +
                           std::to_string(qfm_outside_mismatch) + " samples outside their validity domain");
    return report;
}

} // namespace mixdimer

#endif
