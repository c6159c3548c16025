#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mixdimer/phases.hpp"
#include "mixdimer/validation.hpp"
#include "support.hpp"

using namespace mixdimer;
using testing_support::imbalanced;
using testing_support::isotropic;
using testing_support::with_g2;

namespace {

double bisect(const std::function<double(double)>& g, double lo, double hi) {
    double glo = g(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double gap(const ModelParams& p, double e, Phase a, Phase b, double field) {
    const Spectrum s = analytic_spectrum(p, {field, e});
    return phase_energy(s, a) - phase_energy(s, b);
}

} // namespace

TEST(Classify, IsotropicExamples) {
    const auto p = isotropic();
    EXPECT_EQ(classify_ground_state(p, {2.0, 0.0}).label.phases, std::vector<Phase>{Phase::FPlus});
    EXPECT_EQ(classify_ground_state(p, {0.2, 0.0}).label.phases, std::vector<Phase>{Phase::QFPlus});
    const auto crossing = classify_ground_state(p, {0.75, 0.0});
    EXPECT_TRUE(crossing.label.degenerate());
    EXPECT_TRUE(crossing.label.contains(Phase::QFPlus));
    EXPECT_TRUE(crossing.label.contains(Phase::FPlus));
    EXPECT_EQ(crossing.label.name(), "F+|QF+");
    EXPECT_NEAR(crossing.energy, -1.75, 1e-15);
}

TEST(Classify, ZeroFieldDoublet) {
    const auto c = classify_ground_state(isotropic(), {0.0, 0.0});
    EXPECT_TRUE(c.label.contains(Phase::QFPlus));
    EXPECT_TRUE(c.label.contains(Phase::QFMinus));
    EXPECT_EQ(c.label.phases.size(), 2u);
    EXPECT_DOUBLE_EQ(c.energy, -1.0);
}

TEST(BoundaryQfpFp, Examples) {
    EXPECT_NEAR(boundary_qfp_fp(isotropic(), 0.0), 0.75, 1e-12);
    const double at_one = boundary_qfp_fp(isotropic(), 1.0);
    EXPECT_NEAR(at_one, 0.89039, 1e-5);
    const double root = bisect([&](double b) { return gap(isotropic(), 1.0, Phase::QFPlus, Phase::FPlus, b); }, 0.1, 3);
    EXPECT_NEAR(at_one, root, 1e-12);
}

TEST(BoundaryQfpFp, MonotoneInDAndE) {
    double prev = -1.0;
    for (double d = -1.5; d <= 1.5; d += 0.25) {
        ModelParams p = isotropic();
        p.d = d;
        const double b = boundary_qfp_fp(p, 0.5);
        EXPECT_GT(b, prev);
        prev = b;
    }
    ParameterSampler sampler(21);
    for (int i = 0; i < 200; ++i) {
        const auto [p, f] = sampler.next();
        for (double e = 0.0; e < 4.0; e += 0.1) EXPECT_LE(boundary_qfp_fp(p, e), boundary_qfp_fp(p, e + 0.1));
    }
}

TEST(BoundaryQfmQfp, ImbalancedValue) {
    const auto b = boundary_qfm_qfp(imbalanced(), 0.0);
    ASSERT_TRUE(b.has_value());
    EXPECT_NEAR(*b, 1.00778, 1e-5);
    const double root =
        bisect([&](double x) { return gap(imbalanced(), 0.0, Phase::QFMinus, Phase::QFPlus, x); }, 0.5, 1.5);
    EXPECT_NEAR(*b, root, 1e-8);
    EXPECT_NEAR(*b, 1.0077822185373184, 1e-12);
}

TEST(BoundaryQfmQfp, Absent) {
    EXPECT_FALSE(boundary_qfm_qfp({1.0, 1.0, -1.0, 2.0, 1.0, 1.0}, 0.0).has_value());
    EXPECT_FALSE(boundary_qfm_qfp(imbalanced(), 10.0).has_value());
    EXPECT_FALSE(boundary_qfm_qfp({1.0, 1.0, 0.6, 3.0, 0.6, 1.0}, 0.0).has_value());
}

TEST(BoundaryQfmFp, CrossingIdentity) {
    const auto p = imbalanced();
    for (double e = 0.0; e <= 3.0; e += 0.25) {
        const double b = boundary_qfm_fp(p, e);
        const Spectrum s = analytic_spectrum(p, {b, e});
        EXPECT_NEAR(phase_energy(s, Phase::QFMinus), phase_energy(s, Phase::FPlus), 1e-10);
    }
    const double root = bisect([&](double x) { return gap(p, 0.0, Phase::QFMinus, Phase::FPlus, x); }, 0.2, 1.5);
    EXPECT_NEAR(boundary_qfm_fp(p, 0.0), root, 1e-8);
    EXPECT_NEAR(boundary_qfm_fp(p, 0.0), 0.7457455317285547, 1e-12);
}

TEST(Boundaries, TriplePoint) {
    const auto p = imbalanced();
    const auto diff = [&](double e) { return *boundary_qfm_qfp(p, e) - boundary_qfm_fp(p, e); };
    ASSERT_GT(diff(0.0), 0.0);
    ASSERT_LT(diff(0.5), 0.0);
    const double e_star = bisect(diff, 0.0, 0.5);
    const double b_star = boundary_qfm_fp(p, e_star);
    EXPECT_NEAR(boundary_qfp_fp(p, e_star), b_star, 1e-8);
    const auto label = classify_ground_state(p, {b_star, e_star}).label;
    EXPECT_EQ(label.phases.size(), 3u);
}

TEST(CriticalRatio, Examples) {
    const auto r = critical_g_ratio(isotropic(), 0.0);
    EXPECT_FALSE(r.singular);
    EXPECT_NEAR(r.value, 0.25, 1e-15);
    EXPECT_LT(critical_g_ratio(isotropic(), 1e8).value, 1e-7);
    ModelParams p = isotropic();
    p.d = 0.5;
    const auto s = critical_g_ratio(p, 0.0);
    EXPECT_TRUE(s.singular);
    EXPECT_EQ(s.value, 0.0);
    p.d = 0.5 - 1e-6;
    EXPECT_LT(critical_g_ratio(p, 0.0).value, 1e-6);
    p.d = 1.5;
    EXPECT_FALSE(critical_g_ratio(p, 0.0).singular);
    EXPECT_EQ(critical_g_ratio(p, 0.0).value, 0.0);
}

TEST(CriticalRatio, MatchesExistenceScan) {
    ParameterSampler sampler(31);
    for (int i = 0; i < 3000; ++i) {
        auto [p, f] = sampler.next();
        if (std::abs(p.j - 2.0 * p.d) < 1e-3) continue;
        const auto ratio = critical_g_ratio(p, f.e);
        bool found = false;
        for (double b = 1e-3; b < 8.0 && !found; b += 2e-3) found = qfm_exists(p, {b, f.e});
        const double g = p.g2 / p.g1;
        if (std::abs(g - ratio.value) < 1e-3) continue;
        EXPECT_EQ(found, g < ratio.value) << "g2/g1=" << g << " threshold=" << ratio.value;
    }
}

TEST(QfmExists, Examples) {
    for (double b = 0.05; b < 4.0; b += 0.05) EXPECT_FALSE(qfm_exists(isotropic(), {b, 0.3}));
    EXPECT_TRUE(qfm_exists(imbalanced(), {0.5, 0.0}));
    const double edge = boundary_qfm_fp(imbalanced(), 0.0);
    EXPECT_FALSE(qfm_exists(imbalanced(), {edge + 1e-3, 0.0}));
}

TEST(QfmExists, ClosedFormConditionsInsideDomains) {
    ParameterSampler sampler(kDefaultSeed);
    int checked_fp = 0, checked_qfp = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto [p, f] = sampler.next();
        const Spectrum s = analytic_spectrum(p, f);
        const auto q = qfm_closed_form_conditions(p, f);
        const double qfm = phase_energy(s, Phase::QFMinus);
        const double gfp = phase_energy(s, Phase::FPlus) - qfm;
        const double gqfp = phase_energy(s, Phase::QFPlus) - qfm;
        if (q.below_fp_domain && std::abs(gfp) > 1e-9) {
            EXPECT_EQ(q.below_fp, gfp > 0.0);
            ++checked_fp;
        }
        if (q.below_qfp_domain && std::abs(gqfp) > 1e-9) {
            EXPECT_EQ(q.below_qfp, gqfp > 0.0);
            ++checked_qfp;
        }
    }
    EXPECT_GT(checked_fp, 50);
    EXPECT_GT(checked_qfp, 200);
}

TEST(PhaseDiagram, IsotropicHasTwoPhases) {
    for (double d : {-1.0, 0.0, 1.0}) {
        ModelParams p = isotropic();
        p.d = d;
        const auto pd = phase_diagram(p, {0.0, 4.0, 81}, {0.0, 4.0, 81}, 1);
        const auto labels = pd.distinct_labels();
        EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()), (std::set<std::string>{"F+", "QF+"}))
            << "D=" << d;
    }
}

TEST(PhaseDiagram, ImbalancedHasThreePhases) {
    const auto pd = phase_diagram(imbalanced(), {0.0, 2.0, 81}, {0.0, 3.0, 121}, 1);
    const auto labels = pd.distinct_labels();
    EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()), (std::set<std::string>{"F+", "QF+", "QF-"}));
    std::set<BoundaryKind> kinds;
    for (const auto& c : pd.boundaries) kinds.insert(c.kind);
    EXPECT_EQ(kinds.size(), 3u);
}

TEST(PhaseDiagram, BoundaryPointsAreDegenerate) {
    for (const auto& p : {isotropic(), imbalanced(), ModelParams{1.0, 0.5, -0.5, 3.0, 0.7, 1.0}}) {
        const auto pd = phase_diagram(p, {0.0, 3.0, 61}, {0.0, 4.0, 101}, 1);
        ASSERT_FALSE(pd.boundaries.empty());
        for (const auto& curve : pd.boundaries) {
            const auto [a, b] = boundary_phases(curve.kind);
            for (const auto& [e, field] : curve.samples) {
                const auto label = classify_ground_state(p, {field, e}).label;
                EXPECT_TRUE(label.degenerate());
                EXPECT_TRUE(label.contains(a) && label.contains(b));
                const auto closed = boundary_closed_form(p, curve.kind, e);
                if (closed) {
                    EXPECT_NEAR(*closed, field, 1e-10);
                }
            }
        }
    }
}

TEST(PhaseDiagram, DegenerateCellsAreThin) {
    const auto pd = phase_diagram(imbalanced(), {0.0, 2.0, 41}, {0.0, 3.0, 301}, 1);
    for (std::size_t ie = 0; ie < pd.e_axis.size(); ++ie)
        for (std::size_t ib = 2; ib < pd.b_axis.size(); ++ib)
            EXPECT_FALSE(pd.at(ie, ib).degenerate() && pd.at(ie, ib - 1).degenerate());
}

TEST(PhaseDiagram, ParallelMatchesSerial) {
    const auto serial = phase_diagram(imbalanced(), {0.0, 2.0, 51}, {0.0, 3.0, 77}, 1);
    const auto parallel = phase_diagram(imbalanced(), {0.0, 2.0, 51}, {0.0, 3.0, 77}, 4);
    EXPECT_EQ(serial.labels, parallel.labels);
    ASSERT_EQ(serial.boundaries.size(), parallel.boundaries.size());
    for (std::size_t i = 0; i < serial.boundaries.size(); ++i)
        EXPECT_EQ(serial.boundaries[i].samples, parallel.boundaries[i].samples);
}

TEST(PhaseDiagram, RejectsDegenerateRanges) {
    EXPECT_THROW(phase_diagram(isotropic(), {0.0, 1.0, 1}, {0.0, 1.0, 5}), InvalidParameter);
    EXPECT_THROW(phase_diagram(isotropic(), {1.0, 1.0, 5}, {0.0, 1.0, 5}), InvalidParameter);
}

TEST(PhaseDiagram, ElectricFieldDrivenTransition) {
    // b = 0.85 lies above the QF+|F+ line at e = 0 and below it for large e
    const auto p = isotropic();
    EXPECT_EQ(classify_ground_state(p, {0.85, 0.0}).label.phases, std::vector<Phase>{Phase::FPlus});
    EXPECT_EQ(classify_ground_state(p, {0.85, 2.0}).label.phases, std::vector<Phase>{Phase::QFPlus});
    const auto pd = phase_diagram(with_g2(2.0), {0.0, 3.0, 61}, {0.0, 2.0, 81}, 1);
    bool crosses = false;
    for (const auto& curve : pd.boundaries)
        for (const auto& [e, b] : curve.samples) crosses |= curve.kind == BoundaryKind::QfpFp && b > 0.85;
    EXPECT_TRUE(crosses);
}
