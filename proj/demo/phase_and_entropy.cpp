#include <cstdio>
#include <numbers>

#include "mixdimer/mixdimer.hpp"

using namespace mixdimer;

int main() {
    const ModelParams p{1.0, 1.0, -1.0, 2.0, 0.8, 1.0};

    std::printf("ground state along b at e = 0.25\n");
    for (double b : AxisRange{0.0, 2.0, 9}.values())
        std::printf("  b = %.2f  %s\n", b, classify_ground_state(p, {b, 0.25}).label.name().c_str());

    std::printf("\npairwise level crossings at e = 0\n");
    if (const auto b = boundary_qfm_qfp(p, 0.0)) std::printf("  QF-|QF+ b = %.10f\n", *b);
    std::printf("  QF+|F+  b = %.10f\n", boundary_qfp_fp(p, 0.0));
    std::printf("  QF-|F+  b = %.10f\n", boundary_qfm_fp(p, 0.0));

    std::printf("\nthermodynamics at b = 0.5, e = 0.25\n  T       m/ms      P/mu      S/kB\n");
    for (double t : {0.01, 0.1, 0.5, 1.0, 3.0}) {
        const ThermoPoint tp = thermo_point(p, {0.5, 0.25}, t);
        std::printf("  %-6.2f  %.6f  %.6f  %.6f\n", t, tp.m_over_ms, tp.p, tp.s);
    }

    const auto iso = isentrope(p, FieldAxis::Magnetic, 0.0, std::numbers::ln2, AxisRange{0.0, 2.0, 11}.values());
    std::printf("\nS = ln2 isentrope at e = 0\n");
    for (const auto& [b, t] : iso.samples) std::printf("  b = %.2f  T = %.6f\n", b, t);

    const auto temps = AxisRange{0.005, 3.0, 600}.values();
    const auto curve = caloric_curve(p, FieldAxis::Magnetic, 0.0, 0.75, temps);
    const RcResult rc = refrigerant_capacity(curve, CaloricEffect::Inverse);
    std::printf("\ninverse MCE for a 0.75 field span: Rc = %.6f over T in [%.4f, %.4f]\n", rc.rc_abs, rc.t1, rc.t2);
}
