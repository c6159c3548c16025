#ifndef MIXDIMER_ORACLE_HPP
#define MIXDIMER_ORACLE_HPP

// Independent numerical route to the spectrum and the thermodynamics.
// Nothing in here touches analytic_spectrum or the closed forms of
// thermo.hpp; the validator compares the two routes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "mixdimer/errors.hpp"
#include "mixdimer/jacobi.hpp"
#include "mixdimer/model.hpp"

namespace mixdimer {

struct NumericSpectrum {
    std::array<double, 6> eigenvalues{}; ///< ascending
};

/// Eigensystem of the 12x12 real embedding [[Re M, -Im M], [Im M, Re M]].
/// Every eigenvalue of M appears twice.
struct EmbeddedEigensystem {
    SquareMatrix<12> embedded{};
    SymmetricEigensystem<12> system{};

    /// ||V diag(lambda) V^T - M_emb||_inf / ||M_emb||_inf
    double relative_reconstruction_error() const {
        const auto back = reconstruct(system);
        SquareMatrix<12> diff{};
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t k = 0; k < 12; ++k) diff[i][k] = back[i][k] - embedded[i][k];
        const double norm = infinity_norm(embedded);
        return norm > 0.0 ? infinity_norm(diff) / norm : infinity_norm(diff);
    }
};

inline constexpr double kHermiticityTolerance = 1e-12;

inline EmbeddedEigensystem numeric_eigensystem(const HermitianMatrix6& m) {
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > kHermiticityTolerance * scale)
        throw NonHermitianInput("matrix is not Hermitian to 1e-12");

    EmbeddedEigensystem out;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 6; ++k) {
            const auto v = m(i, k);
            out.embedded[i][k] = v.real();
            out.embedded[i][k + 6] = -v.imag();
            out.embedded[i + 6][k] = v.imag();
            out.embedded[i + 6][k + 6] = v.real();
        }
    }
    out.system = jacobi_eigensystem<12>(out.embedded);
    return out;
}

inline NumericSpectrum numeric_spectrum(const HermitianMatrix6& m) {
    const auto sys = numeric_eigensystem(m);
    NumericSpectrum s;
    for (std::size_t k = 0; k < 6; ++k)
        s.eigenvalues[k] = 0.5 * (sys.system.values[2 * k] + sys.system.values[2 * k + 1]);
    return s;
}

/// F = eps_min - t ln sum exp(-(eps_i - eps_min)/t) over the numerically
/// obtained levels.
inline double numeric_free_energy(const ModelParams& p, const Fields& f, double t) {
    if (!(t > 0.0)) throw NonPositiveTemperature(t);
    const auto levels = numeric_spectrum(hamiltonian_matrix(p, f)).eigenvalues;
    const double ground = levels.front();
    double sum = 0.0;
    for (double eps : levels) sum += std::exp(-(eps - ground) / t);
    return ground - t * std::log(sum);
}

enum class Variable { MagneticField, ElectricField, Temperature };

inline constexpr double kDefaultFiniteDifferenceStep = 1e-4;

/// Central difference of numeric_free_energy with one Richardson level.
///   MagneticField -> m/m_s = -dF/db / (g1/2 + g2)
///   ElectricField -> P/mu  = -dF/de
///   Temperature   -> S/k_B = -dF/dt
/// F is even in b and in e, so stencil points below zero are mirrored.
inline double fd_derivative(const ModelParams& p, const Fields& f, double t, Variable which,
                            double step = kDefaultFiniteDifferenceStep) {
    if (!(step >= 1e-9)) throw StepUnderflow(step);
    if (!(t > 0.0)) throw NonPositiveTemperature(t);
    if (which == Variable::Temperature && !(t - step > 0.0)) throw NonPositiveTemperature(t - step);

    const auto free_energy_at = [&](double x) {
        Fields g = f;
        double temp = t;
        switch (which) {
        case Variable::MagneticField: g.b = std::abs(x); break;
        case Variable::ElectricField: g.e = std::abs(x); break;
        case Variable::Temperature: temp = x; break;
        }
        return numeric_free_energy(p, g, temp);
    };
    const double x0 = which == Variable::MagneticField ? f.b
                      : which == Variable::ElectricField ? f.e
                                                         : t;
    const auto central = [&](double h) {
        return -(free_energy_at(x0 + h) - free_energy_at(x0 - h)) / (2.0 * h);
    };
    const double coarse = central(step);
    const double fine = central(0.5 * step);
    const double value = (4.0 * fine - coarse) / 3.0;
    return which == Variable::MagneticField ? value / saturation_moment(p) : value;
}

} // namespace mixdimer

#endif
