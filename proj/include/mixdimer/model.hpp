#ifndef MIXDIMER_MODEL_HPP
#define MIXDIMER_MODEL_HPP

// Mixed spin-(1/2, 1) Heisenberg dimer in a longitudinal magnetic field
// (along z) and an electric field along y, coupled through the
// Katsura-Nagaosa-Balatsky term E (S^x mu^y - S^y mu^x). Bond along x.
//
// Units: k_B = mu_B = 1. Energies are in the units of J unless J != 1 is
// passed explicitly.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "mixdimer/errors.hpp"

namespace mixdimer {

struct ModelParams {
    double j = 1.0;     ///< exchange coupling, J > 0
    double delta = 1.0; ///< XXZ anisotropy
    double d = 0.0;     ///< single-ion anisotropy of the spin-1 ion
    double g1 = 2.0;    ///< Lande factor, spin-1/2
    double g2 = 2.0;    ///< Lande factor, spin-1
    double mu = 1.0;    ///< polarization scale
};

/// External fields as energies: b = mu_B B, e = E. Only b, e >= 0 is modeled.
struct Fields {
    double b = 0.0;
    double e = 0.0;
};

inline void validate(const ModelParams& p) {
    if (!(p.j > 0.0)) throw InvalidParameter("J must be positive");
    if (!(p.g1 > 0.0) || !(p.g2 > 0.0)) throw InvalidParameter("Lande factors must be positive");
    if (!(p.mu > 0.0)) throw InvalidParameter("mu must be positive");
    if (!std::isfinite(p.delta) || !std::isfinite(p.d))
        throw InvalidParameter("anisotropies must be finite");
}

inline void validate(const Fields& f) {
    if (!(f.b >= 0.0) || !std::isfinite(f.b)) throw InvalidParameter("magnetic field must be >= 0");
    if (!(f.e >= 0.0) || !std::isfinite(f.e)) throw InvalidParameter("electric field must be >= 0");
}

struct ZeemanTerms {
    double h1;
    double h2;
};

inline ZeemanTerms zeeman_terms(const ModelParams& p, double b) {
    if (!(b >= 0.0)) throw InvalidParameter("magnetic field must be >= 0");
    return {p.g1 * b, p.g2 * b};
}

/// Saturation moment g1/2 + g2 used to normalize the magnetization.
inline double saturation_moment(const ModelParams& p) { return 0.5 * p.g1 + p.g2; }

/// Dense 6x6 Hamiltonian in the basis
/// |1/2,1>, |1/2,0>, |1/2,-1>, |-1/2,1>, |-1/2,0>, |-1/2,-1>.
class HermitianMatrix6 {
public:
    static constexpr std::size_t size = 6;
    using value_type = std::complex<double>;

    value_type& operator()(std::size_t row, std::size_t col) { return data_[row * size + col]; }
    const value_type& operator()(std::size_t row, std::size_t col) const {
        return data_[row * size + col];
    }

    value_type trace() const {
        value_type t{};
        for (std::size_t i = 0; i < size; ++i) t += (*this)(i, i);
        return t;
    }

    /// Largest |m_ij - conj(m_ji)|.
    double hermiticity_defect() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t k = 0; k < size; ++k)
                worst = std::max(worst, std::abs((*this)(i, k) - std::conj((*this)(k, i))));
        return worst;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::array<value_type, size * size> data_{};
};

inline HermitianMatrix6 hamiltonian_matrix(const ModelParams& p, const Fields& f) {
    validate(p);
    validate(f);
    const auto [h1, h2] = zeeman_terms(p, f.b);
    const double jd = p.j * p.delta;

    HermitianMatrix6 m;
    m(0, 0) = 0.5 * (p.j + 2.0 * p.d - (h1 + 2.0 * h2));
    m(1, 1) = -0.5 * h1;
    m(2, 2) = -0.5 * (p.j - 2.0 * p.d + (h1 - 2.0 * h2));
    m(3, 3) = -0.5 * (p.j - 2.0 * p.d - (h1 - 2.0 * h2));
    m(4, 4) = 0.5 * h1;
    m(5, 5) = 0.5 * (p.j + 2.0 * p.d + (h1 + 2.0 * h2));

    // e^{i phi} sqrt((J Delta)^2 + E^2) / sqrt(2) with phi = arg(J Delta + iE)
    const std::complex<double> hop = std::complex<double>(jd, f.e) / std::numbers::sqrt2;
    m(1, 3) = hop;
    m(2, 4) = hop;
    m(3, 1) = std::conj(hop);
    m(4, 2) = std::conj(hop);
    return m;
}

/// Quantities shared by the spectrum, the thermodynamics and the phase
/// boundaries. a1/r1 belong to the {|1/2,0>, |-1/2,1>} block (QF+ family),
/// a2/r2 to the {|1/2,-1>, |-1/2,0>} block (QF- family).
struct MixingTerms {
    double h1;
    double h2;
    double u;  ///< J - 2D
    double w;  ///< (J Delta)^2 + E^2
    double a1; ///< J - 2D - 2(h1 - h2)
    double a2; ///< J - 2D + 2(h1 - h2)
    double r1; ///< sqrt(a1^2 + 8w)
    double r2; ///< sqrt(a2^2 + 8w)

    /// a1 / r1, defined as 0 when the block is exactly degenerate.
    double x1() const { return r1 > 0.0 ? a1 / r1 : 0.0; }
    double x2() const { return r2 > 0.0 ? a2 / r2 : 0.0; }
};

inline MixingTerms mixing_terms(const ModelParams& p, const Fields& f) {
    const auto [h1, h2] = zeeman_terms(p, f.b);
    MixingTerms m{};
    m.h1 = h1;
    m.h2 = h2;
    m.u = p.j - 2.0 * p.d;
    m.w = (p.j * p.delta) * (p.j * p.delta) + f.e * f.e;
    m.a1 = m.u - 2.0 * (h1 - h2);
    m.a2 = m.u + 2.0 * (h1 - h2);
    m.r1 = std::sqrt(m.a1 * m.a1 + 8.0 * m.w);
    m.r2 = std::sqrt(m.a2 * m.a2 + 8.0 * m.w);
    return m;
}

struct Spectrum {
    /// eps[0..5] = eps_1..eps_6: F+, F-, QF+ (lower) / upper partner,
    /// QF- (lower) / upper partner.
    std::array<double, 6> eps{};
    double c1_plus = 0.0;
    double c1_minus = 0.0;
    double c2_plus = 0.0;
    double c2_minus = 0.0;
    double phi = 0.0;

    double ground_energy() const { return *std::min_element(eps.begin(), eps.end()); }

    std::array<double, 6> sorted() const {
        auto s = eps;
        std::sort(s.begin(), s.end());
        return s;
    }
};

inline Spectrum analytic_spectrum(const ModelParams& p, const Fields& f) {
    validate(p);
    validate(f);
    const MixingTerms m = mixing_terms(p, f);
    const double zee = m.h1 + 2.0 * m.h2;

    Spectrum s;
    s.eps[0] = 0.5 * (p.j + 2.0 * p.d - zee);
    s.eps[1] = 0.5 * (p.j + 2.0 * p.d + zee);
    s.eps[2] = -0.25 * (m.u + 2.0 * m.h2) - 0.25 * m.r1;
    s.eps[3] = -0.25 * (m.u + 2.0 * m.h2) + 0.25 * m.r1;
    s.eps[4] = -0.25 * (m.u - 2.0 * m.h2) - 0.25 * m.r2;
    s.eps[5] = -0.25 * (m.u - 2.0 * m.h2) + 0.25 * m.r2;

    const auto modulus = [](double x) { return std::sqrt(std::max(0.0, 1.0 + x)) / std::numbers::sqrt2; };
    s.c1_plus = modulus(m.x1());
    s.c1_minus = modulus(-m.x1());
    s.c2_plus = modulus(m.x2());
    s.c2_minus = modulus(-m.x2());
    s.phi = std::atan2(f.e, p.j * p.delta);
    return s;
}

} // namespace mixdimer

#endif
