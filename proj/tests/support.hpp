#ifndef MIXDIMER_TEST_SUPPORT_HPP
#define MIXDIMER_TEST_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "mixdimer/model.hpp"

namespace testing_support {

/// J = 1, Delta = 1, D = 0, g1 = g2 = 2.
inline mixdimer::ModelParams isotropic() { return {1.0, 1.0, 0.0, 2.0, 2.0, 1.0}; }

/// D = -J, g1 = 2, g2 = 0.8: admits the QF- phase.
inline mixdimer::ModelParams imbalanced() { return {1.0, 1.0, -1.0, 2.0, 0.8, 1.0}; }

inline mixdimer::ModelParams with_g2(double g2) {
    auto p = isotropic();
    p.g2 = g2;
    return p;
}

/// Brute-force ln Z, S and <E> from a list of levels.
struct LevelSums {
    double ln_z;
    double mean_energy;
    double entropy;
};

inline LevelSums level_sums(const std::array<double, 6>& levels, double t) {
    const double g = *std::min_element(levels.begin(), levels.end());
    double z = 0.0, e = 0.0;
    for (double l : levels) {
        const double w = std::exp(-(l - g) / t);
        z += w;
        e += l * w;
    }
    e /= z;
    const double ln_z = std::log(z) - g / t;
    return {ln_z, e, ln_z + e / t};
}

} // namespace testing_support

#endif
