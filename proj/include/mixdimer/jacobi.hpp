#ifndef MIXDIMER_JACOBI_HPP
#define MIXDIMER_JACOBI_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace mixdimer {

template <std::size_t N>
using SquareMatrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct SymmetricEigensystem {
    std::array<double, N> values{}; ///< ascending
    SquareMatrix<N> vectors{};      ///< column k is the eigenvector of values[k]
    int sweeps = 0;
};

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q)
            if (p != q) s += a[p][q] * a[p][q];
    return std::sqrt(s);
}

/// Cyclic Jacobi rotations for a real symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below rel_tol * ||a||_F.
template <std::size_t N>
SymmetricEigensystem<N> jacobi_eigensystem(SquareMatrix<N> a, double rel_tol = 1e-13,
                                           int max_sweeps = 100) {
    SymmetricEigensystem<N> out;
    for (std::size_t i = 0; i < N; ++i) out.vectors[i][i] = 1.0;

    const double scale = frobenius_norm(a);
    for (; out.sweeps < max_sweeps; ++out.sweeps) {
        if (scale == 0.0 || off_diagonal_norm(a) < rel_tol * scale) break;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (std::size_t k = 0; k < N; ++k) {
                    const double vkp = out.vectors[k][p];
                    const double vkq = out.vectors[k][q];
                    out.vectors[k][p] = c * vkp - s * vkq;
                    out.vectors[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return a[l][l] < a[r][r]; });

    SquareMatrix<N> sorted_vectors{};
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = a[order[k]][order[k]];
        for (std::size_t i = 0; i < N; ++i) sorted_vectors[i][k] = out.vectors[i][order[k]];
    }
    out.vectors = sorted_vectors;
    return out;
}

/// V diag(values) V^T
template <std::size_t N>
SquareMatrix<N> reconstruct(const SymmetricEigensystem<N>& sys) {
    SquareMatrix<N> m{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < N; ++k) s += sys.vectors[i][k] * sys.values[k] * sys.vectors[j][k];
            m[i][j] = s;
        }
    return m;
}

/// Maximum absolute row sum.
template <std::size_t N>
double infinity_norm(const SquareMatrix<N>& a) {
    double best = 0.0;
    for (const auto& row : a) {
        double s = 0.0;
        for (double v : row) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

} // namespace mixdimer

#endif
