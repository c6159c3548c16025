#ifndef MIXDIMER_GRID_HPP
#define MIXDIMER_GRID_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mixdimer/errors.hpp"

namespace mixdimer {

/// Inclusive linear range lo..hi with n samples.
struct AxisRange {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 2;

    void check() const {
        if (n < 2) throw InvalidParameter("a range needs at least 2 samples");
        if (!(hi > lo)) throw InvalidParameter("a range needs hi > lo");
    }

    std::vector<double> values() const {
        check();
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        return v;
    }
};

struct Axis {
    std::string name; ///< column name including its unit, e.g. "b_over_J"
    std::vector<double> values;
};

/// Values stored row-major: values[iy * nx + ix].
struct Grid2D {
    Axis x;
    Axis y;
    std::string value_name;
    std::vector<double> values;

    std::size_t nx() const { return x.values.size(); }
    std::size_t ny() const { return y.values.size(); }
    double at(std::size_t ix, std::size_t iy) const { return values[iy * nx() + ix]; }
    double& at(std::size_t ix, std::size_t iy) { return values[iy * nx() + ix]; }

    void check() const {
        if (values.size() != nx() * ny()) throw InvalidParameter("grid dimensions inconsistent");
        for (const Axis* a : {&x, &y})
            for (std::size_t i = 1; i < a->values.size(); ++i)
                if (!(a->values[i] > a->values[i - 1]))
                    throw InvalidParameter("grid axis " + a->name + " not strictly increasing");
    }
};

inline std::size_t default_thread_count() {
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(row) for row in [0, rows). Rows are split into contiguous
/// chunks; each row is computed by exactly one thread, so results written
/// per row do not depend on the thread count.
inline void for_each_row(std::size_t rows, const std::function<void(std::size_t)>& body,
                         std::size_t threads = 0) {
    if (threads == 0) threads = default_thread_count();
    threads = std::min(threads, rows);
    if (threads <= 1) {
        for (std::size_t r = 0; r < rows; ++r) body(r);
        return;
    }
    std::vector<std::exception_ptr> failures(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (rows + threads - 1) / threads;
        for (std::size_t w = 0; w < threads; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(rows, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&body, &failures, w, begin, end] {
                try {
                    for (std::size_t r = begin; r < end; ++r) body(r);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
}

} // namespace mixdimer

#endif
