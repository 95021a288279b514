#ifndef SPECFAC_SWEEP_HPP
#define SPECFAC_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specfac {

// Serial reference for the parallel sweep; kept for testing and benchmarks.
template <typename R, typename Fn>
std::vector<R> sweep_map_serial(std::size_t count, Fn&& fn) {
    std::vector<R> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

// OpenMP map over [0, count). Results land at their input index, so output
// order is deterministic regardless of scheduling. The first exception thrown
// by any worker is rethrown after the region joins.
template <typename R, typename Fn>
std::vector<R> sweep_map(std::size_t count, Fn&& fn) {
#ifdef _OPENMP
    std::vector<R> out(count);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
#else
    return sweep_map_serial<R>(count, std::forward<Fn>(fn));
#endif
}

inline int sweep_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace specfac

#endif
