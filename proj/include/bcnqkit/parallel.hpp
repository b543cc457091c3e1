#pragma once

#include <cstddef>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcnq::par {

/// Execution mode for the row-parallel kernels. Every parallel loop in the
/// library writes to preassigned slots, so serial and openmp produce
/// identical results; the serial path is kept as the reference the tests
/// compare against.
enum class Mode { serial, openmp };

inline Mode& default_mode_ref() {
#ifdef _OPENMP
    static Mode mode = Mode::openmp;
#else
    static Mode mode = Mode::serial;
#endif
    return mode;
}

inline Mode default_mode() { return default_mode_ref(); }
inline void set_default_mode(Mode m) { default_mode_ref() = m; }

/// Runs fn(0..count-1), serially or under OpenMP. Exceptions from worker
/// iterations are captured and the first one is rethrown after the join.
inline void run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn, Mode mode) {
    if (mode == Mode::serial) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(bcnq_par_error)
            {
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

inline void run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn) {
    run_indexed(count, fn, default_mode());
}

}  // namespace bcnq::par
