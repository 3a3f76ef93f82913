#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace weylatlas {

/// Worker count resolution: explicit argument > WEYL_ATLAS_WORKERS > OpenMP default.
inline int resolve_workers(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WEYL_ATLAS_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

/// Serial reference kernel driver. Kept deliberately trivial: the parallel
/// driver must produce bit-identical results, which tests assert.
template <typename F>
void for_each_index_serial(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

/// OpenMP kernel driver. Each index writes only its own output slot, so the
/// result is independent of scheduling; exceptions are captured and rethrown
/// after the parallel region (first index wins).
template <typename F>
void for_each_index(std::size_t n, int workers, F&& body) {
    if (workers <= 1 || n < 2) {
        for_each_index_serial(n, body);
        return;
    }
    std::exception_ptr first_error = nullptr;
    std::size_t first_error_index = n;
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            {
                if (!first_error || static_cast<std::size_t>(i) < first_error_index) {
                    first_error = std::current_exception();
                    first_error_index = static_cast<std::size_t>(i);
                }
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace weylatlas
