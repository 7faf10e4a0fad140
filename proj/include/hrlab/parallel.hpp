#pragma once

#include <cstddef>

namespace hrlab {

// Execution policy for the data-parallel kernels. Every kernel computes
// per-index results into index-addressed storage and reduces serially in
// index order, so serial and parallel runs produce bitwise-identical
// output regardless of thread count.
enum class Exec { serial, parallel };

template <typename F>
void parallel_for(std::ptrdiff_t n, Exec exec, F&& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace hrlab
