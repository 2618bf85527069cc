#ifndef MODK_PARALLEL_HPP
#define MODK_PARALLEL_HPP

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modk {

/// Runs fn(i) for i in [0, n) and collects the results in index order.
/// threads <= 1 runs the plain serial loop, which is the reference the
/// parallel path must match bit for bit; with OpenMP available and
/// threads > 1 the iterations run concurrently, each writing only its own
/// slot, so the output does not depend on scheduling. fn must not throw.
template <class Fn>
auto indexed_map(std::size_t n, int threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))>
{
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(n);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return out;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < n; ++i)
        out[i] = fn(i);
    return out;
}

inline int hardware_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace modk

#endif
