// Compares the serial bench loop against the OpenMP one on the same grid:
// both must produce identical reports, the parallel run should just get
// there faster.

#include "modk/bench.hpp"
#include "modk/parallel.hpp"

#include <chrono>
#include <cstdio>

int main()
{
    modk::BenchConfig config;
    config.families = {"gnp", "complete", "cycle", "star"};
    config.sizes = {16, 24, 32};
    config.k_values = {2, 3, 4};
    config.seeds = {1, 2, 3};
    config.gnp_p = 0.4;
    config.divisible_budget = 20000;

    auto timed = [&](int threads) {
        config.threads = threads;
        const auto start = std::chrono::steady_clock::now();
        auto rows = modk::run_bench(config);
        const auto stop = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return std::make_pair(std::move(rows), ms);
    };

    const auto [serial_rows, serial_ms] = timed(1);
    const int workers = modk::hardware_threads();
    const auto [parallel_rows, parallel_ms] = timed(workers);

    const bool identical = modk::bench_json(serial_rows) == modk::bench_json(parallel_rows);

    std::printf("grid cells        : %zu\n", serial_rows.size());
    std::printf("serial            : %lld ms\n", static_cast<long long>(serial_ms));
    std::printf("parallel (%2d thr) : %lld ms\n", workers, static_cast<long long>(parallel_ms));
    if (parallel_ms > 0)
        std::printf("speedup           : %.2fx\n",
                    static_cast<double>(serial_ms) / static_cast<double>(parallel_ms));
    std::printf("reports identical : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
