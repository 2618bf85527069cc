#ifndef MODK_BENCH_HPP
#define MODK_BENCH_HPP

#include "modk/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace modk {

/// Grid of colouring runs: families x sizes x k values x seeds, in config
/// order. Runs may execute concurrently (threads > 1); rows always come
/// back in grid order and every output is re-verified.
struct BenchConfig {
    std::vector<std::string> families; // star | complete | cycle | tripartite | gnp
    std::vector<int> sizes;
    std::vector<int> k_values;
    std::vector<std::uint64_t> seeds;
    double gnp_p = 0.3;
    long long divisible_budget = 20000;
    int threads = 1;
};

struct BenchRow {
    std::string family;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    int colours_used = 0;
    int palette_bound = 0;
    int theorem_bound_value = 0;
    std::string maximality;
    long long millis = 0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

/// CSV with header family,n,k,seed,colours_used,palette_bound,theorem_bound,maximality,millis
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Deterministic report: same fields as the CSV minus the timing column,
/// so two runs of the same grid serialize to identical bytes.
nlohmann::json bench_json(const std::vector<BenchRow>& rows);

} // namespace modk

#endif
