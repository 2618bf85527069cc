#include "modk/bench.hpp"
#include "modk/errors.hpp"
#include "modk/json_io.hpp"
#include "modk/parallel.hpp"
#include "modk/pipeline.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace modk {

namespace {

struct Cell {
    std::string family;
    int size = 0;
    int k = 0;
    std::uint64_t seed = 0;
};

struct CellResult {
    BenchRow row;
    std::string error; // non-empty when the run threw
};

} // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    std::vector<Cell> grid;
    for (const auto& family : config.families)
        for (int size : config.sizes)
            for (int k : config.k_values)
                for (std::uint64_t seed : config.seeds)
                    grid.push_back(Cell{family, size, k, seed});

    auto results = indexed_map(grid.size(), config.threads, [&](std::size_t i) {
        const Cell& cell = grid[i];
        CellResult res;
        try {
            const Graph g = generate(cell.family, cell.size, config.gnp_p, cell.seed);
            const auto start = std::chrono::steady_clock::now();
            const ColourRunResult run = colour_graph(g, cell.k, config.divisible_budget);
            const auto stop = std::chrono::steady_clock::now();
            if (!verify(g, run.colouring, cell.k).empty())
                throw internal_error("bench row failed verification");
            res.row = BenchRow{
                cell.family,
                cell.size,
                cell.k,
                cell.seed,
                run.certificate.colours_used,
                run.certificate.palette_bound,
                theorem_bound(cell.k),
                maximality_name(run.certificate.maximality),
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
        } catch (const std::exception& e) {
            res.error = e.what();
        }
        return res;
    });

    std::vector<BenchRow> rows;
    rows.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].error.empty())
            throw std::runtime_error("bench cell " + std::to_string(i) + " (" +
                                     grid[i].family + ") failed: " + results[i].error);
        rows.push_back(results[i].row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "family,n,k,seed,colours_used,palette_bound,theorem_bound,maximality,millis\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.n << ',' << r.k << ',' << r.seed << ','
            << r.colours_used << ',' << r.palette_bound << ',' << r.theorem_bound_value
            << ',' << r.maximality << ',' << r.millis << '\n';
    return out.str();
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back(nlohmann::json{{"family", r.family},
                                     {"n", r.n},
                                     {"k", r.k},
                                     {"seed", r.seed},
                                     {"colours_used", r.colours_used},
                                     {"palette_bound", r.palette_bound},
                                     {"theorem_bound", r.theorem_bound_value},
                                     {"maximality", r.maximality}});
    return nlohmann::json{{"rows", std::move(arr)}};
}

} // namespace modk
