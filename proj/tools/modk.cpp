// modk: construct, verify and bound mod-k edge colourings.
//
// Subcommands: gen, colour, verify, exact, divisible, bench.
// Exit codes: 0 success, 2 invalid input, 3 internal invariant failure.

#include "modk/bench.hpp"
#include "modk/colouring.hpp"
#include "modk/divisible.hpp"
#include "modk/errors.hpp"
#include "modk/graph.hpp"
#include "modk/json_io.hpp"
#include "modk/parallel.hpp"
#include "modk/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using modk::Graph;
using modk::GraphFormat;
using nlohmann::json;

GraphFormat parse_format(const std::string& name)
{
    if (name == "edge-list")
        return GraphFormat::edge_list;
    if (name == "dimacs")
        return GraphFormat::dimacs;
    throw std::invalid_argument("unknown format '" + name + "' (use edge-list or dimacs)");
}

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format)
{
    return modk::parse_graph(slurp(path), parse_format(format));
}

void emit(const std::string& output, const std::string& text)
{
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out)
        throw std::invalid_argument("cannot write '" + output + "'");
    out << text;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mod-k edge colouring toolkit"};
    app.require_subcommand(1);

    std::string format = "edge-list";
    std::string output;
    int k = 2;
    std::uint64_t seed = 1;
    long long budget = 200000;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    std::string gen_family = "gnp";
    int gen_size = 10;
    double gen_p = 0.3;
    gen->add_option("--family", gen_family, "star | complete | cycle | tripartite | gnp");
    gen->add_option("--n", gen_size, "family size parameter");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--seed", seed, "generator seed (gnp)");
    gen->add_option("--format", format, "edge-list | dimacs");
    gen->add_option("--output", output, "output file (default stdout)");

    // colour
    auto* colour = app.add_subcommand("colour", "run the full colouring pipeline");
    std::string colour_input = "-";
    std::optional<int> colour_a;
    bool colour_seeded = false;
    colour->add_option("--input", colour_input, "graph file or - for stdin");
    colour->add_option("--k", k, "modulus (>= 2 for the full pipeline)");
    colour->add_option("--budget", budget, "node budget per divisible search");
    colour->add_option("--a", colour_a, "override the a parameter of the palette");
    colour->add_option("--format", format, "edge-list | dimacs");
    colour->add_option("--output", output, "output file (default stdout)");
    colour->add_flag("--record-seed", colour_seeded, "copy --seed into the output JSON");
    colour->add_option("--seed", seed, "seed to record");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a colouring JSON against a graph");
    std::string verify_input = "-";
    std::string verify_colouring;
    std::optional<int> verify_k;
    verify_cmd->add_option("--input", verify_input, "graph file or - for stdin");
    verify_cmd->add_option("--colouring", verify_colouring, "colouring JSON file")->required();
    verify_cmd->add_option("--k", verify_k, "override the modulus stored in the JSON");
    verify_cmd->add_option("--format", format, "edge-list | dimacs");
    verify_cmd->add_option("--output", output, "output file (default stdout)");

    // exact
    auto* exact = app.add_subcommand("exact", "exhaustive minimum colour count (small graphs)");
    std::string exact_input = "-";
    int exact_max = 12;
    exact->add_option("--input", exact_input, "graph file or - for stdin");
    exact->add_option("--k", k, "modulus");
    exact->add_option("--max-colours", exact_max, "largest palette to try");
    exact->add_option("--budget", budget, "search node budget");
    exact->add_option("--format", format, "edge-list | dimacs");
    exact->add_option("--output", output, "output file (default stdout)");

    // divisible
    auto* divisible = app.add_subcommand("divisible", "search for a k-divisible subgraph");
    std::string div_input = "-";
    bool via_regular = false;
    divisible->add_option("--input", div_input, "graph file or - for stdin");
    divisible->add_option("--k", k, "modulus");
    divisible->add_option("--budget", budget, "search node budget");
    divisible->add_flag("--via-regular", via_regular, "use the split/regular-subgraph route");
    divisible->add_option("--format", format, "edge-list | dimacs");
    divisible->add_option("--output", output, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "run a grid of pipeline instances");
    std::vector<std::string> bench_families{"gnp"};
    std::vector<int> bench_sizes{20};
    std::vector<int> bench_ks{2, 3};
    std::vector<std::uint64_t> bench_seeds{1};
    double bench_p = 0.3;
    int bench_threads = 1;
    std::string bench_csv_path, bench_json_path;
    bench->add_option("--families", bench_families, "families to run")->delimiter(',');
    bench->add_option("--sizes", bench_sizes, "size parameters")->delimiter(',');
    bench->add_option("--ks", bench_ks, "moduli")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seeds")->delimiter(',');
    bench->add_option("--p", bench_p, "edge probability for gnp");
    bench->add_option("--budget", budget, "node budget per divisible search");
    bench->add_option("--threads", bench_threads, "worker threads (0 = all cores)");
    bench->add_option("--csv", bench_csv_path, "write the CSV report here");
    bench->add_option("--json", bench_json_path, "write the JSON report here");
    bench->add_option("--output", output, "stdout target when no file given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const Graph g = modk::generate(gen_family, gen_size, gen_p, seed);
            std::ostringstream header;
            header << "# " << gen_family << " n=" << gen_size;
            if (gen_family == "gnp")
                header << " p=" << gen_p << " seed=" << seed;
            header << "\n";
            if (parse_format(format) == GraphFormat::edge_list)
                emit(output, header.str() + modk::serialize_edge_list(g));
            else
                emit(output, modk::serialize_dimacs(g));
        } else if (colour->parsed()) {
            const Graph g = load_graph(colour_input, format);
            const auto run = modk::colour_graph(g, k, budget, colour_a);
            std::optional<std::uint64_t> recorded;
            if (colour_seeded)
                recorded = seed;
            emit(output, dump(modk::colouring_to_json(g, run.colouring, k, recorded,
                                                      &run.certificate)));
        } else if (verify_cmd->parsed()) {
            const Graph g = load_graph(verify_input, format);
            const json j = json::parse(slurp(verify_colouring));
            int json_k = 0;
            const auto colouring = modk::colouring_from_json(j, g, &json_k);
            const int use_k = verify_k.value_or(json_k);
            const auto violations = modk::verify(g, colouring, use_k);
            emit(output, dump(modk::violations_to_json(g, violations)));
        } else if (exact->parsed()) {
            const Graph g = load_graph(exact_input, format);
            const auto result = modk::exact_chi(g, k, exact_max, budget);
            emit(output, dump(modk::exact_to_json(g, result)));
        } else if (divisible->parsed()) {
            const Graph g = load_graph(div_input, format);
            const auto outcome = via_regular ? modk::find_divisible_via_regular(g, k, budget)
                                             : modk::find_divisible(g, k, budget);
            emit(output, dump(modk::divisible_to_json(g, outcome)));
        } else if (bench->parsed()) {
            modk::BenchConfig config;
            config.families = bench_families;
            config.sizes = bench_sizes;
            config.k_values = bench_ks;
            config.seeds = bench_seeds;
            config.gnp_p = bench_p;
            config.divisible_budget = budget;
            config.threads = bench_threads == 0 ? modk::hardware_threads() : bench_threads;
            const auto rows = modk::run_bench(config);
            const std::string csv = modk::bench_csv(rows);
            const std::string js = dump(modk::bench_json(rows));
            if (!bench_csv_path.empty())
                emit(bench_csv_path, csv);
            if (!bench_json_path.empty())
                emit(bench_json_path, js);
            if (bench_csv_path.empty() && bench_json_path.empty())
                emit(output, csv);
        }
    } catch (const modk::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
