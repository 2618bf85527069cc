#include "modk/degenerate.hpp"
#include "modk/errors.hpp"
#include "modk/star_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modk {

int palette_size(int d, int k, int a)
{
    return star_cover_palette(d, k, a);
}

bool step_invariant_check(const PaletteState& state, const Graph& g,
                          const EdgeColouring& partial, int k, int step)
{
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");

    std::set<int> unprocessed;
    for (const auto& [v, used] : state.unprocessed_used)
        unprocessed.insert(v);
    if (g.vertex_count() - static_cast<int>(unprocessed.size()) != step)
        return false;

    // coloured edges must be exactly those with a processed endpoint
    for (const auto& e : g.edges()) {
        const bool touches_processed = !unprocessed.count(e.u) || !unprocessed.count(e.v);
        if (touches_processed != (partial.assignment.count(e) > 0))
            return false;
    }
    for (const auto& [e, colour] : partial.assignment)
        if (!g.has_edge(e.u, e.v) || colour < 1 || colour > state.palette_size)
            return false;

    // processed vertices: every open colour class has degree 1 mod k
    std::map<std::pair<int, int>, int> class_degree;
    for (const auto& [e, colour] : partial.assignment) {
        ++class_degree[{e.u, colour}];
        ++class_degree[{e.v, colour}];
    }
    for (const auto& [key, deg] : class_degree)
        if (!unprocessed.count(key.first) && deg % k != 1 % k)
            return false;

    // unprocessed vertices: distinct colours, consistent with the state
    for (const auto& [v, used] : state.unprocessed_used) {
        std::set<int> seen;
        int coloured_edges = 0;
        for (int w : g.neighbours(v)) {
            auto it = partial.assignment.find(make_edge(v, w));
            if (it == partial.assignment.end())
                continue;
            ++coloured_edges;
            seen.insert(it->second);
        }
        if (static_cast<int>(seen.size()) != coloured_edges)
            return false; // repeated colour at an unprocessed vertex
        if (seen != used)
            return false;
    }
    return true;
}

EdgeColouring colour_degenerate(const Graph& g, int k, std::optional<int> a_opt,
                                const StepObserver& observer)
{
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");
    if (a_opt && *a_opt < 1)
        throw std::invalid_argument("a must be positive");

    if (k == 1) {
        // all conditions are vacuous mod 1
        EdgeColouring c;
        c.palette_size = 1;
        for (const auto& e : g.edges())
            c.assignment[e] = 1;
        return c;
    }

    const DegeneracyOrder dord = degeneracy_order(g);
    const int d = std::max(dord.degeneracy - 1, 0);
    const int a = a_opt.value_or(std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d))))));
    const int palette = palette_size(d, k, a);

    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < dord.order.size(); ++i)
        position[dord.order[i]] = static_cast<int>(i);

    EdgeColouring col;
    col.palette_size = palette;

    PaletteState state;
    state.palette_size = palette;
    for (int v : dord.order)
        state.unprocessed_used[v] = {};

    for (std::size_t i = 0; i < dord.order.size(); ++i) {
        const int v = dord.order[i];
        state.unprocessed_used.erase(v);

        // colours already incident to v, read off the actual assignment
        std::set<int> a_colours;
        std::vector<int> later;
        for (int w : g.neighbours(v)) {
            auto it = col.assignment.find(make_edge(v, w));
            if (it != col.assignment.end())
                a_colours.insert(it->second);
            else if (position[w] > static_cast<int>(i))
                later.push_back(w);
        }
        std::sort(later.begin(), later.end());

        if (!later.empty()) {
            StarCoverInstance inst;
            inst.k = k;
            inst.d = d;
            inst.a = a;
            inst.a_centres.assign(a_colours.begin(), a_colours.end());
            for (int c = 1; c <= palette; ++c)
                if (!a_colours.count(c))
                    inst.b_centres.push_back(c);
            inst.targets = later;
            for (int c = 1; c <= palette; ++c) {
                std::vector<int> avail;
                for (int x : later)
                    if (!state.unprocessed_used.at(x).count(c))
                        avail.push_back(x);
                inst.availability[c] = std::move(avail);
            }

            std::vector<Star> stars;
            try {
                stars = cover_with_stars(inst);
            } catch (const std::invalid_argument& e) {
                // degeneracy guarantees feasibility; getting here is a defect
                throw internal_error(std::string("infeasible covering instance at step ") +
                                     std::to_string(i + 1) + ": " + e.what());
            }
            for (const auto& s : stars)
                for (int x : s.leaves) {
                    col.assignment[make_edge(v, x)] = s.centre;
                    state.unprocessed_used.at(x).insert(s.centre);
                }
        }

        if (observer)
            observer(state, col, static_cast<int>(i) + 1);
    }

    internal_check(verify(g, col, k).empty(), "degenerate colouring failed verification");
    internal_check(col.colours_used() <= palette, "palette overrun");
    return col;
}

} // namespace modk
