#include "modk/colouring.hpp"
#include "modk/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modk {

int EdgeColouring::colours_used() const
{
    std::set<int> seen;
    for (const auto& [edge, colour] : assignment)
        seen.insert(colour);
    return static_cast<int>(seen.size());
}

std::vector<Violation> verify(const Graph& g, const EdgeColouring& c, int k)
{
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");
    for (const auto& [edge, colour] : c.assignment) {
        if (!g.has_edge(edge.u, edge.v))
            throw std::invalid_argument("coloured edge (" + g.label(edge.u) + "," +
                                        g.label(edge.v) + ") not in graph");
        if (colour < 1 || colour > c.palette_size)
            throw std::invalid_argument("colour " + std::to_string(colour) + " outside palette");
    }
    if (c.assignment.size() != g.edge_count())
        throw std::invalid_argument("colouring misses some edges of the graph");

    // degree of each vertex inside each colour class
    std::map<std::pair<int, int>, int> class_degree; // (colour, vertex) -> degree
    for (const auto& [edge, colour] : c.assignment) {
        ++class_degree[{colour, edge.u}];
        ++class_degree[{colour, edge.v}];
    }

    std::vector<Violation> out;
    for (const auto& [key, deg] : class_degree)
        if (deg % k != 1 % k)
            out.push_back(Violation{key.first, key.second, deg});
    return out; // map iteration is already (colour, vertex)-sorted
}

bool is_ell_k_graph(const Graph& g, const EdgeList& edges, int ell, int k)
{
    if (k < 1 || ell < 0 || ell >= k)
        throw std::invalid_argument("need 0 <= ell < k");
    std::map<int, int> deg;
    std::set<Edge> seen;
    for (const auto& e : edges) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("edge subset contains an edge not in the graph");
        if (!seen.insert(e).second)
            continue;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (const auto& [v, d] : deg)
        if (d % k != ell)
            return false;
    return true;
}

namespace {

// Backtracking over edges in sorted order. A colour c+1 may be opened only
// once colours 1..c appear, which canonicalizes colourings up to class
// relabelling. Pruning: at each vertex, every open class with degree d != 1
// (mod k) still needs (1 - d mod k) mod k more edges there; the undecided
// edges at the vertex must cover the total outstanding need.
class ExactSearcher {
public:
    ExactSearcher(const Graph& g, int k, int palette_cap, long long budget)
        : k_(k), cap_(palette_cap), budget_(budget), edges_(g.edges()),
          rem_(g.vertex_count(), 0),
          deficit_(g.vertex_count(), 0),
          class_deg_(static_cast<std::size_t>(g.vertex_count()) * palette_cap, 0),
          colour_of_(edges_.size(), 0)
    {
        for (const auto& e : edges_) {
            ++rem_[e.u];
            ++rem_[e.v];
        }
    }

    bool run() { return dfs(0, 0); }

    bool budget_hit() const { return budget_hit_; }
    long long nodes() const { return nodes_; }

    EdgeColouring witness() const
    {
        EdgeColouring c;
        c.palette_size = cap_;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            c.assignment[edges_[i]] = colour_of_[i];
        return c;
    }

private:
    int need(int deg) const { return deg == 0 ? 0 : ((1 - deg) % k_ + k_) % k_; }

    int& cdeg(int v, int c) { return class_deg_[static_cast<std::size_t>(v) * cap_ + (c - 1)]; }

    void apply(int v, int c, int delta)
    {
        int& d = cdeg(v, c);
        deficit_[v] -= need(d);
        d += delta;
        deficit_[v] += need(d);
        rem_[v] -= delta;
    }

    bool dfs(std::size_t ei, int max_used)
    {
        if (ei == edges_.size())
            return true;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        const auto [u, v] = edges_[ei];
        const int top = std::min(cap_, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            apply(u, c, +1);
            apply(v, c, +1);
            colour_of_[ei] = c;
            if (deficit_[u] <= rem_[u] && deficit_[v] <= rem_[v] &&
                dfs(ei + 1, std::max(max_used, c)))
                return true;
            colour_of_[ei] = 0;
            apply(u, c, -1);
            apply(v, c, -1);
            if (budget_hit_)
                return false;
        }
        return false;
    }

    int k_, cap_;
    long long budget_;
    long long nodes_ = 0;
    bool budget_hit_ = false;
    EdgeList edges_;
    std::vector<int> rem_, deficit_;
    std::vector<int> class_deg_;
    std::vector<int> colour_of_;
};

} // namespace

ExactChiResult exact_chi(const Graph& g, int k, int max_colours, long long node_budget)
{
    if (max_colours < 1)
        throw std::invalid_argument("max_colours must be >= 1");
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");

    if (g.edge_count() == 0)
        return ExactChiResult{ExactStatus::exact, 0, EdgeColouring{}, 0};

    if (k == 1) {
        // Everything is congruent mod 1; one colour always works.
        EdgeColouring c;
        c.palette_size = 1;
        for (const auto& e : g.edges())
            c.assignment[e] = 1;
        return ExactChiResult{ExactStatus::exact, 1, std::move(c), 0};
    }

    long long spent = 0;
    for (int palette = 1; palette <= max_colours; ++palette) {
        ExactSearcher search(g, k, palette, node_budget - spent);
        const bool sat = search.run();
        spent += search.nodes();
        if (sat) {
            auto witness = search.witness();
            internal_check(verify(g, witness, k).empty(), "exact search produced an invalid witness");
            return ExactChiResult{ExactStatus::exact, palette, std::move(witness), spent};
        }
        if (search.budget_hit()) {
            if (palette == 1)
                return ExactChiResult{ExactStatus::budget_exhausted, 0, std::nullopt, spent};
            // palettes below `palette` are exhaustively refuted
            return ExactChiResult{ExactStatus::lower_bound_only, palette, std::nullopt, spent};
        }
    }
    return ExactChiResult{ExactStatus::lower_bound_only, max_colours + 1, std::nullopt, spent};
}

} // namespace modk
