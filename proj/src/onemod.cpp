#include "modk/onemod.hpp"
#include "modk/colouring.hpp"
#include "modk/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modk {

namespace {

struct GrowState {
    std::set<Edge> edges;
    std::set<int> support;

    bool in_h(const Edge& e) const { return edges.count(e) > 0; }
    bool on_support(int v) const { return support.count(v) > 0; }

    void add(const Edge& e)
    {
        edges.insert(e);
        support.insert(e.u);
        support.insert(e.v);
    }
};

// residual graph induced on the support, with the dense-id map back
Graph residual_on_support(const Graph& g, const GrowState& st, std::vector<int>* back)
{
    std::vector<int> verts(st.support.begin(), st.support.end());
    std::map<int, int> dense;
    for (std::size_t i = 0; i < verts.size(); ++i)
        dense[verts[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        sub.set_label(static_cast<int>(i), g.label(verts[i]));
    for (int u : verts)
        for (int w : g.neighbours(u))
            if (u < w && st.on_support(w) && !st.in_h(Edge{u, w}))
                sub.add_edge(dense[u], dense[w]);
    *back = verts;
    return sub;
}

} // namespace

OnemodSubgraph grow_onemod(const Graph& g, int k, long long divisible_budget)
{
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");

    if (k == 1) {
        // every degree is ≡ 1 (mod 1); the whole edge set is the fixpoint
        OnemodSubgraph h;
        h.edges = g.edges();
        h.support = edge_support(h.edges);
        h.status = MaximalityStatus::certified_maximal;
        return h;
    }

    GrowState st;
    const EdgeList all_edges = g.edges();
    MaximalityStatus status = MaximalityStatus::best_effort;

    auto assert_one_mod = [&]() {
        EdgeList current(st.edges.begin(), st.edges.end());
        internal_check(is_ell_k_graph(g, current, 1, k),
                       "growth broke the 1 (mod k) degree property");
    };

    for (;;) {
        // R1: smallest residual edge with both endpoints off the support
        bool applied = false;
        for (const auto& e : all_edges) {
            if (st.in_h(e) || st.on_support(e.u) || st.on_support(e.v))
                continue;
            st.add(e);
            assert_one_mod();
            applied = true;
            break;
        }
        if (applied)
            continue;

        // R2: a support vertex with >= k residual edges to non-support
        // vertices takes exactly k of them, smallest neighbour ids first
        for (int v : st.support) {
            std::vector<int> fan;
            for (int w : g.neighbours(v))
                if (!st.on_support(w) && !st.in_h(make_edge(v, w)))
                    fan.push_back(w);
            if (static_cast<int>(fan.size()) < k)
                continue;
            for (int i = 0; i < k; ++i)
                st.add(make_edge(v, fan[i]));
            assert_one_mod();
            applied = true;
            break;
        }
        if (applied)
            continue;

        // R3: a k-divisible subgraph of the residual inside the support
        std::vector<int> back;
        const Graph inside = residual_on_support(g, st, &back);
        const DivisibleOutcome found = find_divisible(inside, k, divisible_budget);
        if (found.status == DivisibleStatus::found) {
            for (const auto& e : found.witness)
                st.add(make_edge(back[e.u], back[e.v]));
            assert_one_mod();
            continue;
        }
        status = (found.status == DivisibleStatus::certified_absent)
                     ? MaximalityStatus::certified_maximal
                     : MaximalityStatus::best_effort;
        break;
    }

    OnemodSubgraph h;
    h.edges.assign(st.edges.begin(), st.edges.end());
    h.support.assign(st.support.begin(), st.support.end());
    h.status = status;
    return h;
}

MaximalityReport check_maximality_properties(const Graph& g, const OnemodSubgraph& h,
                                             int k, long long divisible_budget)
{
    if (k < 2)
        throw std::invalid_argument("modulus must be >= 2");
    for (const auto& e : h.edges)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("subgraph edge not present in the graph");

    const std::set<Edge> h_edges(h.edges.begin(), h.edges.end());
    const std::set<int> support(h.support.begin(), h.support.end());

    MaximalityReport report;
    report.outside_independent = true;
    for (const auto& e : g.edges()) {
        if (h_edges.count(e))
            continue;
        if (!support.count(e.u) && !support.count(e.v)) {
            report.outside_independent = false;
            break;
        }
    }

    report.cross_degree_ok = true;
    for (int v : h.support) {
        int cross = 0;
        for (int w : g.neighbours(v))
            if (!support.count(w) && !h_edges.count(make_edge(v, w)))
                ++cross;
        if (cross > k - 1) {
            report.cross_degree_ok = false;
            break;
        }
    }

    GrowState st;
    st.edges = h_edges;
    st.support = support;
    std::vector<int> back;
    const Graph inside = residual_on_support(g, st, &back);
    report.inside_divisible = find_divisible(inside, k, divisible_budget);
    return report;
}

} // namespace modk
