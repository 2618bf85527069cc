#include "modk/graph.hpp"
#include "modk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace modk {

Edge make_edge(int a, int b)
{
    if (a == b)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::vector<int> edge_support(const EdgeList& edges)
{
    std::vector<int> support;
    support.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        support.push_back(e.u);
        support.push_back(e.v);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

Graph::Graph(int vertex_count)
    : n_(vertex_count), adj_(vertex_count), labels_(vertex_count)
{
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    for (int v = 0; v < n_; ++v) {
        labels_[v] = std::to_string(v);
        label_index_.emplace(labels_[v], v);
    }
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbours(int v) const
{
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        return; // duplicate
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

EdgeList Graph::edges() const
{
    EdgeList out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.push_back(Edge{u, v});
    return out;
}

const std::string& Graph::label(int v) const
{
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(int v, const std::string& label)
{
    check_vertex(v);
    label_index_.erase(labels_[v]);
    labels_[v] = label;
    label_index_[label] = v;
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const
{
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

DegeneracyOrder degeneracyOrderImpl(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(n), removal;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    removal.reserve(n);

    int degeneracy = 0;
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick]))
                pick = v;
        degeneracy = std::max(degeneracy, deg[pick]);
        removed[pick] = true;
        removal.push_back(pick);
        for (int w : g.neighbours(pick))
            if (!removed[w])
                --deg[w];
    }

    std::reverse(removal.begin(), removal.end());
    return DegeneracyOrder{std::move(removal), degeneracy};
}

DegeneracyOrder degeneracy_order(const Graph& g)
{
    return degeneracyOrderImpl(g);
}

// -- parsing ------------------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what)
{
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

Graph parse_edge_list(std::istream& in)
{
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end())
            return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(tok);
        index.emplace(tok, id);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue; // blank or comment-only
        if (!(ls >> b))
            parse_fail(lineno, "expected two labels");
        if (ls >> extra)
            parse_fail(lineno, "trailing token '" + extra + "'");
        if (a == b)
            parse_fail(lineno, "self-loop on '" + a + "'");
        const int ia = intern(a); // intern in text order
        const int ib = intern(b);
        edges.emplace_back(ia, ib);
    }

    Graph g(static_cast<int>(labels.size()));
    for (int v = 0; v < g.vertex_count(); ++v)
        g.set_label(v, labels[v]);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "c")
            continue;
        if (kind == "p") {
            std::string tag;
            int n = -1, m = -1;
            if (!(ls >> tag >> n >> m) || (tag != "edge" && tag != "edges" && tag != "col") || n < 0)
                parse_fail(lineno, "malformed problem line");
            if (g)
                parse_fail(lineno, "duplicate problem line");
            g.emplace(n);
            for (int v = 0; v < n; ++v)
                g->set_label(v, std::to_string(v + 1));
        } else if (kind == "e") {
            if (!g)
                parse_fail(lineno, "edge before problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                parse_fail(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > g->vertex_count() || v > g->vertex_count())
                parse_fail(lineno, "vertex out of declared range");
            if (u == v)
                parse_fail(lineno, "self-loop on vertex " + std::to_string(u));
            g->add_edge(u - 1, v - 1);
        } else {
            parse_fail(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!g)
        throw std::invalid_argument("missing problem line");
    return *std::move(g);
}

} // namespace

Graph parse_graph(std::istream& in, GraphFormat format)
{
    return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format)
{
    std::istringstream in(text);
    return parse_graph(in, format);
}

std::string serialize_edge_list(const Graph& g)
{
    std::ostringstream out;
    for (const auto& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    return out.str();
}

std::string serialize_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

// -- generators ---------------------------------------------------------------

Graph make_star(int leaf_count)
{
    if (leaf_count < 1)
        throw std::invalid_argument("star needs at least one leaf");
    Graph g(leaf_count + 1);
    for (int leaf = 1; leaf <= leaf_count; ++leaf)
        g.add_edge(0, leaf);
    return g;
}

Graph make_complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs at least one vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_complete_tripartite(int k)
{
    if (k < 1)
        throw std::invalid_argument("tripartite parameter must be positive");
    // parts {0}, {1..k}, {k+1..2k}
    Graph g(2 * k + 1);
    for (int b = 1; b <= k; ++b) {
        g.add_edge(0, b);
        g.add_edge(0, k + b);
    }
    for (int b = 1; b <= k; ++b)
        for (int c = k + 1; c <= 2 * k; ++c)
            g.add_edge(b, c);
    return g;
}

Graph make_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("gnp needs n >= 0 and p in [0,1]");
    Graph g(n);
    // mt19937_64 output mapped to [0,1) via the top 53 bits; this is fully
    // pinned by the standard, so a seed reproduces the same graph anywhere.
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (roll < p)
                g.add_edge(u, v);
        }
    return g;
}

Graph generate(const std::string& family, int size, double p, std::uint64_t seed)
{
    if (family == "star")
        return make_star(size);
    if (family == "complete")
        return make_complete(size);
    if (family == "cycle")
        return make_cycle(size);
    if (family == "tripartite")
        return make_complete_tripartite(size);
    if (family == "gnp")
        return make_gnp(size, p, seed);
    throw std::invalid_argument("unknown family '" + family + "'");
}

// -- helpers ------------------------------------------------------------------

Graph remove_edges(const Graph& g, const EdgeList& removed)
{
    EdgeList sorted = removed;
    std::sort(sorted.begin(), sorted.end());
    Graph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        out.set_label(v, g.label(v));
    for (const auto& e : g.edges())
        if (!std::binary_search(sorted.begin(), sorted.end(), e))
            out.add_edge(e.u, e.v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* to_original)
{
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::map<int, int> dense;
    for (std::size_t i = 0; i < verts.size(); ++i)
        dense[verts[i]] = static_cast<int>(i);

    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        out.set_label(static_cast<int>(i), g.label(verts[i]));
    for (int u : verts)
        for (int v : g.neighbours(u))
            if (u < v && dense.count(v))
                out.add_edge(dense[u], dense[v]);
    if (to_original)
        *to_original = verts;
    return out;
}

Graph subgraph_from_edges(const Graph& g, const EdgeList& edges,
                          std::vector<int>* to_original)
{
    std::vector<int> support = edge_support(edges);
    std::map<int, int> dense;
    for (std::size_t i = 0; i < support.size(); ++i)
        dense[support[i]] = static_cast<int>(i);

    Graph out(static_cast<int>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i)
        out.set_label(static_cast<int>(i), g.label(support[i]));
    for (const auto& e : edges) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("edge not present in host graph");
        out.add_edge(dense.at(e.u), dense.at(e.v));
    }
    if (to_original)
        *to_original = support;
    return out;
}

bool is_forest(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2)
            continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (w == parent[v])
                    continue;
                if (parent[w] != -2)
                    return false; // back edge
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

} // namespace modk
