#ifndef MODK_GRAPH_HPP
#define MODK_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modk {

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b); // rejects self-loops

using EdgeList = std::vector<Edge>;

/// Sorted list of vertices with non-zero degree in `edges`.
std::vector<int> edge_support(const EdgeList& edges);

/// Simple undirected graph over dense vertex ids 0..n-1. Adjacency lists
/// are kept sorted; parallel edges collapse and self-loops are rejected,
/// so a Graph is simple by construction. Treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;
    void add_edge(int u, int v);

    /// All edges, sorted by (u, v).
    EdgeList edges() const;

    const std::string& label(int v) const;
    void set_label(int v, const std::string& label);
    std::optional<int> vertex_by_label(const std::string& label) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    std::map<std::string, int> label_index_;
};

struct DegeneracyOrder {
    std::vector<int> order; // processing order: each vertex has few earlier neighbours
    int degeneracy = 0;     // maximum back-degree along `order`
};

/// Minimum-degree peeling (ties broken by smallest id), reversed. The
/// resulting order realizes the graph's exact degeneracy.
DegeneracyOrder degeneracy_order(const Graph& g);

// -- parsing / serialization ------------------------------------------------

enum class GraphFormat { edge_list, dimacs };

/// edge_list: one "u v" pair of whitespace-separated labels per line,
/// '#' starts a comment. dimacs: "c" comments, "p edge n m", "e u v".
/// Duplicate edges collapse; self-loops and malformed lines are rejected
/// with their line number.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

/// One "label_u label_v" line per edge, sorted by vertex id. Byte-deterministic.
std::string serialize_edge_list(const Graph& g);
std::string serialize_dimacs(const Graph& g);

// -- generators ---------------------------------------------------------------

Graph make_star(int leaf_count);                       // K_{1,m}
Graph make_complete(int n);                            // K_n
Graph make_cycle(int n);                               // C_n, n >= 3
Graph make_complete_tripartite(int k);                 // K_{1,k,k}
Graph make_gnp(int n, double p, std::uint64_t seed);   // Erdos-Renyi, reproducible

/// Dispatch by family name: star | complete | cycle | tripartite | gnp.
Graph generate(const std::string& family, int size, double p, std::uint64_t seed);

// -- helpers used across modules ---------------------------------------------

/// Copy of g with the given edges removed (same vertex set and labels).
Graph remove_edges(const Graph& g, const EdgeList& removed);

/// Subgraph induced on `vertices`; fills to_original with the dense-id map.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* to_original = nullptr);

/// Graph formed by exactly `edges`, on their support; fills the id map back to g.
Graph subgraph_from_edges(const Graph& g, const EdgeList& edges,
                          std::vector<int>* to_original = nullptr);

bool is_forest(const Graph& g);

} // namespace modk

#endif
