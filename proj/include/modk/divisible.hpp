#ifndef MODK_DIVISIBLE_HPP
#define MODK_DIVISIBLE_HPP

#include "modk/graph.hpp"

#include <vector>

namespace modk {

/// Smallest prime >= k.
int next_prime(int k);

/// Edge ceiling for n-vertex graphs with no non-empty k-divisible subgraph:
/// (q(3k/2)-1)*n for even k, (q(k)-1)*n for odd k.
long long density_bound(int k, int n);

enum class DivisibleStatus { found, certified_absent, budget_exhausted };

struct DivisibleOutcome {
    DivisibleStatus status = DivisibleStatus::budget_exhausted;
    EdgeList witness; // non-empty edge set with all support degrees ≡ 0 (mod k)
    long long nodes_explored = 0;
};

/// Exact search for a non-empty k-divisible subgraph. k = 2 reduces to
/// cycle detection and is total regardless of budget; a forest is
/// certified absent for every k. Otherwise: backtracking over the edges of
/// the k-core with include-before-exclude order and residual-degree
/// pruning, so the first witness is the canonical (greedy-inclusion) one.
DivisibleOutcome find_divisible(const Graph& g, int k, long long budget);

/// Vertex-splitting of a graph whose degrees are positive multiples of q:
/// a vertex of degree l*q becomes l vertices of degree q, its edges grouped
/// by ascending neighbour id. forward maps split ids to original ids.
struct SplitMap {
    std::vector<int> forward;
    Graph split_graph; // q-regular, same edge count as the input
};

SplitMap split_to_regular(const Graph& g, int q);

struct RegularSearchResult {
    bool found = false;
    EdgeList witness; // support induces a k-regular subgraph
    long long nodes_explored = 0;
    bool search_exhausted = false; // completed without hitting the budget
};

/// Budgeted exact search for an edge set whose support induces a k-regular
/// subgraph of a regular graph. Rejects non-regular inputs.
RegularSearchResult find_regular_subgraph(const Graph& g, int k, long long budget);

/// Constructive route to a k-divisible subgraph: find a q-divisible
/// subgraph for the parity-dependent prime q, split it to a q-regular
/// graph, extract a k-regular subgraph, and merge back. Falls back to the
/// direct search when no q-divisible subgraph exists.
DivisibleOutcome find_divisible_via_regular(const Graph& g, int k, long long budget);

struct PrimeGapRow {
    int k = 0;
    int q = 0;
    bool within_bound = false; // q <= k + k^0.6
};

/// Observed prime gaps for reporting; the bound is asymptotic, so misses at
/// small k are recorded rather than treated as errors.
std::vector<PrimeGapRow> prime_gap_report(int k_cap);

} // namespace modk

#endif
