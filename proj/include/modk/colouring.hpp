#ifndef MODK_COLOURING_HPP
#define MODK_COLOURING_HPP

#include "modk/graph.hpp"

#include <compare>
#include <map>
#include <optional>

namespace modk {

/// Edge colouring over a palette 1..palette_size. A colouring is valid for
/// modulus k when, inside every colour class, each incident vertex has
/// degree congruent to 1 mod k.
struct EdgeColouring {
    int palette_size = 0;
    std::map<Edge, int> assignment;

    /// Number of distinct colours actually appearing.
    int colours_used() const;
};

/// Witness that (colour, vertex) breaks the 1-mod-k degree rule.
struct Violation {
    int colour = 0;
    int vertex = 0;
    int degree_in_class = 0;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Returns every violation, sorted by (colour, vertex); empty means valid.
/// Rejects colourings whose edge set differs from E(g).
std::vector<Violation> verify(const Graph& g, const EdgeColouring& c, int k);

/// True iff every vertex touched by `edges` has degree ≡ ell (mod k) within
/// `edges`. ell = 0 is the k-divisibility predicate (on non-empty supports).
bool is_ell_k_graph(const Graph& g, const EdgeList& edges, int ell, int k);

enum class ExactStatus { exact, lower_bound_only, budget_exhausted };

struct ExactChiResult {
    ExactStatus status = ExactStatus::budget_exhausted;
    // exact: the minimum colour count; lower_bound_only: colourings with
    // fewer than `value` colours were exhaustively refuted.
    int value = 0;
    std::optional<EdgeColouring> witness; // present when exact
    long long nodes_explored = 0;
};

/// Exhaustive backtracking for the minimum valid colour count, with
/// colour classes canonicalized by first use and residual-degree pruning.
/// Intended for small graphs (roughly <= 16 edges).
ExactChiResult exact_chi(const Graph& g, int k, int max_colours, long long node_budget);

} // namespace modk

#endif
