#ifndef MODK_ONEMOD_HPP
#define MODK_ONEMOD_HPP

#include "modk/divisible.hpp"
#include "modk/graph.hpp"

#include <vector>

namespace modk {

enum class MaximalityStatus { certified_maximal, best_effort };

/// Subgraph in which every support vertex has degree ≡ 1 (mod k), grown to
/// a fixpoint of the three augmentation rules. certified_maximal means the
/// final divisible check on the residual inside the support was exhaustive.
struct OnemodSubgraph {
    EdgeList edges;
    std::vector<int> support; // sorted
    MaximalityStatus status = MaximalityStatus::best_effort;
};

/// Grows an edge set from empty, applying in round-robin order until no
/// rule fires: (R1) add the smallest residual edge joining two vertices
/// outside the support; (R2) if a support vertex keeps >= k residual edges
/// to non-support vertices, add exactly k of them (smallest neighbour ids);
/// (R3) add any k-divisible subgraph found in the residual induced on the
/// support. The 1 (mod k) property is asserted after every application.
OnemodSubgraph grow_onemod(const Graph& g, int k, long long divisible_budget);

/// The three structural consequences of maximality, evaluated directly on
/// the residual graph, independently of how `h` was built.
struct MaximalityReport {
    bool outside_independent = false; // no residual edge avoids the support
    bool cross_degree_ok = false;     // every support vertex has <= k-1 residual
                                      // neighbours outside the support
    DivisibleOutcome inside_divisible; // divisible search on residual[support]
};

MaximalityReport check_maximality_properties(const Graph& g, const OnemodSubgraph& h,
                                             int k, long long divisible_budget);

} // namespace modk

#endif
