#ifndef MODK_STAR_COVER_HPP
#define MODK_STAR_COVER_HPP

#include <map>
#include <utility>
#include <vector>

namespace modk {

/// Bipartite availability between a left side (colour centres) and a right
/// side (targets), stored as left -> sorted right ids.
struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> left_adj;
};

/// Matching covering every right vertex, via alternating-path augmentation.
/// Preconditions (rejected with the offending vertex otherwise): every left
/// degree <= k and every right degree >= k; these force Hall's condition.
std::vector<std::pair<int, int>> hall_matching(const BipartiteGraph& bip, int k);

enum class StarKind { zero_k, one_k };

/// Star assigning a set of targets to one colour centre. zero_k stars have
/// a positive multiple of k leaves and a centre in A; one_k stars have
/// leaf count ≡ 1 (mod k) and a centre in B.
struct Star {
    int centre = 0;
    std::vector<int> leaves;
    StarKind kind = StarKind::one_k;
};

/// Covering instance: colour centres A (already present at the vertex being
/// processed) and B (fresh colours), targets X, and which centres each
/// target can still take. Feasible instances satisfy |A| <= d+1,
/// |A|+|B| = 2d+k+a+ceil(d/a)+1 and availability degree >= |A|+|B|-d per
/// target; the tightness generator deliberately builds infeasible ones.
struct StarCoverInstance {
    std::vector<int> a_centres; // sorted
    std::vector<int> b_centres; // sorted, disjoint from a_centres
    std::vector<int> targets;   // sorted
    std::map<int, std::vector<int>> availability; // centre -> sorted targets
    int k = 2;
    int d = 1;
    int a = 1;
};

/// 2d + k + a + ceil(d/a) + 1 (the required palette size for feasibility).
int star_cover_palette(int d, int k, int a);

bool is_feasible_instance(const StarCoverInstance& inst);

/// Step bounds recorded while covering; each is also asserted in-run.
struct CoverTrace {
    int uncovered_after_phase1 = 0; // |X'|, satisfies a*|X'| <= k*(d+a)
    int phase2_star_count = 0;      // t', satisfies a*(t'-1) <= d
    int remaining_b_centres = 0;    // |B''| >= d + k
};

/// Covers the targets by vertex-disjoint stars in three phases: carve
/// maximum zero_k stars centred in A and non-trivial one_k stars centred in
/// a (d+a)-sized extension A' of A; carve non-trivial one_k stars centred
/// outside A'; match every remaining target to its own centre as a trivial
/// one_k star. Centres are processed in ascending id, leaves taken in
/// ascending id. Rejects infeasible instances.
std::vector<Star> cover_with_stars(const StarCoverInstance& inst, CoverTrace* trace = nullptr);

/// Instance with |A| = d+1 and |A|+|B| = 2d+k-1 in which every target sees
/// exactly A and the last k-2 centres of B. For x_count ≡ k-1 (mod k) no
/// star covering exists; refute_covering confirms that exhaustively.
StarCoverInstance make_tightness_instance(int k, int d, int x_count);

enum class RefuteStatus { no_covering_exists, covering_found, budget_exhausted };

struct RefuteResult {
    RefuteStatus status = RefuteStatus::budget_exhausted;
    std::vector<Star> covering; // when found
    long long nodes_explored = 0;
};

/// Exhaustive search over all partitions of the targets into valid stars.
RefuteResult refute_covering(const StarCoverInstance& inst, long long budget);

} // namespace modk

#endif
