#include "modk/star_cover.hpp"
#include "modk/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace modk {

namespace {

bool sorted_unique(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i])
            return false;
    return true;
}

void validate_structure(const StarCoverInstance& inst)
{
    // d = 0 arises for 1-degenerate inputs and every bound below degrades
    // gracefully to it; k and a stay positive.
    if (inst.k < 1 || inst.d < 0 || inst.a < 1)
        throw std::invalid_argument("need k >= 1, d >= 0, a >= 1");
    if (!sorted_unique(inst.a_centres) || !sorted_unique(inst.b_centres) ||
        !sorted_unique(inst.targets))
        throw std::invalid_argument("instance id lists must be sorted and duplicate-free");
    std::set<int> a_set(inst.a_centres.begin(), inst.a_centres.end());
    for (int c : inst.b_centres)
        if (a_set.count(c))
            throw std::invalid_argument("centre " + std::to_string(c) + " appears in both A and B");
    std::set<int> all(inst.a_centres.begin(), inst.a_centres.end());
    all.insert(inst.b_centres.begin(), inst.b_centres.end());
    std::set<int> target_set(inst.targets.begin(), inst.targets.end());
    for (const auto& [centre, xs] : inst.availability) {
        if (!all.count(centre))
            throw std::invalid_argument("availability keyed by unknown centre " + std::to_string(centre));
        if (!sorted_unique(xs))
            throw std::invalid_argument("availability lists must be sorted and duplicate-free");
        for (int x : xs)
            if (!target_set.count(x))
                throw std::invalid_argument("availability mentions unknown target " + std::to_string(x));
    }
}

std::vector<int> availability_of(const StarCoverInstance& inst, int centre)
{
    auto it = inst.availability.find(centre);
    return it == inst.availability.end() ? std::vector<int>{} : it->second;
}

} // namespace

int star_cover_palette(int d, int k, int a)
{
    if (k < 1 || d < 0 || a < 1)
        throw std::invalid_argument("need k >= 1, d >= 0, a >= 1");
    return 2 * d + k + a + (d + a - 1) / a + 1;
}

bool is_feasible_instance(const StarCoverInstance& inst)
{
    validate_structure(inst);
    const int palette = static_cast<int>(inst.a_centres.size() + inst.b_centres.size());
    if (static_cast<int>(inst.a_centres.size()) > inst.d + 1)
        return false;
    if (palette != star_cover_palette(inst.d, inst.k, inst.a))
        return false;
    std::map<int, int> target_degree;
    for (const auto& [centre, xs] : inst.availability)
        for (int x : xs)
            ++target_degree[x];
    for (int x : inst.targets)
        if (target_degree[x] < palette - inst.d)
            return false;
    return true;
}

std::vector<std::pair<int, int>> hall_matching(const BipartiteGraph& bip, int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    if (static_cast<int>(bip.left_adj.size()) != bip.left_count)
        throw std::invalid_argument("left adjacency size mismatch");

    std::vector<std::vector<int>> right_adj(bip.right_count);
    for (int l = 0; l < bip.left_count; ++l) {
        if (static_cast<int>(bip.left_adj[l].size()) > k)
            throw std::invalid_argument("left vertex " + std::to_string(l) +
                                        " has degree above " + std::to_string(k));
        for (int r : bip.left_adj[l]) {
            if (r < 0 || r >= bip.right_count)
                throw std::invalid_argument("right vertex id out of range");
            right_adj[r].push_back(l);
        }
    }
    for (int r = 0; r < bip.right_count; ++r) {
        std::sort(right_adj[r].begin(), right_adj[r].end());
        if (static_cast<int>(right_adj[r].size()) < k)
            throw std::invalid_argument("right vertex " + std::to_string(r) +
                                        " has degree below " + std::to_string(k));
    }

    std::vector<int> match_left(bip.left_count, -1), match_right(bip.right_count, -1);
    std::vector<bool> seen;
    std::function<bool(int)> augment = [&](int r) {
        for (int l : right_adj[r]) {
            if (seen[l])
                continue;
            seen[l] = true;
            if (match_left[l] == -1 || augment(match_left[l])) {
                match_left[l] = r;
                match_right[r] = l;
                return true;
            }
        }
        return false;
    };

    for (int r = 0; r < bip.right_count; ++r) {
        seen.assign(bip.left_count, false);
        // Hall's condition follows from the degree preconditions, so
        // augmentation cannot fail here.
        internal_check(augment(r), "matching failed despite degree preconditions");
    }

    std::vector<std::pair<int, int>> out;
    out.reserve(bip.right_count);
    for (int r = 0; r < bip.right_count; ++r)
        out.emplace_back(match_right[r], r);
    return out;
}

std::vector<Star> cover_with_stars(const StarCoverInstance& inst, CoverTrace* trace)
{
    validate_structure(inst);
    if (!is_feasible_instance(inst))
        throw std::invalid_argument("infeasible star-cover instance");

    const int k = inst.k, d = inst.d, a = inst.a;
    const std::set<int> a_set(inst.a_centres.begin(), inst.a_centres.end());

    // A' = A completed to size d+a with the smallest ids of B.
    std::vector<int> a_prime = inst.a_centres;
    for (int c : inst.b_centres) {
        if (static_cast<int>(a_prime.size()) >= d + a)
            break;
        a_prime.push_back(c);
    }
    std::sort(a_prime.begin(), a_prime.end());
    const std::set<int> a_prime_set(a_prime.begin(), a_prime.end());
    internal_check(static_cast<int>(a_prime.size()) == d + a, "A' completion fell short");

    std::set<int> covered;
    std::vector<Star> stars;

    auto uncovered_avail = [&](int centre) {
        std::vector<int> out;
        for (int x : availability_of(inst, centre))
            if (!covered.count(x))
                out.push_back(x);
        return out;
    };

    // Take all available uncovered leaves of the centre, truncated down to
    // the required residue class; zero_k stars need >= k leaves, one_k
    // carves here are the non-trivial ones (>= k+1 leaves).
    auto carve = [&](int centre, bool zero_kind) {
        auto pool = uncovered_avail(centre);
        const int m = static_cast<int>(pool.size());
        int t;
        if (zero_kind) {
            t = m - m % k;
            if (t < k)
                return false;
        } else {
            t = (m % k >= 1) ? m - m % k + 1 : m - k + 1;
            if (t < k + 1)
                return false;
        }
        Star s{centre, std::vector<int>(pool.begin(), pool.begin() + t),
               zero_kind ? StarKind::zero_k : StarKind::one_k};
        covered.insert(s.leaves.begin(), s.leaves.end());
        stars.push_back(std::move(s));
        return true;
    };

    // phase 1: zero_k stars centred in A, non-trivial one_k stars centred in A'\A
    bool changed = true;
    while (changed) {
        changed = false;
        for (int centre : a_prime)
            if (carve(centre, a_set.count(centre) > 0))
                changed = true;
    }
    for (int centre : a_prime) {
        const int m = static_cast<int>(uncovered_avail(centre).size());
        internal_check(m <= (a_set.count(centre) ? k - 1 : k), "phase 1 stopped early");
    }
    const int x_prime = static_cast<int>(inst.targets.size() - covered.size());
    internal_check(static_cast<long long>(a) * x_prime <= static_cast<long long>(k) * (d + a),
                   "phase 1 left too many targets uncovered");
    if (trace)
        trace->uncovered_after_phase1 = x_prime;

    // phase 2: non-trivial one_k stars centred in B' = (A u B) \ A'
    std::vector<int> b_prime;
    for (int c : inst.b_centres)
        if (!a_prime_set.count(c))
            b_prime.push_back(c);
    const std::size_t before = stars.size();
    changed = true;
    while (changed) {
        changed = false;
        for (int c : b_prime)
            if (carve(c, false))
                changed = true;
    }
    const int phase2 = static_cast<int>(stars.size() - before);
    internal_check(phase2 == 0 || static_cast<long long>(a) * (phase2 - 1) <= d,
                   "phase 2 emitted too many stars");
    for (int c : b_prime)
        internal_check(static_cast<int>(uncovered_avail(c).size()) <= k, "phase 2 stopped early");
    if (trace)
        trace->phase2_star_count = phase2;

    // phase 3: trivial one_k stars via a matching on the unused B' centres
    std::set<int> used_centres;
    for (const auto& s : stars)
        used_centres.insert(s.centre);
    std::vector<int> b_rest;
    for (int c : b_prime)
        if (!used_centres.count(c))
            b_rest.push_back(c);
    internal_check(static_cast<int>(b_rest.size()) >= d + k, "too few centres left for the matching");
    if (trace)
        trace->remaining_b_centres = static_cast<int>(b_rest.size());

    std::vector<int> rest_targets;
    for (int x : inst.targets)
        if (!covered.count(x))
            rest_targets.push_back(x);

    if (!rest_targets.empty()) {
        std::map<int, int> target_index;
        for (std::size_t i = 0; i < rest_targets.size(); ++i)
            target_index[rest_targets[i]] = static_cast<int>(i);
        BipartiteGraph bip;
        bip.left_count = static_cast<int>(b_rest.size());
        bip.right_count = static_cast<int>(rest_targets.size());
        bip.left_adj.resize(b_rest.size());
        for (std::size_t l = 0; l < b_rest.size(); ++l)
            for (int x : availability_of(inst, b_rest[l]))
                if (auto it = target_index.find(x); it != target_index.end())
                    bip.left_adj[l].push_back(it->second);
        std::vector<std::pair<int, int>> matching;
        try {
            matching = hall_matching(bip, k);
        } catch (const std::invalid_argument& e) {
            // the phase bounds guarantee the matching preconditions
            throw internal_error(std::string("phase 3 preconditions failed: ") + e.what());
        }
        for (auto [l, r] : matching)
            stars.push_back(Star{b_rest[l], {rest_targets[r]}, StarKind::one_k});
    }

    // final validation: stars are disjoint, valid, and partition the targets
    std::set<int> b_set(inst.b_centres.begin(), inst.b_centres.end());
    std::vector<int> all_leaves;
    std::set<int> centres_seen;
    for (const auto& s : stars) {
        internal_check(!s.leaves.empty(), "empty star");
        internal_check(centres_seen.insert(s.centre).second, "centre reused");
        const int sz = static_cast<int>(s.leaves.size());
        if (s.kind == StarKind::zero_k)
            internal_check(sz % k == 0 && a_set.count(s.centre) > 0, "invalid zero_k star");
        else
            internal_check(sz % k == 1 && b_set.count(s.centre) > 0, "invalid one_k star");
        auto avail = availability_of(inst, s.centre);
        for (int x : s.leaves) {
            internal_check(std::binary_search(avail.begin(), avail.end(), x),
                           "leaf not available to its centre");
            all_leaves.push_back(x);
        }
    }
    std::sort(all_leaves.begin(), all_leaves.end());
    internal_check(all_leaves == inst.targets, "star leaves do not partition the targets");
    return stars;
}

StarCoverInstance make_tightness_instance(int k, int d, int x_count)
{
    if (k < 1 || d < 1)
        throw std::invalid_argument("k and d must be positive");
    if (x_count < k - 1 || (x_count - (k - 1)) % k != 0)
        throw std::invalid_argument("x_count must be >= k-1 and congruent to k-1 mod k");

    StarCoverInstance inst;
    inst.k = k;
    inst.d = d;
    inst.a = 1;
    for (int c = 1; c <= d + 1; ++c)
        inst.a_centres.push_back(c);
    for (int c = d + 2; c <= 2 * d + k - 1; ++c)
        inst.b_centres.push_back(c); // |B| = d + k - 2
    for (int x = 0; x < x_count; ++x)
        inst.targets.push_back(x);

    // The first d centres of B are blocked from every target; each target
    // sees exactly A plus the last k-2 centres of B.
    for (int c : inst.a_centres)
        inst.availability[c] = inst.targets;
    for (std::size_t i = 0; i < inst.b_centres.size(); ++i)
        inst.availability[inst.b_centres[i]] =
            (static_cast<int>(i) < d) ? std::vector<int>{} : inst.targets;
    return inst;
}

RefuteResult refute_covering(const StarCoverInstance& inst, long long budget)
{
    validate_structure(inst);
    const int k = inst.k;
    const std::set<int> a_set(inst.a_centres.begin(), inst.a_centres.end());

    std::vector<int> centres = inst.a_centres;
    centres.insert(centres.end(), inst.b_centres.begin(), inst.b_centres.end());
    std::sort(centres.begin(), centres.end());

    std::set<int> covered;
    std::set<int> used_centres;
    std::vector<Star> current;
    long long nodes = 0;
    bool budget_hit = false;

    // Branch on the smallest uncovered target: enumerate every valid star
    // that contains it (centre, then leaf set), in ascending order.
    std::function<bool()> search = [&]() -> bool {
        int x = -1;
        for (int t : inst.targets)
            if (!covered.count(t)) {
                x = t;
                break;
            }
        if (x == -1)
            return true;

        for (int centre : centres) {
            if (used_centres.count(centre))
                continue;
            const bool zero_kind = a_set.count(centre) > 0;
            std::vector<int> pool;
            bool sees_x = false;
            for (int t : availability_of(inst, centre)) {
                if (covered.count(t))
                    continue;
                if (t == x)
                    sees_x = true;
                else
                    pool.push_back(t); // leaves beyond x, ascending
            }
            if (!sees_x)
                continue;
            const int pool_size = static_cast<int>(pool.size());
            for (int size = zero_kind ? k : 1; size <= pool_size + 1; size += k) {
                const int pick = size - 1; // leaves besides x
                // lexicographic (pick)-combinations of pool
                std::vector<int> idx(pick);
                for (int i = 0; i < pick; ++i)
                    idx[i] = i;
                while (true) {
                    if (++nodes > budget) {
                        budget_hit = true;
                        return false;
                    }
                    Star s{centre, {x}, zero_kind ? StarKind::zero_k : StarKind::one_k};
                    for (int i : idx)
                        s.leaves.push_back(pool[i]);
                    for (int leaf : s.leaves)
                        covered.insert(leaf);
                    used_centres.insert(centre);
                    current.push_back(s);
                    if (search())
                        return true;
                    current.pop_back();
                    used_centres.erase(centre);
                    for (int leaf : s.leaves)
                        covered.erase(leaf);
                    if (budget_hit)
                        return false;

                    // advance the combination
                    int move = pick - 1;
                    while (move >= 0 && idx[move] == pool_size - pick + move)
                        --move;
                    if (move < 0)
                        break;
                    ++idx[move];
                    for (int i = move + 1; i < pick; ++i)
                        idx[i] = idx[i - 1] + 1;
                }
            }
        }
        return false;
    };

    if (search())
        return RefuteResult{RefuteStatus::covering_found, current, nodes};
    if (budget_hit)
        return RefuteResult{RefuteStatus::budget_exhausted, {}, nodes};
    return RefuteResult{RefuteStatus::no_covering_exists, {}, nodes};
}

} // namespace modk
