#ifndef MODK_DEGENERATE_HPP
#define MODK_DEGENERATE_HPP

#include "modk/colouring.hpp"
#include "modk/graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace modk {

/// Colour budget sufficient for a (d+1)-degenerate graph: 2d+k+a+ceil(d/a)+1.
int palette_size(int d, int k, int a);

/// Bookkeeping exposed to the per-step observer: the palette and, for every
/// vertex not yet processed, the set of colours already on its edges.
struct PaletteState {
    int palette_size = 0;
    std::map<int, std::set<int>> unprocessed_used;
};

using StepObserver =
    std::function<void(const PaletteState&, const EdgeColouring& partial, int step)>;

/// Debug/test hook. True iff (1) the partial colouring colours exactly the
/// edges incident to processed vertices (those absent from
/// state.unprocessed_used), (2) at each processed vertex every non-empty
/// colour class has degree ≡ 1 (mod k), and (3) every unprocessed vertex
/// sees pairwise-distinct colours, matching its recorded used set.
/// `step` must equal the number of processed vertices.
bool step_invariant_check(const PaletteState& state, const Graph& g,
                          const EdgeColouring& partial, int k, int step);

/// Colours g for modulus k with at most palette_size(d, k, a) colours, where
/// d+1 is the measured degeneracy. Vertices are processed in a degeneracy
/// order; each step covers the later neighbours by stars over the colours
/// still usable at each of them. a defaults to max(1, floor(sqrt(d))).
EdgeColouring colour_degenerate(const Graph& g, int k,
                                std::optional<int> a = std::nullopt,
                                const StepObserver& observer = {});

} // namespace modk

#endif
