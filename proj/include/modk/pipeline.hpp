#ifndef MODK_PIPELINE_HPP
#define MODK_PIPELINE_HPP

#include "modk/colouring.hpp"
#include "modk/graph.hpp"
#include "modk/onemod.hpp"

#include <optional>
#include <vector>

namespace modk {

/// Colour-count guarantee attached to a pipeline run. palette_bound binds to
/// the measured residual degeneracy and always holds; the theoretical
/// degeneracy (2q(k)+k-3 with the parity-dependent prime q) is additionally
/// certified only when the extracted class is certified maximal.
struct BoundCertificate {
    int k = 0;
    bool k_even = false;
    int theoretical_degeneracy = 0;
    int measured_degeneracy = 0;
    int palette_bound = 0;
    int colours_used = 0;
    MaximalityStatus maximality = MaximalityStatus::best_effort;
};

struct ColourRunResult {
    EdgeColouring colouring;
    BoundCertificate certificate;
    OnemodSubgraph extracted; // the colour-1 class
};

/// Full pipeline: grow a 1-mod-k class H, give it colour 1, colour the
/// residual graph over colours 2.. by the degenerate-graph routine, merge,
/// and verify. Output always satisfies the verifier; failures are defects.
ColourRunResult colour_graph(const Graph& g, int k, long long divisible_budget,
                             std::optional<int> a = std::nullopt);

/// Closed-form colour bound for arbitrary graphs at modulus k: with
/// D = 2q+k-3 for the parity-dependent prime q, d = D-1 and
/// a = floor(sqrt(d)), this is 1 + palette_size(d, k, a).
int theorem_bound(int k);

struct TheoremRatioRow {
    int k = 0;
    int bound = 0;
    double ratio = 0.0; // bound / k
};

/// theorem_bound(k)/k for k = 2..k_cap; reporting only.
std::vector<TheoremRatioRow> theorem_ratio_report(int k_cap);

} // namespace modk

#endif
