#include "modk/pipeline.hpp"
#include "modk/degenerate.hpp"
#include "modk/divisible.hpp"
#include "modk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modk {

namespace {

int parity_prime(int k)
{
    return (k % 2 == 0) ? next_prime(3 * k / 2) : next_prime(k);
}

} // namespace

ColourRunResult colour_graph(const Graph& g, int k, long long divisible_budget,
                             std::optional<int> a_opt)
{
    if (k < 1)
        throw std::invalid_argument("modulus must be >= 1");

    if (k == 1) {
        ColourRunResult out;
        out.extracted = grow_onemod(g, 1, divisible_budget);
        out.colouring.palette_size = 1;
        for (const auto& e : g.edges())
            out.colouring.assignment[e] = 1;
        out.certificate = BoundCertificate{1, false, 0, 0, 1,
                                           out.colouring.colours_used(),
                                           MaximalityStatus::certified_maximal};
        return out;
    }

    ColourRunResult out;
    out.extracted = grow_onemod(g, k, divisible_budget);

    const Graph residual = remove_edges(g, out.extracted.edges);
    const DegeneracyOrder res_order = degeneracy_order(residual);
    const int d = std::max(res_order.degeneracy - 1, 0);
    const int a = a_opt.value_or(std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d))))));

    const EdgeColouring inner = colour_degenerate(residual, k, a);

    // colour 1 is reserved for the extracted class even when it is empty
    EdgeColouring merged;
    merged.palette_size = 1 + inner.palette_size;
    for (const auto& e : out.extracted.edges)
        merged.assignment[e] = 1;
    for (const auto& [e, colour] : inner.assignment)
        merged.assignment[e] = colour + 1;
    internal_check(merged.assignment.size() == g.edge_count(), "merge lost edges");
    internal_check(verify(g, merged, k).empty(), "pipeline output failed verification");

    const int q = parity_prime(k);
    BoundCertificate cert;
    cert.k = k;
    cert.k_even = (k % 2 == 0);
    cert.theoretical_degeneracy = 2 * q + k - 3;
    cert.measured_degeneracy = res_order.degeneracy;
    cert.palette_bound = 1 + palette_size(d, k, a);
    cert.colours_used = merged.colours_used();
    cert.maximality = out.extracted.status;

    internal_check(cert.colours_used <= cert.palette_bound, "palette bound violated");
    if (cert.maximality == MaximalityStatus::certified_maximal)
        internal_check(cert.measured_degeneracy <= cert.theoretical_degeneracy,
                       "measured degeneracy exceeds the certified ceiling");

    out.colouring = std::move(merged);
    out.certificate = cert;
    return out;
}

int theorem_bound(int k)
{
    if (k < 2)
        throw std::invalid_argument("theorem_bound needs k >= 2");
    const int q = parity_prime(k);
    const int capacity = 2 * q + k - 3; // degeneracy ceiling for the residual
    const int d = std::max(capacity - 1, 0);
    const int a = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)))));
    return 1 + palette_size(d, k, a);
}

std::vector<TheoremRatioRow> theorem_ratio_report(int k_cap)
{
    std::vector<TheoremRatioRow> rows;
    for (int k = 2; k <= k_cap; ++k) {
        const int bound = theorem_bound(k);
        rows.push_back(TheoremRatioRow{k, bound, static_cast<double>(bound) / k});
    }
    return rows;
}

} // namespace modk
