#ifndef MODK_JSON_IO_HPP
#define MODK_JSON_IO_HPP

#include "modk/colouring.hpp"
#include "modk/divisible.hpp"
#include "modk/graph.hpp"
#include "modk/onemod.hpp"
#include "modk/pipeline.hpp"
#include "modk/star_cover.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>

namespace modk {

const char* maximality_name(MaximalityStatus s);
const char* divisible_status_name(DivisibleStatus s);

nlohmann::json certificate_to_json(const BoundCertificate& cert);

/// Schema: { "k", "palette_size", "edges": [{"u","v","colour"}],
///           "seed"?, "certificate"? } with edges sorted by vertex id and
/// endpoints written as labels.
nlohmann::json colouring_to_json(const Graph& g, const EdgeColouring& c, int k,
                                 std::optional<std::uint64_t> seed = std::nullopt,
                                 const BoundCertificate* cert = nullptr);

/// Reads the schema back against a concrete graph; labels must resolve.
EdgeColouring colouring_from_json(const nlohmann::json& j, const Graph& g, int* k_out);

nlohmann::json violations_to_json(const Graph& g, const std::vector<Violation>& violations);

nlohmann::json divisible_to_json(const Graph& g, const DivisibleOutcome& outcome);

nlohmann::json onemod_to_json(const Graph& g, const OnemodSubgraph& h,
                              const MaximalityReport& report);

nlohmann::json exact_to_json(const Graph& g, const ExactChiResult& result);

// star-cover instances as test fixtures
nlohmann::json star_instance_to_json(const StarCoverInstance& inst);
StarCoverInstance star_instance_from_json(const nlohmann::json& j);

} // namespace modk

#endif
