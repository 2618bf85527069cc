#include "modk/json_io.hpp"

#include <stdexcept>

namespace modk {

using nlohmann::json;

const char* maximality_name(MaximalityStatus s)
{
    return s == MaximalityStatus::certified_maximal ? "CertifiedMaximal" : "BestEffort";
}

const char* divisible_status_name(DivisibleStatus s)
{
    switch (s) {
    case DivisibleStatus::found:
        return "Found";
    case DivisibleStatus::certified_absent:
        return "CertifiedAbsent";
    default:
        return "BudgetExhausted";
    }
}

json certificate_to_json(const BoundCertificate& cert)
{
    return json{{"k", cert.k},
                {"parity", cert.k_even ? "even" : "odd"},
                {"theoretical_degeneracy", cert.theoretical_degeneracy},
                {"measured_degeneracy", cert.measured_degeneracy},
                {"palette_bound", cert.palette_bound},
                {"colours_used", cert.colours_used},
                {"maximality", maximality_name(cert.maximality)}};
}

json colouring_to_json(const Graph& g, const EdgeColouring& c, int k,
                       std::optional<std::uint64_t> seed, const BoundCertificate* cert)
{
    json edges = json::array();
    for (const auto& [e, colour] : c.assignment)
        edges.push_back(json{{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"colour", colour}});
    json out{{"k", k}, {"palette_size", c.palette_size}, {"edges", std::move(edges)}};
    if (seed)
        out["seed"] = *seed;
    if (cert)
        out["certificate"] = certificate_to_json(*cert);
    return out;
}

EdgeColouring colouring_from_json(const json& j, const Graph& g, int* k_out)
{
    if (!j.contains("k") || !j.contains("palette_size") || !j.contains("edges"))
        throw std::invalid_argument("colouring JSON misses a required field");
    EdgeColouring c;
    c.palette_size = j.at("palette_size").get<int>();
    for (const auto& row : j.at("edges")) {
        const auto lu = row.at("u").get<std::string>();
        const auto lv = row.at("v").get<std::string>();
        const auto u = g.vertex_by_label(lu);
        const auto v = g.vertex_by_label(lv);
        if (!u || !v)
            throw std::invalid_argument("unknown vertex label '" + (u ? lv : lu) + "'");
        c.assignment[make_edge(*u, *v)] = row.at("colour").get<int>();
    }
    if (k_out)
        *k_out = j.at("k").get<int>();
    return c;
}

json violations_to_json(const Graph& g, const std::vector<Violation>& violations)
{
    json rows = json::array();
    for (const auto& v : violations)
        rows.push_back(json{{"colour", v.colour},
                            {"vertex", g.label(v.vertex)},
                            {"degree_in_class", v.degree_in_class}});
    return json{{"valid", violations.empty()}, {"violations", std::move(rows)}};
}

json divisible_to_json(const Graph& g, const DivisibleOutcome& outcome)
{
    json witness = json::array();
    for (const auto& e : outcome.witness)
        witness.push_back(json{{"u", g.label(e.u)}, {"v", g.label(e.v)}});
    return json{{"status", divisible_status_name(outcome.status)},
                {"witness", std::move(witness)},
                {"nodes_explored", outcome.nodes_explored}};
}

json onemod_to_json(const Graph& g, const OnemodSubgraph& h, const MaximalityReport& report)
{
    json edges = json::array();
    for (const auto& e : h.edges)
        edges.push_back(json{{"u", g.label(e.u)}, {"v", g.label(e.v)}});
    json support = json::array();
    for (int v : h.support)
        support.push_back(g.label(v));
    return json{{"edges", std::move(edges)},
                {"support", std::move(support)},
                {"status", maximality_name(h.status)},
                {"properties",
                 json{{"outside_independent", report.outside_independent},
                      {"cross_degree_ok", report.cross_degree_ok},
                      {"inside_divisible", divisible_status_name(report.inside_divisible.status)}}}};
}

json exact_to_json(const Graph& g, const ExactChiResult& result)
{
    json out;
    switch (result.status) {
    case ExactStatus::exact:
        out["status"] = "Exact";
        out["value"] = result.value;
        break;
    case ExactStatus::lower_bound_only:
        out["status"] = "LowerBoundOnly";
        out["value"] = result.value;
        break;
    default:
        out["status"] = "BudgetExhausted";
        break;
    }
    out["nodes_explored"] = result.nodes_explored;
    if (result.witness)
        out["witness"] = colouring_to_json(g, *result.witness, 0)["edges"];
    return out;
}

json star_instance_to_json(const StarCoverInstance& inst)
{
    json avail = json::object();
    for (const auto& [centre, xs] : inst.availability)
        avail[std::to_string(centre)] = xs;
    return json{{"a_centres", inst.a_centres}, {"b_centres", inst.b_centres},
                {"targets", inst.targets},     {"availability", std::move(avail)},
                {"k", inst.k},                 {"d", inst.d},
                {"a", inst.a}};
}

StarCoverInstance star_instance_from_json(const json& j)
{
    StarCoverInstance inst;
    inst.a_centres = j.at("a_centres").get<std::vector<int>>();
    inst.b_centres = j.at("b_centres").get<std::vector<int>>();
    inst.targets = j.at("targets").get<std::vector<int>>();
    inst.k = j.at("k").get<int>();
    inst.d = j.at("d").get<int>();
    inst.a = j.at("a").get<int>();
    for (const auto& [key, xs] : j.at("availability").items())
        inst.availability[std::stoi(key)] = xs.get<std::vector<int>>();
    return inst;
}

} // namespace modk
