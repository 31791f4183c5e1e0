#pragma once

#include <cstdio>

#include <json.hpp>

#include "snarks/audit.hpp"
#include "snarks/catalog.hpp"
#include "snarks/coloring.hpp"
#include "snarks/recipes.hpp"
#include "snarks/symmetry.hpp"

namespace snarks {

using Json = nlohmann::json;

inline constexpr int report_schema_version = 1;

namespace detail {

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Identity block attached to every report: size, the canonical-form graph6
// certificate and its hash, so reports are comparable across labelings.
inline Json graph_identity(const Graph& g) {
    std::string cert = canonical_form(g).certificate;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(detail::fnv1a(cert)));
    return Json{{"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"graph6", emit_graph6(g)},
                {"canonical_graph6", cert},
                {"certificate_hash", std::string(hex)}};
}

inline Json report_header(std::string_view command, const Graph& g) {
    return Json{{"schema", report_schema_version}, {"command", std::string(command)}, {"input", graph_identity(g)}};
}

inline Json to_json(const TwoFactor& f) {
    Json j{{"cycles", f.cycles}, {"spectrum", f.spectrum()}};
    if (auto even = f.even_cycle()) j["even_cycle"] = *even;
    return j;
}

inline TwoFactor two_factor_from_json(const Json& j) {
    TwoFactor f;
    f.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
    return f;
}

// Witnesses in reports must re-validate through the library.
inline bool revalidate_two_factor_witness(const Graph& g, const Json& witness) {
    TwoFactor f = two_factor_from_json(witness);
    if (!validate_two_factor(g, f)) return false;
    if (witness.contains("even_cycle")) {
        std::vector<int> cyc = witness.at("even_cycle").get<std::vector<int>>();
        if (cyc.size() % 2 != 0) return false;
        bool found = false;
        for (const auto& c : f.cycles)
            if (c == cyc) found = true;
        if (!found) return false;
    }
    return true;
}

inline Json to_json(const Graph& g, const EdgeColoring& col) {
    Json edges = Json::array();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[static_cast<size_t>(i)];
        edges.push_back(Json{{"edge", {e.u, e.v}}, {"color", col.color[static_cast<size_t>(i)]}});
    }
    return edges;
}

inline Json to_json(const CyclicConnectivity& cc) {
    Json j{{"defined", cc.defined}};
    if (cc.defined) {
        j["value"] = cc.value;
        j["is_lower_bound"] = cc.is_lower_bound;
        if (!cc.cut.empty()) {
            Json cut = Json::array();
            for (const Edge& e : cc.cut) cut.push_back({e.u, e.v});
            j["witness_cut"] = cut;
        }
    }
    return j;
}

inline Json report_snark(const Graph& g) {
    Json j = report_header("check snark", g);
    SnarkReport rep = is_snark(g);
    j["cubic"] = rep.cubic;
    j["connected"] = rep.connected;
    j["bridgeless"] = rep.bridgeless;
    if (rep.girth)
        j["girth"] = *rep.girth;
    else
        j["girth"] = nullptr;
    j["cyclic_edge_connectivity"] = to_json(rep.cyclic_connectivity);
    j["class_two"] = rep.class_two;
    if (!rep.class_two)
        if (auto col = find_3_edge_coloring(g)) j["witness_coloring"] = to_json(g, *col);
    j["verdict"] = rep.snark;
    return j;
}

inline Json report_odd2f(const Graph& g) {
    Json j = report_header("check odd2f", g);
    OddTwoFactoredReport rep = is_odd_two_factored(g);
    j["odd_two_factored"] = rep.odd;
    j["vacuous"] = rep.vacuous;
    if (rep.witness) j["witness"] = to_json(*rep.witness);
    j["verdict"] = rep.odd;
    return j;
}

inline Json report_classify(const Graph& g) {
    Json j = report_header("check classify", g);
    TwoFactorBehavior b = classify_two_factor_behavior(g);
    j["two_factor_hamiltonian"] = b.two_factor_hamiltonian;
    j["two_factor_isomorphic"] = b.two_factor_isomorphic;
    j["pseudo_two_factor_isomorphic"] = b.pseudo_two_factor_isomorphic;
    j["odd_two_factored"] = b.odd_two_factored;
    j["verdict"] = true;
    return j;
}

inline Json report_factors(const Graph& g, const FactorConstraint& constraint, bool with_matchings) {
    Json j = report_header("factors", g);
    Json cons{{"must_contain", Json::array()}, {"must_avoid", Json::array()}};
    for (const Edge& e : constraint.must_contain) cons["must_contain"].push_back({e.u, e.v});
    for (const Edge& e : constraint.must_avoid) cons["must_avoid"].push_back({e.u, e.v});
    j["constraint"] = cons;

    Json factors = Json::array();
    std::map<std::vector<int>, int> spectrum_counts;
    for_each_two_factor(g, constraint, [&](const TwoFactor& f) {
        factors.push_back(to_json(f));
        ++spectrum_counts[f.spectrum()];
        return true;
    });
    j["two_factors"] = factors;
    j["count"] = factors.size();
    Json spectra = Json::array();
    for (const auto& [spectrum, count] : spectrum_counts)
        spectra.push_back(Json{{"spectrum", spectrum}, {"count", count}});
    j["spectrum_counts"] = spectra;

    if (with_matchings) {
        Json matchings = Json::array();
        for (const auto& m : enumerate_perfect_matchings(g)) {
            Json edges = Json::array();
            for (const Edge& e : m) edges.push_back({e.u, e.v});
            matchings.push_back(edges);
        }
        j["perfect_matchings"] = matchings;
        j["matching_count"] = matchings.size();
    }
    j["verdict"] = true;
    return j;
}

inline Json report_bold(const Graph& g) {
    Json j = report_header("bold", g);
    Json edges = Json::array();
    for (const Edge& e : bold_edges(g)) edges.push_back({e.u, e.v});
    j["bold_edges"] = edges;
    j["count"] = edges.size();
    j["verdict"] = true;
    return j;
}

inline Json report_gadget(const Graph& g) {
    Json j = report_header("gadget", g);
    Json pairs = Json::array();
    for (const auto& [f, s] : gadget_pairs(g)) pairs.push_back({{f.u, f.v}, {s.u, s.v}});
    j["gadget_pairs"] = pairs;
    j["count"] = pairs.size();
    j["verdict"] = true;
    return j;
}

inline Json report_orbits(const Graph& g) {
    Json j = report_header("orbits", g);
    OrbitPartition vo = vertex_orbits(g);
    EdgeOrbitPartition eo = edge_orbits(g);
    AutomorphismGroup grp = automorphism_group(g);
    j["group_order"] = grp.order;
    j["group_name_hint"] = grp.name_hint;
    Json gens = Json::array();
    for (const Permutation& p : grp.generators) gens.push_back(p);
    j["generators"] = gens;
    j["vertex_orbits"] = vo.blocks;
    Json eblocks = Json::array();
    for (const auto& block : eo.blocks) {
        Json b = Json::array();
        for (const Edge& e : block) b.push_back({e.u, e.v});
        eblocks.push_back(b);
    }
    j["edge_orbits"] = eblocks;
    j["vertex_orbit_count"] = vo.blocks.size();
    j["edge_orbit_count"] = eo.blocks.size();
    j["verdict"] = true;
    return j;
}

inline Json report_iso(const Graph& g, const Graph& h) {
    Json j = report_header("iso", g);
    j["other"] = graph_identity(h);
    auto mapping = are_isomorphic(g, h);
    j["isomorphic"] = mapping.has_value();
    if (mapping) j["mapping"] = *mapping;
    j["verdict"] = mapping.has_value();
    return j;
}

inline Json to_json(const FourCutAudit& a) {
    return Json{{"total_factors", a.total_factors},
                {"meeting_zero", a.meeting_zero},
                {"meeting_two_same_pair", a.meeting_two_same_pair},
                {"meeting_two_split_pair", a.meeting_two_split_pair},
                {"meeting_four_one_cycle", a.meeting_four_one_cycle},
                {"meeting_four_two_cycles", a.meeting_four_two_cycles},
                {"cut_is_minimal_four", a.cut_is_minimal_four},
                {"every_cycle_meets_cut_evenly", a.every_cycle_meets_cut_evenly},
                {"right_cycles_always_distinct", a.right_cycles_always_distinct},
                {"bookkeeping_ok", a.bookkeeping_ok},
                {"all_cycles_odd", a.all_cycles_odd},
                {"violations", a.violations},
                {"clean", a.clean()}};
}

inline Json report_audit(const RecipeBuild& build) {
    Json j = report_header("audit-theorem37", build.graph);
    j["recipe"] = build.recipe.name;
    Json cut = Json::array();
    for (const Edge& e : build.cut.edges) cut.push_back({e.u, e.v});
    j["four_cut"] = cut;
    FourCutAudit a = audit_four_cut(build.graph, build.cut);
    j["audit"] = to_json(a);
    j["verdict"] = a.clean();
    return j;
}

// Overall verdict for exit-code purposes; reports without one are
// informational and count as passing.
inline bool report_verdict(const Json& j) {
    if (!j.contains("verdict")) return true;
    return j.at("verdict").get<bool>();
}

}  // namespace snarks
