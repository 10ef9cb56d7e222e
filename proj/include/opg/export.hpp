#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "opg/overlap_graph.hpp"

namespace opg {

/// DOT rendering: one node per vertex labeled with its permutation, one
/// directed edge per edge permutation (parallel edges emitted separately).
/// Iteration is by rank, so output bytes are stable for a fixed n.
inline void write_dot(std::ostream& os, const OverlapGraph& g) {
    os << "digraph overlap_permutations_" << g.n() << " {\n";
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << to_string(g.vertex(v)) << "\"];\n";
    for (std::uint64_t e = 0; e < g.edge_count(); ++e) {
        const auto [tail, head] = g.endpoints(e);
        os << "  v" << tail << " -> v" << head << " [label=\"" << to_string(g.edge_perm(e))
           << "\"];\n";
    }
    os << "}\n";
}

inline nlohmann::ordered_json graph_to_json(const OverlapGraph& g) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = g.n();
    auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(to_string(g.vertex(v)));
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (std::uint64_t e = 0; e < g.edge_count(); ++e) {
        const auto [tail, head] = g.endpoints(e);
        nlohmann::ordered_json entry;
        entry["edge"] = to_string(g.edge_perm(e));
        entry["tail"] = to_string(g.vertex(tail));
        entry["head"] = to_string(g.vertex(head));
        edges.push_back(std::move(entry));
    }
    return j;
}

}  // namespace opg
