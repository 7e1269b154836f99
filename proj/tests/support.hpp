#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <orient/orient.hpp>

namespace orient::testing {

/// Parses "a b c d | a-b:2 b-c c-d" (vertex order, then edges with optional multiplicity).
inline multigraph graph_of(const std::string& spec)
{
    graph_builder b;
    auto bar = spec.find('|');
    std::istringstream vs(spec.substr(0, bar));
    for (std::string l; vs >> l;) b.add_vertex(l);
    std::istringstream es(bar == std::string::npos ? "" : spec.substr(bar + 1));
    for (std::string tok; es >> tok;) {
        count_t mult = 1;
        if (auto colon = tok.find(':'); colon != std::string::npos) {
            mult = std::stoll(tok.substr(colon + 1));
            tok = tok.substr(0, colon);
        }
        auto dash = tok.find('-');
        b.add_edge(tok.substr(0, dash), tok.substr(dash + 1), mult);
    }
    return b.build();
}

/// A pairing on the vertices of g.
inline multigraph pairing_of(const multigraph& g, const std::string& edges)
{
    std::string spec;
    for (const auto& l : g.labels()) spec += l + " ";
    return graph_of(spec + "| " + edges);
}

inline vertex_set set_of(const multigraph& g, const std::string& labels) { return vertex_set::from_labels(g, split_labels(labels)); }

inline multigraph pendant_cycle() { return graph_of("a b c d p q | a-b:2 b-c:2 c-d:2 a-d:2 a-p c-q"); }

}  // namespace orient::testing
