#pragma once

// Eulerian orientations, and completing a fixed orientation of F to an
// eulerian orientation of G + F. The completion exists iff
// d_G(X) >= d+_F(X) - d-_F(X) for every X; when it does not, a violating X is
// returned.

#include <optional>
#include <vector>

#include "flow.hpp"
#include "graph.hpp"

namespace orient {

/// Orients every edge along closed walks so that in-degree equals out-degree.
/// Walks start at the smallest vertex index with unused edges and always take
/// the unused pair with the smallest other endpoint, so the result is canonical.
inline orientation eulerian_orientation(const multigraph& g)
{
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) throw error("eulerian_orientation: vertex '" + g.label(v) + "' has odd degree");

    std::vector<count_t> remaining;
    remaining.reserve(g.pair_count());
    for (const auto& e : g.edges()) remaining.push_back(e.mult);
    std::vector<count_t> fwd(g.pair_count(), 0);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);

    auto next_pair = [&](vertex_id v) -> const multigraph::incidence* {
        auto inc = g.incident(v);
        auto& i = cursor[v];
        while (i < inc.size() && remaining[inc[i].edge] == 0) ++i;
        return i < inc.size() ? &inc[i] : nullptr;
    };

    for (vertex_id start = 0; start < g.vertex_count(); ++start) {
        while (next_pair(start) != nullptr) {
            vertex_id cur = start;
            // With all degrees even the walk can only get stuck where it began.
            while (const auto* step = next_pair(cur)) {
                --remaining[step->edge];
                if (cur < step->other) ++fwd[step->edge];
                cur = step->other;
            }
        }
    }
    return {g, std::move(fwd)};
}

/// Either an orientation of G completing F to an eulerian orientation, or a
/// set X with d_G(X) < d+_F(X) - d-_F(X).
struct extension_outcome {
    std::optional<orientation> extension;
    vertex_set certificate;

    explicit operator bool() const { return extension.has_value(); }
};

/// True iff d_G(X) >= d+_F(X) - d-_F(X).
inline bool check_ff_condition(const multigraph& g, const orientation& f, const vertex_set& x)
{
    if (!g.same_vertices(f.graph())) throw error("check_ff_condition: G and F live on different vertex sets");
    return cut_size(g, x) >= out_cut(f, x) - in_cut(f, x);
}

/// Finds an orientation of G making G + F eulerian for the given orientation of F.
///
/// G starts fully forward; every vertex then has an even surplus
/// out - in. Reversing one copy of u->v moves two units of surplus from u to v,
/// so the completion is an integral flow from surplus to deficit vertices
/// along the current G arcs. If the flow saturates nothing is left unbalanced;
/// otherwise the residual-reachable side of the cut violates the condition.
inline extension_outcome extend_to_eulerian(const multigraph& g, const orientation& f)
{
    if (!g.same_vertices(f.graph())) throw error("extend_to_eulerian: G and F live on different vertex sets");
    auto n = g.vertex_count();
    for (vertex_id v = 0; v < n; ++v)
        if ((g.degree(v) + f.graph().degree(v)) % 2 != 0)
            throw error("extend_to_eulerian: G+F is not eulerian at '" + g.label(v) + "'");

    std::vector<count_t> surplus(n, 0);
    for (const auto& e : g.edges()) {
        surplus[e.u] += e.mult;
        surplus[e.v] -= e.mult;
    }
    for (vertex_id v = 0; v < n; ++v) surplus[v] += f.out_degree(v) - f.in_degree(v);

    flow_network net(n + 2);
    const std::size_t source = n;
    const std::size_t sink = n + 1;
    std::vector<std::size_t> arc_of(g.pair_count());
    for (std::size_t i = 0; i < g.pair_count(); ++i) {
        const auto& e = g.edge_at(i);
        arc_of[i] = net.add_arc(e.u, e.v, e.mult, 0);
    }
    count_t demand = 0;
    for (vertex_id v = 0; v < n; ++v) {
        if (surplus[v] > 0) {
            net.add_arc(source, v, surplus[v] / 2);
            demand += surplus[v] / 2;
        } else if (surplus[v] < 0) {
            net.add_arc(v, sink, -surplus[v] / 2);
        }
    }

    extension_outcome out;
    if (net.max_flow(source, sink) == demand) {
        std::vector<count_t> fwd(g.pair_count());
        for (std::size_t i = 0; i < g.pair_count(); ++i) fwd[i] = g.edge_at(i).mult - net.flow_on(arc_of[i]);
        out.extension = orientation(g, std::move(fwd));
        out.certificate = vertex_set(n);
        return out;
    }
    auto seen = net.source_side(source);
    out.certificate = vertex_set(n);
    for (vertex_id v = 0; v < n; ++v)
        if (seen[v]) out.certificate.insert(v);
    return out;
}

}  // namespace orient
