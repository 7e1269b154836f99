#pragma once

// Exhaustive cut enumeration for small graphs via bit masks.

#include <bit>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "limits.hpp"

namespace orient {

/// Visits every X containing vertex 0 (X = V included) as a mask with bit i
/// for vertex i, together with d_G(X). The walk is in Gray-code order, each
/// step updating the cut in O(n). visit returns false to stop.
template <class Visit>
void for_each_cut_mask(const multigraph& g, Visit&& visit)
{
    const auto n = g.vertex_count();
    enforce_bound(n <= 32, "cut enumeration supports at most 32 vertices");
    if (n == 0) return;
    std::vector<std::vector<count_t>> w(n, std::vector<count_t>(n, 0));
    for (const auto& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.mult;

    std::uint32_t x = 1;
    count_t cut = g.degree(0);
    if (!visit(x, cut)) return;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        auto v = static_cast<vertex_id>(std::countr_zero(i) + 1);
        count_t inside = 0;
        for (vertex_id u = 0; u < n; ++u)
            if (u != v && (x >> u & 1U)) inside += w[u][v];
        if (x >> v & 1U) cut -= g.degree(v) - 2 * inside;
        else cut += g.degree(v) - 2 * inside;
        x ^= 1U << v;
        if (!visit(x, cut)) return;
    }
}

/// Adjacency as bit masks (parallel edges collapsed).
inline std::vector<std::uint32_t> adjacency_masks(const multigraph& g)
{
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1U << e.v;
        adj[e.v] |= 1U << e.u;
    }
    return adj;
}

/// Vertex masks of the connected components of G[X].
inline std::vector<std::uint32_t> component_masks(const std::vector<std::uint32_t>& adj, std::uint32_t x)
{
    std::vector<std::uint32_t> out;
    std::uint32_t left = x;
    while (left != 0) {
        std::uint32_t comp = left & (~left + 1);
        std::uint32_t frontier = comp;
        while (frontier != 0) {
            auto v = static_cast<unsigned>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            std::uint32_t fresh = adj[v] & x & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

/// Minimum of d_G(X) over s-t separating X, by enumeration. Oracle only.
inline count_t brute_min_cut(const multigraph& g, vertex_id s, vertex_id t)
{
    count_t best = -1;
    for_each_cut_mask(g, [&](std::uint32_t x, count_t cut) {
        bool s_in = x >> s & 1U;
        bool t_in = x >> t & 1U;
        if (s_in != t_in && (best < 0 || cut < best)) best = cut;
        return true;
    });
    return best;
}

}  // namespace orient
