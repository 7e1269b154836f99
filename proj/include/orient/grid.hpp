#pragma once

// Augmented (alpha, beta)-grids: a cylindrical grid with alpha*beta rows and
// (alpha+1)/2 columns, a wrap edge closing every column, and parallel copies
// in the two boundary columns so that every vertex has degree 4 except the
// port vertices L = {(g*alpha, 1)} and P = {(g*alpha, (alpha+1)/2)}, which have
// degree 3.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "cuts.hpp"
#include "graph.hpp"

namespace orient {

struct grid_spec {
    int alpha = 0;
    int beta = 0;
    int rows = 0;
    int cols = 0;
    std::string prefix;
    std::vector<vertex_id> cells;  // row-major, rows and columns 1-based in at()
    std::vector<vertex_id> l;      // l[g-1] = (g*alpha, 1)
    std::vector<vertex_id> p;      // p[g-1] = (g*alpha, cols)
    std::vector<std::pair<vertex_id, vertex_id>> padding;

    vertex_id at(int row, int col) const { return cells.at(static_cast<std::size_t>((row - 1) * cols + (col - 1))); }

    /// L_gamma and P_gamma.
    std::vector<vertex_id> l_first(int gamma) const { return {l.begin(), l.begin() + gamma}; }
    std::vector<vertex_id> p_first(int gamma) const { return {p.begin(), p.begin() + gamma}; }

    std::vector<vertex_id> ports() const
    {
        std::vector<vertex_id> out(l);
        out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_port(vertex_id v) const
    {
        return std::find(l.begin(), l.end(), v) != l.end() || std::find(p.begin(), p.end(), v) != p.end();
    }

    std::size_t vertex_count() const { return cells.size(); }
};

inline std::string grid_label(const std::string& prefix, int row, int col)
{
    return prefix + "r" + std::to_string(row) + "c" + std::to_string(col);
}

/// Adds an augmented grid to b with labels prefix + "r<i>c<j>".
///
/// Padding: in column 1 the non-L vertices form runs of alpha-1 consecutive
/// rows between L vertices; consecutive vertices of a run are paired and the
/// column edge between them doubled. The last column is padded the same way
/// around P.
inline grid_spec add_augmented_grid(graph_builder& b, int alpha, int beta, const std::string& prefix = "")
{
    if (alpha < 3 || alpha % 2 == 0) throw error("augmented grid: alpha must be odd and at least 3, got " + std::to_string(alpha));
    if (beta < 2) throw error("augmented grid: beta must be at least 2, got " + std::to_string(beta));

    grid_spec spec;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.rows = alpha * beta;
    spec.cols = (alpha + 1) / 2;
    spec.prefix = prefix;
    spec.cells.reserve(static_cast<std::size_t>(spec.rows * spec.cols));
    for (int i = 1; i <= spec.rows; ++i)
        for (int j = 1; j <= spec.cols; ++j) spec.cells.push_back(b.add_vertex(grid_label(prefix, i, j)));

    for (int i = 1; i <= spec.rows; ++i)
        for (int j = 1; j <= spec.cols; ++j) {
            if (i < spec.rows) b.add_edge(spec.at(i, j), spec.at(i + 1, j));
            if (j < spec.cols) b.add_edge(spec.at(i, j), spec.at(i, j + 1));
        }
    for (int j = 1; j <= spec.cols; ++j) b.add_edge(spec.at(1, j), spec.at(spec.rows, j));

    for (int g = 1; g <= beta; ++g) {
        spec.l.push_back(spec.at(g * alpha, 1));
        spec.p.push_back(spec.at(g * alpha, spec.cols));
    }

    for (int col : {1, spec.cols})
        for (int g = 0; g < beta; ++g)
            for (int i = g * alpha + 1; i + 1 < (g + 1) * alpha; i += 2) {
                auto u = spec.at(i, col);
                auto v = spec.at(i + 1, col);
                b.add_edge(u, v);
                spec.padding.emplace_back(u, v);
            }
    return spec;
}

inline std::pair<multigraph, grid_spec> augmented_grid(int alpha, int beta)
{
    graph_builder b;
    auto spec = add_augmented_grid(b, alpha, beta);
    return {b.build(), std::move(spec)};
}

/// Empty if every port has degree 3 and every other vertex degree 4, and every
/// parallel edge doubles a boundary-column edge between non-port vertices;
/// otherwise a description of the first defect.
inline std::string grid_degree_defect(const multigraph& w, const grid_spec& spec)
{
    for (auto v : spec.cells) {
        count_t want = spec.is_port(v) ? 3 : 4;
        if (w.degree(v) != want)
            return "vertex " + w.label(v) + " has degree " + std::to_string(w.degree(v)) + ", expected " + std::to_string(want);
    }
    for (const auto& e : w.edges()) {
        if (e.mult == 1) continue;
        auto iu = std::find(spec.cells.begin(), spec.cells.end(), e.u) - spec.cells.begin();
        auto iv = std::find(spec.cells.begin(), spec.cells.end(), e.v) - spec.cells.begin();
        int ru = static_cast<int>(iu) / spec.cols;
        int rv = static_cast<int>(iv) / spec.cols;
        int cu = static_cast<int>(iu) % spec.cols;
        int cv = static_cast<int>(iv) % spec.cols;
        bool boundary = cu == cv && (cu == 0 || cu == spec.cols - 1) && std::abs(ru - rv) == 1;
        if (e.mult != 2 || !boundary || spec.is_port(e.u) || spec.is_port(e.v))
            return "parallel edge " + w.label(e.u) + "-" + w.label(e.v) + " is not a boundary-column padding copy";
    }
    return {};
}

struct three_connectivity_report {
    bool degrees_ok = false;
    bool pairwise_ok = false;   // lambda >= 3 for every pair
    count_t min_lambda = 0;
    bool exhaustive = false;    // the cut scan below was run
    bool equality_ok = false;   // every cut of size 3 is a port singleton or co-singleton
    std::size_t cuts_of_three = 0;  // over all 2^|V| subsets
    bool min_cut_ok = false;    // no cut below 3 in the scan

    bool ok() const { return degrees_ok && pairwise_ok && (!exhaustive || (equality_ok && min_cut_ok)); }
};

/// 3-edge-connectivity by pairwise flows; for grids with at most 16 vertices
/// also an exhaustive scan of the cuts of size 3.
inline three_connectivity_report verify_three_edge_connected(const multigraph& w, const grid_spec& spec)
{
    three_connectivity_report rep;
    rep.degrees_ok = grid_degree_defect(w, spec).empty();
    const auto n = w.vertex_count();
    lambda_solver solver(w);
    rep.pairwise_ok = true;
    rep.min_lambda = std::numeric_limits<count_t>::max();
    for (vertex_id s = 0; s < n; ++s)
        for (vertex_id t = s + 1; t < n; ++t) {
            // Capped at 4: only the threshold 3 matters.
            auto lam = solver.value(s, t, 4);
            rep.min_lambda = std::min(rep.min_lambda, lam);
            if (lam < 3) rep.pairwise_ok = false;
        }
    if (n <= 16) {
        rep.exhaustive = true;
        rep.equality_ok = true;
        rep.min_cut_ok = true;
        const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
        for_each_cut_mask(w, [&](std::uint32_t x, count_t cut) {
            if (x == full) return true;
            if (cut < 3) rep.min_cut_ok = false;
            if (cut == 3) {
                rep.cuts_of_three += 2;  // X and its complement
                std::uint32_t small = std::popcount(x) == 1 ? x : (full & ~x);
                bool singleton_port = std::popcount(small) == 1 &&
                                      spec.is_port(static_cast<vertex_id>(std::countr_zero(small)));
                if (!singleton_port) rep.equality_ok = false;
            }
            return true;
        });
    }
    return rep;
}

struct separation_check {
    bool hypothesis = false;  // both sides have a component with two ports
    count_t cut = 0;
    bool holds = true;        // !hypothesis || cut > alpha
};

namespace detail {

inline bool side_has_two_port_component(const multigraph& w, const grid_spec& spec, const vertex_set& side)
{
    std::vector<int> comp(w.vertex_count(), -1);
    int next = 0;
    for (auto root : side.members()) {
        if (comp[root] >= 0) continue;
        int ports = 0;
        std::vector<vertex_id> stack{root};
        comp[root] = next;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (spec.is_port(v)) ++ports;
            for (const auto& inc : w.incident(v))
                if (side.contains(inc.other) && comp[inc.other] < 0) {
                    comp[inc.other] = next;
                    stack.push_back(inc.other);
                }
        }
        if (ports >= 2) return true;
        ++next;
    }
    return false;
}

}  // namespace detail

/// d_W(X) > alpha whenever both W[X] and W[V-X] have a component holding two
/// ports. Sets without that property are reported as vacuous.
inline separation_check verify_separation_bound(const multigraph& w, const grid_spec& spec, const vertex_set& x)
{
    separation_check out;
    out.cut = cut_size(w, x);
    out.hypothesis = detail::side_has_two_port_component(w, spec, x) &&
                     detail::side_has_two_port_component(w, spec, x.complement());
    out.holds = !out.hypothesis || out.cut > spec.alpha;
    return out;
}

struct separation_scan {
    std::size_t sets = 0;        // sets examined
    std::size_t hypothesis = 0;  // sets meeting the hypothesis
    std::size_t failures = 0;
    count_t min_cut_under_hypothesis = -1;

    bool ok() const { return failures == 0; }
};

/// Every subset of a grid with at most 20 vertices (complements counted separately).
inline separation_scan separation_exhaustive(const multigraph& w, const grid_spec& spec)
{
    enforce_bound(w.vertex_count() <= 20, "exhaustive separation scan supports at most 20 vertices");
    separation_scan scan;
    auto adj = adjacency_masks(w);
    std::uint32_t port_mask = 0;
    for (auto v : spec.ports()) port_mask |= 1U << v;
    const std::uint32_t full = (1U << w.vertex_count()) - 1;
    auto two_ports = [&](std::uint32_t side) {
        for (auto c : component_masks(adj, side))
            if (std::popcount(c & port_mask) >= 2) return true;
        return false;
    };
    for_each_cut_mask(w, [&](std::uint32_t x, count_t cut) {
        scan.sets += 2;
        if (two_ports(x) && two_ports(full & ~x)) {
            scan.hypothesis += 2;
            if (scan.min_cut_under_hypothesis < 0 || cut < scan.min_cut_under_hypothesis) scan.min_cut_under_hypothesis = cut;
            if (cut <= spec.alpha) scan.failures += 2;
        }
        return true;
    });
    return scan;
}

/// Row intervals, column prefixes, and their products.
inline std::vector<vertex_set> structured_grid_sets(const multigraph& w, const grid_spec& spec)
{
    std::vector<vertex_set> out;
    auto block = [&](int r0, int r1, int c1) {
        vertex_set x(w.vertex_count());
        for (int i = r0; i <= r1; ++i)
            for (int j = 1; j <= c1; ++j) x.insert(spec.at(i, j));
        return x;
    };
    for (int r0 = 1; r0 <= spec.rows; ++r0)
        for (int r1 = r0; r1 <= spec.rows; ++r1)
            for (int c1 = 1; c1 <= spec.cols; ++c1) {
                if (r0 == 1 && r1 == spec.rows && c1 == spec.cols) continue;
                out.push_back(block(r0, r1, c1));
            }
    return out;
}

inline separation_scan separation_structured(const multigraph& w, const grid_spec& spec)
{
    separation_scan scan;
    for (const auto& x : structured_grid_sets(w, spec)) {
        ++scan.sets;
        auto c = verify_separation_bound(w, spec, x);
        if (!c.hypothesis) continue;
        ++scan.hypothesis;
        if (scan.min_cut_under_hypothesis < 0 || c.cut < scan.min_cut_under_hypothesis) scan.min_cut_under_hypothesis = c.cut;
        if (!c.holds) ++scan.failures;
    }
    return scan;
}

}  // namespace orient
