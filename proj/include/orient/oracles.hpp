#pragma once

// Brute-force ground truth: exhaustive solvers for MAXCUT, BWBO, LACO,
// well-balanced orientations and cut-admissible pairings, plus the corpus of
// small connected multigraphs the property checks run over.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "admissibility.hpp"
#include "connectivity.hpp"
#include "cuts.hpp"
#include "graph.hpp"
#include "limits.hpp"
#include "reductions.hpp"

namespace orient {

struct maxcut_result {
    count_t value = 0;
    vertex_set argmax;
};

/// Maximum d_H(X) over all X; ties broken by the smallest mask containing vertex 0.
inline maxcut_result brute_maxcut(const multigraph& h, const search_limits& limits = {})
{
    enforce_bound(h.vertex_count() <= limits.maxcut_max_vertices,
                  "brute maxcut: " + std::to_string(h.vertex_count()) + " vertices exceeds the bound of " +
                      std::to_string(limits.maxcut_max_vertices));
    maxcut_result out;
    out.argmax = vertex_set(h.vertex_count());
    if (h.vertex_count() == 0) return out;
    std::uint32_t best_mask = 1;
    count_t best = -1;
    for_each_cut_mask(h, [&](std::uint32_t x, count_t cut) {
        if (cut > best || (cut == best && x < best_mask)) {
            best = cut;
            best_mask = x;
        }
        return true;
    });
    out.value = best;
    out.argmax = vertex_set::from_mask(h.vertex_count(), best_mask);
    return out;
}

/// Enumerates orientations of g (as forward counts per pair, pair 0 most
/// significant, counts ascending) that satisfy out(v) >= min_out[v] and
/// in(v) >= min_in[v], pruning on the degrees still open at each vertex.
/// visit returns false to stop.
inline void for_each_orientation(const multigraph& g, const std::vector<count_t>& min_out, const std::vector<count_t>& min_in,
                                 const std::function<bool(const std::vector<count_t>&)>& visit)
{
    const auto n = g.vertex_count();
    std::vector<count_t> out(n, 0);
    std::vector<count_t> in(n, 0);
    std::vector<count_t> open(n, 0);
    for (vertex_id v = 0; v < n; ++v) open[v] = g.degree(v);
    std::vector<count_t> fwd(g.pair_count(), 0);
    bool stop = false;
    auto feasible = [&](vertex_id v) { return out[v] + open[v] >= min_out[v] && in[v] + open[v] >= min_in[v]; };
    for (vertex_id v = 0; v < n; ++v)
        if (!feasible(v)) return;

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (stop) return;
        if (k == g.pair_count()) {
            if (!visit(fwd)) stop = true;
            return;
        }
        const auto& e = g.edge_at(k);
        open[e.u] -= e.mult;
        open[e.v] -= e.mult;
        for (count_t c = 0; c <= e.mult && !stop; ++c) {
            out[e.u] += c;
            in[e.v] += c;
            out[e.v] += e.mult - c;
            in[e.u] += e.mult - c;
            fwd[k] = c;
            if (feasible(e.u) && feasible(e.v)) rec(k + 1);
            out[e.u] -= c;
            in[e.v] -= c;
            out[e.v] -= e.mult - c;
            in[e.u] -= e.mult - c;
        }
        open[e.u] += e.mult;
        open[e.v] += e.mult;
    };
    rec(0);
}

/// First orientation meeting the degree bounds that is well-balanced.
inline std::optional<orientation> brute_bwbo(const bwbo_instance& inst, const search_limits& limits = {})
{
    require_bwbo(inst);
    enforce_bound(inst.g.edge_count() <= limits.orientation_max_edges,
                  "brute bwbo: " + std::to_string(inst.g.edge_count()) + " edges exceeds the bound of " +
                      std::to_string(limits.orientation_max_edges));
    auto lam = all_pairs_lambda(inst.g);
    std::optional<orientation> found;
    for_each_orientation(inst.g, inst.lower_out, inst.lower_in, [&](const std::vector<count_t>& fwd) {
        orientation d(inst.g, fwd);
        if (find_balance_violation(d, lam)) return true;
        found = std::move(d);
        return false;
    });
    return found;
}

/// First orientation with lambda_D(u, v) >= r(u, v) for all ordered pairs.
/// Out-degree of u and in-degree of v bound lambda(u, v), which prunes the search.
inline std::optional<orientation> brute_laco(const multigraph& g, const requirement_table& r, const search_limits& limits = {})
{
    enforce_bound(g.edge_count() <= limits.orientation_max_edges,
                  "brute laco: " + std::to_string(g.edge_count()) + " edges exceeds the bound of " +
                      std::to_string(limits.orientation_max_edges));
    const auto n = g.vertex_count();
    if (r.size() != n) throw error("brute laco: requirement table does not match the graph");
    std::vector<count_t> min_out(n, 0);
    std::vector<count_t> min_in(n, 0);
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v = 0; v < n; ++v)
            if (u != v) {
                min_out[u] = std::max(min_out[u], r[u][v]);
                min_in[v] = std::max(min_in[v], r[u][v]);
            }
    std::optional<orientation> found;
    for_each_orientation(g, min_out, min_in, [&](const std::vector<count_t>& fwd) {
        orientation d(g, fwd);
        lambda_solver solver(d);
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = 0; v < n; ++v)
                if (u != v && r[u][v] > 0 && solver.value(u, v, r[u][v]) < r[u][v]) return true;
        found = std::move(d);
        return false;
    });
    return found;
}

inline std::optional<orientation> brute_laco(const laco_instance& inst, const search_limits& limits = {})
{
    return brute_laco(inst.g, inst.r, limits);
}

/// A well-balanced orientation of g. Every graph has one, so an empty result
/// means something upstream is broken.
inline std::optional<orientation> brute_wbo_exists(const multigraph& g, const search_limits& limits = {})
{
    bwbo_instance inst{g, std::vector<count_t>(g.vertex_count(), 0), std::vector<count_t>(g.vertex_count(), 0)};
    return brute_bwbo(inst, limits);
}

/// First pairing (in enumeration order) that decide_ca accepts.
inline std::optional<multigraph> brute_cut_admissible_pairing(const multigraph& g, const search_limits& limits = {})
{
    enforce_bound(g.vertex_count() <= limits.pairing_max_vertices,
                  "find ca-pairing: " + std::to_string(g.vertex_count()) + " vertices exceeds the bound of " +
                      std::to_string(limits.pairing_max_vertices));
    enforce_bound(odd_vertices(g).size() <= limits.pairing_max_odd,
                  "find ca-pairing: more than " + std::to_string(limits.pairing_max_odd) + " odd vertices");
    std::optional<multigraph> found;
    for_each_pairing(g, [&](const multigraph& f) {
        if (decide_ca(g, f, limits)) return true;
        found = f;
        return false;
    });
    return found;
}

/// Whether some orientation of g completes f_dir to an eulerian orientation,
/// by enumeration.
inline bool brute_eulerian_extension_exists(const multigraph& g, const orientation& f_dir, const search_limits& limits = {})
{
    enforce_bound(g.edge_count() <= limits.orientation_max_edges, "brute extension: too many edges");
    const auto n = g.vertex_count();
    std::vector<count_t> f_net(n);
    for (vertex_id v = 0; v < n; ++v) f_net[v] = f_dir.out_degree(v) - f_dir.in_degree(v);
    bool found = false;
    std::vector<count_t> none(n, 0);
    for_each_orientation(g, none, none, [&](const std::vector<count_t>& fwd) {
        orientation d(g, fwd);
        for (vertex_id v = 0; v < n; ++v)
            if (d.out_degree(v) - d.in_degree(v) + f_net[v] != 0) return true;
        found = true;
        return false;
    });
    return found;
}

// ------------------------------------------------------------------ corpus --

/// Multigraphs on 2..max_vertices vertices with total multiplicity at most
/// max_edges (connected ones only by default), one per isomorphism class. Each is kept in its canonical
/// form (lexicographically smallest multiplicity vector over all vertex
/// permutations); vertices are labelled a, b, c, ...
inline std::vector<multigraph> generate_corpus(std::size_t max_vertices = 5, count_t max_edges = 8, bool connected_only = true)
{
    enforce_bound(max_vertices <= 7, "corpus generation supports at most 7 vertices");
    std::vector<multigraph> corpus;
    for (std::size_t n = 2; n <= max_vertices; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n, 0));
        for (std::size_t k = 0; k < pairs.size(); ++k) slot[pairs[k].first][pairs[k].second] = slot[pairs[k].second][pairs[k].first] = k;

        std::vector<count_t> mult(pairs.size(), 0);
        std::vector<count_t> image(pairs.size());
        auto is_canonical = [&] {
            for (const auto& p : perms) {
                for (std::size_t k = 0; k < pairs.size(); ++k) image[slot[p[pairs[k].first]][p[pairs[k].second]]] = mult[k];
                if (image < mult) return false;
            }
            return true;
        };
        auto connected = [&] {
            std::vector<bool> seen(n, false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (std::size_t u = 0; u < n; ++u)
                    if (u != v && !seen[u] && mult[slot[u][v]] > 0) {
                        seen[u] = true;
                        stack.push_back(u);
                    }
            }
            return std::find(seen.begin(), seen.end(), false) == seen.end();
        };
        std::function<void(std::size_t, count_t)> rec = [&](std::size_t k, count_t left) {
            if (k == pairs.size()) {
                if ((!connected_only || connected()) && is_canonical()) {
                    graph_builder b;
                    for (std::size_t v = 0; v < n; ++v) b.add_vertex(std::string(1, static_cast<char>('a' + v)));
                    for (std::size_t i = 0; i < pairs.size(); ++i)
                        if (mult[i] > 0) b.add_edge(static_cast<vertex_id>(pairs[i].first), static_cast<vertex_id>(pairs[i].second), mult[i]);
                    corpus.push_back(b.build());
                }
                return;
            }
            for (count_t c = 0; c <= left; ++c) {
                mult[k] = c;
                rec(k + 1, left - c);
            }
            mult[k] = 0;
        };
        rec(0, max_edges);
    }
    return corpus;
}

/// FNV-1a over the sorted edge records of every corpus graph, in order.
inline std::uint64_t corpus_checksum(const std::vector<multigraph>& corpus)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& g : corpus) {
        mix("n" + std::to_string(g.vertex_count()));
        for (const auto& [a, b, m] : edge_records(g)) mix(a + "-" + b + "x" + std::to_string(m) + ";");
        mix("|");
    }
    return h;
}

}  // namespace orient
