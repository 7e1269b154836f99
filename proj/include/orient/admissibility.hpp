#pragma once

// Odd-vertex pairings: enumeration, the cut condition d_G(X) - d_F(X) >= R_G(X),
// exhaustive deciders for cut- and orientation-admissibility, and the
// construction turning a violated cut into an eulerian orientation of G + F
// whose restriction to G is not well-balanced.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "eulerian.hpp"
#include "graph.hpp"
#include "limits.hpp"

namespace orient {

inline vertex_set odd_vertices(const multigraph& g)
{
    vertex_set odd(g.vertex_count());
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) odd.insert(v);
    return odd;
}

/// Empty string if F is an odd-vertex pairing of G, otherwise the reason.
inline std::string pairing_defect(const multigraph& g, const multigraph& f)
{
    if (!g.same_vertices(f)) return "pairing and graph have different vertex sets";
    for (const auto& e : f.edges())
        if (e.mult != 1) return "pairing edge " + f.label(e.u) + "-" + f.label(e.v) + " has multiplicity " + std::to_string(e.mult);
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        count_t want = g.degree(v) % 2;
        if (f.degree(v) != want)
            return "vertex '" + g.label(v) + "' has pairing degree " + std::to_string(f.degree(v)) + ", expected " + std::to_string(want);
    }
    return {};
}

inline bool is_pairing(const multigraph& g, const multigraph& f) { return pairing_defect(g, f).empty(); }

inline void require_pairing(const multigraph& g, const multigraph& f)
{
    if (auto why = pairing_defect(g, f); !why.empty()) throw error("invalid odd-vertex pairing: " + why);
}

/// The pairing graph on V(G) with the given matched pairs.
inline multigraph make_pairing(const multigraph& g, const std::vector<std::pair<vertex_id, vertex_id>>& pairs)
{
    graph_builder b;
    for (const auto& l : g.labels()) b.add_vertex(l);
    for (const auto& [u, v] : pairs) b.add_edge(u, v);
    return b.build();
}

/// Calls visit(F) for every perfect matching on the odd vertices of G. The
/// smallest unmatched odd vertex is paired with each later one in index order.
/// visit returns false to stop early.
inline void for_each_pairing(const multigraph& g, const std::function<bool(const multigraph&)>& visit)
{
    auto odd = odd_vertices(g).members();
    std::vector<bool> used(odd.size(), false);
    std::vector<std::pair<vertex_id, vertex_id>> pairs;
    bool stop = false;

    std::function<void()> rec = [&] {
        if (stop) return;
        std::size_t first = 0;
        while (first < odd.size() && used[first]) ++first;
        if (first == odd.size()) {
            if (!visit(make_pairing(g, pairs))) stop = true;
            return;
        }
        used[first] = true;
        for (std::size_t j = first + 1; j < odd.size() && !stop; ++j) {
            if (used[j]) continue;
            used[j] = true;
            pairs.emplace_back(odd[first], odd[j]);
            rec();
            pairs.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec();
}

inline std::vector<multigraph> enumerate_pairings(const multigraph& g)
{
    std::vector<multigraph> out;
    for_each_pairing(g, [&](const multigraph& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

/// A set X with d_G(X) - d_F(X) < R_G(X).
struct cut_violation {
    vertex_set x;
    count_t cut_g = 0;
    count_t cut_f = 0;
    count_t r = 0;

    count_t margin() const { return cut_g - cut_f; }
};

/// Checks the cut condition on one set; returns the violation if it fails.
inline std::optional<cut_violation> check_cut_certificate(const multigraph& g, const multigraph& f, const vertex_set& x)
{
    require_pairing(g, f);
    cut_violation v{x, cut_size(g, x), cut_size(f, x), 0};
    v.r = r_value(g, x);
    if (v.cut_g - v.cut_f < v.r) return v;
    return std::nullopt;
}

/// Exhaustive cut-admissibility. Returns nothing if F is cut-admissible,
/// otherwise the violation whose vertex mask (bit i = vertex i, normalised to
/// contain vertex 0) is smallest.
inline std::optional<cut_violation> decide_ca(const multigraph& g, const multigraph& f, const search_limits& limits = {})
{
    require_pairing(g, f);
    const auto n = g.vertex_count();
    enforce_bound(n <= limits.ca_max_vertices && n <= 32,
                  "decide ca: " + std::to_string(n) + " vertices exceeds the bound of " +
                      std::to_string(limits.ca_max_vertices) + "; check individual sets with 'check ca-cert'");
    if (n <= 1) return std::nullopt;

    auto lam = all_pairs_lambda(g);

    // For even r, "lambda >= r" is an equivalence relation, and R_G(X) is the
    // largest r for which X splits one of its classes.
    std::vector<count_t> levels;
    for (vertex_id s = 0; s < n; ++s)
        for (vertex_id t = s + 1; t < n; ++t)
            if (even_floor(lam[s][t]) > 0) levels.push_back(even_floor(lam[s][t]));
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<std::vector<std::uint32_t>> classes(levels.size());
    for (std::size_t li = 0; li < levels.size(); ++li) {
        std::vector<std::uint32_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0U);
        std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t a) {
            return parent[a] == a ? a : parent[a] = root(parent[a]);
        };
        for (vertex_id s = 0; s < n; ++s)
            for (vertex_id t = s + 1; t < n; ++t)
                if (lam[s][t] >= levels[li]) parent[root(s)] = root(t);
        std::vector<std::uint32_t> mask(n, 0);
        for (vertex_id v = 0; v < n; ++v) mask[root(v)] |= 1U << v;
        for (auto m : mask)
            if (std::popcount(m) >= 2) classes[li].push_back(m);
    }
    auto r_of = [&](std::uint32_t x) -> count_t {
        for (std::size_t li = 0; li < levels.size(); ++li)
            for (auto c : classes[li])
                if ((x & c) != 0 && (x & c) != c) return levels[li];
        return 0;
    };

    std::vector<std::vector<count_t>> wg(n, std::vector<count_t>(n, 0));
    auto wf = wg;
    for (const auto& e : g.edges()) wg[e.u][e.v] = wg[e.v][e.u] = e.mult;
    for (const auto& e : f.edges()) wf[e.u][e.v] = wf[e.v][e.u] = e.mult;

    // Gray-code walk over the sets containing vertex 0.
    std::uint32_t x = 1;
    count_t cut_g = g.degree(0);
    count_t cut_f = f.degree(0);
    std::optional<std::uint32_t> best;
    auto consider = [&] {
        if (cut_g - cut_f < r_of(x) && (!best || x < *best)) best = x;
    };
    consider();
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        auto v = static_cast<vertex_id>(std::countr_zero(i) + 1);
        count_t to_g = 0;
        count_t to_f = 0;
        for (vertex_id u = 0; u < n; ++u)
            if (u != v && (x >> u & 1U)) {
                to_g += wg[u][v];
                to_f += wf[u][v];
            }
        if (x >> v & 1U) {
            cut_g -= g.degree(v) - 2 * to_g;
            cut_f -= f.degree(v) - 2 * to_f;
        } else {
            cut_g += g.degree(v) - 2 * to_g;
            cut_f += f.degree(v) - 2 * to_f;
        }
        x ^= 1U << v;
        consider();
    }
    if (!best) return std::nullopt;
    auto set = vertex_set::from_mask(n, *best);
    return cut_violation{set, cut_size(g, set), cut_size(f, set), r_value(lam, set)};
}

/// An eulerian orientation of G + F whose G part fails well-balance at (source, sink).
struct orientation_counterexample {
    orientation g_part;
    orientation f_part;
    vertex_id source = 0;
    vertex_id sink = 0;
    count_t directed = 0;  // lambda of g_part from source to sink
    count_t required = 0;  // floor(lambda_G(source, sink) / 2)
};

/// Exhaustive orientation-admissibility: enumerates every eulerian orientation
/// of G + F and checks the restriction to G. Returns the first counterexample,
/// or nothing if F is orientation-admissible.
inline std::optional<orientation_counterexample> decide_oa(const multigraph& g, const multigraph& f,
                                                           const search_limits& limits = {})
{
    require_pairing(g, f);
    enforce_bound(g.edge_count() + f.edge_count() <= limits.oa_max_edges,
                  "decide oa: " + std::to_string(g.edge_count() + f.edge_count()) +
                      " edges in G+F exceeds the bound of " + std::to_string(limits.oa_max_edges));
    const auto n = g.vertex_count();
    auto lam = all_pairs_lambda(g);

    struct variable {
        vertex_id u, v;
        count_t mult;
        bool in_f;
        std::size_t pair;
    };
    std::vector<variable> vars;
    for (std::size_t i = 0; i < g.pair_count(); ++i) vars.push_back({g.edge_at(i).u, g.edge_at(i).v, g.edge_at(i).mult, false, i});
    for (std::size_t i = 0; i < f.pair_count(); ++i) vars.push_back({f.edge_at(i).u, f.edge_at(i).v, f.edge_at(i).mult, true, i});
    std::stable_sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v, a.in_f) < std::tie(b.u, b.v, b.in_f);
    });

    std::vector<count_t> balance(n, 0);
    std::vector<count_t> open(n, 0);
    for (const auto& var : vars) {
        open[var.u] += var.mult;
        open[var.v] += var.mult;
    }
    std::vector<count_t> g_fwd(g.pair_count(), 0);
    std::vector<count_t> f_fwd(f.pair_count(), 0);
    std::set<std::vector<count_t>> checked;
    std::optional<orientation_counterexample> found;

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (found) return;
        if (k == vars.size()) {
            if (!checked.insert(g_fwd).second) return;
            orientation dg(g, g_fwd);
            if (auto bad = find_balance_violation(dg, lam))
                found = orientation_counterexample{dg, orientation(f, f_fwd), bad->source, bad->sink, bad->directed, bad->required};
            return;
        }
        const auto& var = vars[k];
        open[var.u] -= var.mult;
        open[var.v] -= var.mult;
        for (count_t c = 0; c <= var.mult && !found; ++c) {
            count_t delta = 2 * c - var.mult;  // out minus in at u
            balance[var.u] += delta;
            balance[var.v] -= delta;
            if (std::abs(balance[var.u]) <= open[var.u] && std::abs(balance[var.v]) <= open[var.v]) {
                (var.in_f ? f_fwd : g_fwd)[var.pair] = c;
                rec(k + 1);
            }
            balance[var.u] -= delta;
            balance[var.v] += delta;
        }
        open[var.u] += var.mult;
        open[var.v] += var.mult;
    };
    rec(0);
    return found;
}

/// Raised by attack_orientation when F cannot be completed; carries the set
/// with d_G(X) < d+_F(X) - d-_F(X).
class extension_infeasible : public error {
public:
    extension_infeasible(const std::string& what, vertex_set certificate)
        : error(what), certificate_(std::move(certificate))
    {
    }
    const vertex_set& certificate() const { return certificate_; }

private:
    vertex_set certificate_;
};

/// Orients the F-edges crossing X away from X (all others from smaller to
/// larger index), completes to an eulerian orientation of G + F, and reports
/// the pair (s, t) attaining R_G(X). The out-cut of X in the G part is
/// (d_G(X) - d_F(X)) / 2 < R_G(X) / 2, so lambda(s, t) falls below the
/// well-balance requirement.
inline orientation_counterexample attack_orientation(const multigraph& g, const multigraph& f, const vertex_set& x)
{
    auto violation = check_cut_certificate(g, f, x);
    if (!violation) throw error("attack: the given set satisfies the cut condition");

    std::vector<count_t> f_fwd(f.pair_count());
    for (std::size_t i = 0; i < f.pair_count(); ++i) {
        const auto& e = f.edge_at(i);
        bool u_in = x.contains(e.u);
        bool v_in = x.contains(e.v);
        f_fwd[i] = (!u_in && v_in) ? 0 : e.mult;
    }
    orientation f_dir(f, std::move(f_fwd));
    auto ext = extend_to_eulerian(g, f_dir);
    if (!ext)
        throw extension_infeasible("attack: F cannot be completed to an eulerian orientation (some set has d_G < d_F)",
                                   ext.certificate);

    auto pair = r_value_witness(g, x);
    orientation_counterexample out{*ext.extension, f_dir, pair->source, pair->sink, 0, pair->value / 2};
    out.directed = lambda_solver(out.g_part).value(out.source, out.sink);
    auto bound = violation->margin() / 2;
    if (out.directed > bound || bound >= out.required)
        throw error("attack: arithmetic chain failed (lambda " + std::to_string(out.directed) + ", bound " +
                    std::to_string(bound) + ", required " + std::to_string(out.required) + ")");
    return out;
}

}  // namespace orient
