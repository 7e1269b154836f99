#pragma once

// Local edge- and arc-connectivity by max-flow, the R_G set function and
// well-balancedness checks.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "flow.hpp"
#include "graph.hpp"

namespace orient {

/// A flow value together with a minimum cut side certifying it.
struct flow_result {
    count_t value = 0;
    vertex_set side;  // contains the source, excludes the sink
};

/// Reusable flow network over a fixed graph or orientation. Every query
/// resets the residual capacities, so one solver serves many vertex pairs.
class lambda_solver {
public:
    explicit lambda_solver(const multigraph& g) : net_(g.vertex_count()), n_(g.vertex_count())
    {
        for (const auto& e : g.edges()) net_.add_arc(e.u, e.v, e.mult, e.mult);
        graph_ = &g;
    }

    explicit lambda_solver(const orientation& d) : net_(d.graph().vertex_count()), n_(d.graph().vertex_count())
    {
        const auto& g = d.graph();
        for (std::size_t i = 0; i < g.pair_count(); ++i) {
            const auto& e = g.edge_at(i);
            net_.add_arc(e.u, e.v, d.forward(i), d.backward(i));
        }
        directed_ = &d;
    }

    count_t value(vertex_id s, vertex_id t, count_t limit = std::numeric_limits<count_t>::max())
    {
        check(s, t);
        net_.reset();
        return net_.max_flow(s, t, limit);
    }

    flow_result certify(vertex_id s, vertex_id t)
    {
        check(s, t);
        net_.reset();
        flow_result r;
        r.value = net_.max_flow(s, t);
        auto seen = net_.source_side(s);
        r.side = vertex_set(n_);
        for (vertex_id v = 0; v < n_; ++v)
            if (seen[v]) r.side.insert(v);
#ifdef ORIENT_CHECK_DUALITY
        count_t cut = graph_ ? cut_size(*graph_, r.side) : out_cut(*directed_, r.side);
        if (cut != r.value) throw error("max-flow/min-cut duality violated");
#endif
        return r;
    }

private:
    void check(vertex_id s, vertex_id t) const
    {
        if (s >= n_ || t >= n_) throw error("flow endpoint out of range");
        if (s == t) throw error("local connectivity needs two distinct vertices");
    }

    flow_network net_;
    std::size_t n_;
    const multigraph* graph_ = nullptr;
    const orientation* directed_ = nullptr;
};

/// lambda_G(s,t) with the residual-reachable side of a minimum cut.
inline flow_result lambda_undirected(const multigraph& g, vertex_id s, vertex_id t)
{
    return lambda_solver(g).certify(s, t);
}

/// lambda_D(s,t): arc-disjoint s->t paths, certified by a set with minimum out-cut.
inline flow_result lambda_directed(const orientation& d, vertex_id s, vertex_id t)
{
    return lambda_solver(d).certify(s, t);
}

/// Symmetric all-pairs table of lambda_G; the diagonal is zero.
using lambda_table = std::vector<std::vector<count_t>>;

inline lambda_table all_pairs_lambda(const multigraph& g)
{
    auto n = g.vertex_count();
    lambda_table table(n, std::vector<count_t>(n, 0));
    lambda_solver solver(g);
    for (vertex_id s = 0; s < n; ++s)
        for (vertex_id t = s + 1; t < n; ++t) table[s][t] = table[t][s] = solver.value(s, t);
    return table;
}

inline count_t even_floor(count_t x) { return 2 * (x / 2); }

/// The pair achieving R_G(X) together with its value.
struct r_witness {
    count_t value = 0;
    vertex_id source = 0;
    vertex_id sink = 0;
};

namespace detail {

inline std::vector<vertex_id> by_degree_desc(const multigraph& g, std::vector<vertex_id> vs)
{
    std::stable_sort(vs.begin(), vs.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    return vs;
}

}  // namespace detail

/// R_G(X) = max over s in X, t outside X of 2*floor(lambda_G(s,t)/2), and 0 for
/// X empty or X = V.
///
/// lambda_G(s,t) <= min(d(s), d(t)), so pairs are visited by decreasing degree
/// bound and the scan stops once no remaining pair can beat the best value.
inline count_t r_value(const multigraph& g, const vertex_set& x)
{
    require_subset(g, x);
    auto inside = detail::by_degree_desc(g, x.members());
    auto outside = detail::by_degree_desc(g, x.complement().members());
    if (inside.empty() || outside.empty()) return 0;
    lambda_solver solver(g);
    count_t best = 0;
    for (auto s : inside) {
        if (even_floor(g.degree(s)) <= best) break;
        for (auto t : outside) {
            count_t bound = even_floor(std::min(g.degree(s), g.degree(t)));
            if (bound <= best) break;
            best = std::max(best, even_floor(solver.value(s, t, bound + 1)));
        }
    }
    return best;
}

/// R_G(X) from a precomputed lambda table.
inline count_t r_value(const lambda_table& lam, const vertex_set& x)
{
    count_t best = 0;
    for (auto s : x.members())
        for (vertex_id t = 0; t < lam.size(); ++t)
            if (!x.contains(t)) best = std::max(best, even_floor(lam[s][t]));
    return best;
}

/// The lexicographically first (s, t), s in X, t outside X, with
/// 2*floor(lambda_G(s,t)/2) = R_G(X). Empty for X in {empty, V}.
inline std::optional<r_witness> r_value_witness(const multigraph& g, const vertex_set& x)
{
    auto r = r_value(g, x);
    auto inside = x.members();
    auto outside = x.complement().members();
    if (inside.empty() || outside.empty()) return std::nullopt;
    lambda_solver solver(g);
    for (auto s : inside)
        for (auto t : outside) {
            if (even_floor(std::min(g.degree(s), g.degree(t))) < r) continue;
            if (even_floor(solver.value(s, t, r + 1)) == r) return r_witness{r, s, t};
        }
    throw error("r_value_witness: no pair attains R_G(X)");
}

/// A pair at which an orientation falls short of well-balance.
struct balance_violation {
    vertex_id source;
    vertex_id sink;
    count_t directed;  // lambda of the orientation
    count_t required;  // floor(lambda_G / 2)
};

/// First ordered pair (u, v) in index order with lambda_D(u,v) < floor(lambda_G(u,v)/2).
inline std::optional<balance_violation> find_balance_violation(const orientation& d, const lambda_table& lam)
{
    auto n = d.graph().vertex_count();
    if (lam.size() != n) throw error("lambda table size does not match the orientation");
    lambda_solver solver(d);
    for (vertex_id u = 0; u < n; ++u) {
        for (vertex_id v = 0; v < n; ++v) {
            if (u == v) continue;
            count_t need = lam[u][v] / 2;
            if (need == 0) continue;
            // A flow stopped short of the limit is the exact maximum.
            count_t got = solver.value(u, v, need);
            if (got < need) return balance_violation{u, v, got, need};
        }
    }
    return std::nullopt;
}

/// Well-balance of D against its underlying graph G. The witness carries the
/// exact directed lambda of the first violating pair.
inline std::optional<balance_violation> find_balance_violation(const multigraph& g, const orientation& d)
{
    if (!(g == d.graph())) throw error("orientation does not orient the given graph");
    return find_balance_violation(d, all_pairs_lambda(g));
}

inline bool is_well_balanced(const multigraph& g, const orientation& d)
{
    return !find_balance_violation(g, d).has_value();
}

}  // namespace orient
