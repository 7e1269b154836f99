#pragma once

// The hardness reductions with witness translation:
//   MAXCUT -> AMAXCUT (edge doubling),
//   AMAXCUT -> the intermediate graph G1 and the cut-admissibility instance (G2, F),
//   BWBO -> LACO (two hub vertices x and y).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "admissibility.hpp"
#include "connectivity.hpp"
#include "graph.hpp"
#include "grid.hpp"

namespace orient {

/// Edge records (label_a, label_b, multiplicity) with label_a < label_b,
/// sorted. Two graphs with equal label sets and equal records are the same
/// multigraph up to vertex order.
using edge_record = std::tuple<std::string, std::string, count_t>;

inline std::vector<edge_record> edge_records(const multigraph& g)
{
    std::vector<edge_record> out;
    out.reserve(g.pair_count());
    for (const auto& e : g.edges()) {
        auto a = g.label(e.u);
        auto b = g.label(e.v);
        if (b < a) std::swap(a, b);
        out.emplace_back(std::move(a), std::move(b), e.mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same_labelled_graph(const multigraph& a, const multigraph& b)
{
    auto la = a.labels();
    auto lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    return la == lb && edge_records(a) == edge_records(b);
}

/// Quotient of g by a vertex labelling; edges inside a group vanish.
inline multigraph contract(const multigraph& g, const std::vector<std::string>& group)
{
    if (group.size() != g.vertex_count()) throw error("contract: one group label per vertex required");
    graph_builder b;
    for (const auto& name : group)
        if (!b.find(name)) b.add_vertex(name);
    for (const auto& e : g.edges())
        if (group[e.u] != group[e.v]) b.add_edge(group[e.u], group[e.v], e.mult);
    return b.build();
}

// ---------------------------------------------------------------- AMAXCUT --

struct amaxcut_instance {
    multigraph h;
    count_t k = 0;
};

inline std::string amaxcut_defect(const multigraph& h, count_t k)
{
    if (h.edge_count() < 6) return "needs at least 6 edges, has " + std::to_string(h.edge_count());
    if (h.edge_count() % 2 != 0) return "edge count " + std::to_string(h.edge_count()) + " is odd";
    for (vertex_id v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) % 2 != 0) return "vertex '" + h.label(v) + "' has odd degree";
    if (k % 2 != 0) return "threshold " + std::to_string(k) + " is odd";
    if (k < 0) return "threshold is negative";
    return {};
}

inline amaxcut_instance make_amaxcut(multigraph h, count_t k)
{
    if (auto why = amaxcut_defect(h, k); !why.empty()) throw error("not an AMAXCUT instance: " + why);
    return {std::move(h), k};
}

/// Doubles every edge and the threshold; d_H'(X) = 2 d_H(X) for every X.
inline amaxcut_instance maxcut_to_amaxcut(const multigraph& h, count_t k)
{
    if (h.edge_count() < 3) throw error("maxcut_to_amaxcut: needs at least 3 edges, has " + std::to_string(h.edge_count()));
    graph_builder b;
    for (const auto& l : h.labels()) b.add_vertex(l);
    for (const auto& e : h.edges()) b.add_edge(e.u, e.v, 2 * e.mult);
    return make_amaxcut(b.build(), 2 * k);
}

/// Constants shared by G1 and (G2, F): n = |V_H|, m = |E_H|, M = mn - k.
struct reduction_constants {
    count_t n = 0;
    count_t m = 0;
    count_t k = 0;
    count_t big_m = 0;
};

inline reduction_constants constants_of(const amaxcut_instance& inst)
{
    reduction_constants c;
    c.n = static_cast<count_t>(inst.h.vertex_count());
    c.m = inst.h.edge_count();
    c.k = inst.k;
    c.big_m = c.m * c.n - c.k;
    return c;
}

namespace detail {

inline void check_reserved_labels(const multigraph& h)
{
    for (const auto* name : {"q", "s", "t"})
        if (h.find(name)) throw error(std::string("seed graph uses the reserved vertex label '") + name + "'");
}

inline std::vector<vertex_id> by_label(const multigraph& h)
{
    std::vector<vertex_id> order(h.vertex_count());
    for (vertex_id v = 0; v < order.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return h.label(a) < h.label(b); });
    return order;
}

}  // namespace detail

// --------------------------------------------------------------------- G1 --

struct g1_instance {
    multigraph graph;
    vertex_id q = 0;
    vertex_id s = 1;
    vertex_id t = 2;
    reduction_constants constants;
    std::vector<vertex_id> h_vertex;  // G1 id of the H vertex with that index
};

/// G1 on V_H + {q, s, t}: M parallel q-s edges and m parallel edges from each
/// of s and t to every vertex of H.
inline g1_instance build_g1(const amaxcut_instance& inst)
{
    detail::check_reserved_labels(inst.h);
    g1_instance out;
    out.constants = constants_of(inst);
    if (out.constants.big_m < 1)
        throw error("build_g1: M = mn - k = " + std::to_string(out.constants.big_m) + " is not positive (threshold too large)");
    graph_builder b;
    out.q = b.add_vertex("q");
    out.s = b.add_vertex("s");
    out.t = b.add_vertex("t");
    for (const auto& l : inst.h.labels()) out.h_vertex.push_back(b.add_vertex(l));
    b.add_edge(out.q, out.s, out.constants.big_m);
    for (auto v : out.h_vertex) {
        b.add_edge(out.s, v, out.constants.m);
        b.add_edge(out.t, v, out.constants.m);
    }
    out.graph = b.build();
    return out;
}

/// d_G1(X) - d_H(X cap V_H) for a set X of G1 vertices.
inline count_t g1_margin(const g1_instance& g1, const multigraph& h, const vertex_set& x)
{
    vertex_set xh(h.vertex_count());
    for (vertex_id v = 0; v < h.vertex_count(); ++v)
        if (x.contains(g1.h_vertex[v])) xh.insert(v);
    return cut_size(g1.graph, x) - cut_size(h, xh);
}

// --------------------------------------------------------------- (G2, F) --

struct ca_instance {
    amaxcut_instance seed;
    reduction_constants constants;
    multigraph g2;
    multigraph f;
    vertex_id q = 0;
    vertex_id t = 0;
    grid_spec ws;
    std::vector<grid_spec> wv;                 // indexed by H vertex
    std::vector<std::vector<vertex_id>> b_set;  // B_v, indexed by H vertex
    std::vector<std::string> group;            // "q", "t", "s" or the H label, per G2 vertex
};

inline std::string gadget_prefix(const std::string& h_label) { return "W" + h_label + ":"; }

/// The cut-admissibility instance (G2, F) built from an AMAXCUT instance.
///
/// Every H vertex v becomes an augmented (M+m+1, m+d_H(v)/2)-grid W^v and s
/// becomes an augmented (M+m+1, M+k/2)-grid W^s. q is joined to L_M(W^s); the
/// remaining ports of W^s are matched to the union of the L_m(W^v); every
/// P_m(W^v) vertex is joined to t. The ports B_v left over in W^v carry F, one
/// F edge between B_u and B_v per edge uv of H.
///
/// Both port lists are taken in (gadget label, L before P, index) order and
/// matched positionally; H edges are processed in label order and each takes
/// the lowest free port on either side.
inline ca_instance build_ca_instance(const amaxcut_instance& inst)
{
    detail::check_reserved_labels(inst.h);
    if (auto why = amaxcut_defect(inst.h, inst.k); !why.empty()) throw error("build_ca_instance: " + why);
    const auto& h = inst.h;
    ca_instance out;
    out.seed = inst;
    out.constants = constants_of(inst);
    const auto c = out.constants;
    if (c.big_m < 2)
        throw error("build_ca_instance: M = mn - k = " + std::to_string(c.big_m) + " must be at least 2 (threshold too large)");
    const int alpha = static_cast<int>(c.big_m + c.m + 1);

    graph_builder b;
    out.q = b.add_vertex("q");
    out.ws = add_augmented_grid(b, alpha, static_cast<int>(c.big_m + c.k / 2), "Ws:");
    auto order = detail::by_label(h);
    out.wv.resize(h.vertex_count());
    for (auto v : order)
        out.wv[v] = add_augmented_grid(b, alpha, static_cast<int>(c.m + h.degree(v) / 2), gadget_prefix(h.label(v)));
    out.t = b.add_vertex("t");

    for (auto l : out.ws.l_first(static_cast<int>(c.big_m))) b.add_edge(out.q, l);

    std::vector<vertex_id> s_ports(out.ws.l.begin() + c.big_m, out.ws.l.end());
    s_ports.insert(s_ports.end(), out.ws.p.begin(), out.ws.p.end());
    std::vector<vertex_id> v_ports;
    for (auto v : order) {
        auto ls = out.wv[v].l_first(static_cast<int>(c.m));
        v_ports.insert(v_ports.end(), ls.begin(), ls.end());
    }
    if (s_ports.size() != v_ports.size())
        throw error("build_ca_instance: port counts differ (" + std::to_string(s_ports.size()) + " vs " +
                    std::to_string(v_ports.size()) + ")");
    for (std::size_t i = 0; i < s_ports.size(); ++i) b.add_edge(s_ports[i], v_ports[i]);

    for (auto v : order)
        for (auto p : out.wv[v].p_first(static_cast<int>(c.m))) b.add_edge(p, out.t);

    out.b_set.resize(h.vertex_count());
    for (vertex_id v = 0; v < h.vertex_count(); ++v) {
        const auto& w = out.wv[v];
        out.b_set[v].assign(w.l.begin() + c.m, w.l.end());
        out.b_set[v].insert(out.b_set[v].end(), w.p.begin() + c.m, w.p.end());
    }

    out.g2 = b.build();

    graph_builder fb;
    for (const auto& l : out.g2.labels()) fb.add_vertex(l);
    std::vector<std::size_t> next_free(h.vertex_count(), 0);
    std::vector<std::tuple<std::string, std::string, vertex_id, vertex_id, count_t>> h_edges;
    for (const auto& e : h.edges()) {
        auto [a, z] = std::minmax(e.u, e.v, [&](auto x, auto y) { return h.label(x) < h.label(y); });
        h_edges.emplace_back(h.label(a), h.label(z), a, z, e.mult);
    }
    std::sort(h_edges.begin(), h_edges.end());
    for (const auto& [la, lz, a, z, mult] : h_edges)
        for (count_t i = 0; i < mult; ++i) fb.add_edge(out.b_set[a][next_free[a]++], out.b_set[z][next_free[z]++]);
    out.f = fb.build();

    out.group.assign(out.g2.vertex_count(), "");
    out.group[out.q] = "q";
    out.group[out.t] = "t";
    for (auto v : out.ws.cells) out.group[v] = "s";
    for (vertex_id v = 0; v < h.vertex_count(); ++v)
        for (auto cell : out.wv[v].cells) out.group[cell] = h.label(v);
    return out;
}

/// X' = {q} + the gadgets of the selected H vertices + W^s if "s" is selected.
/// The selection names H vertices and optionally "s" (and "q", which is implied).
inline vertex_set lift_cut(const ca_instance& ca, const std::vector<std::string>& selection)
{
    std::set<std::string> chosen{"q"};
    for (const auto& name : selection) {
        if (name == "t") throw error("lift_cut: t is never on the q side");
        if (name != "q" && name != "s" && !ca.seed.h.find(name)) throw error("lift_cut: unknown seed vertex '" + name + "'");
        chosen.insert(name);
    }
    vertex_set x(ca.g2.vertex_count());
    for (vertex_id v = 0; v < ca.g2.vertex_count(); ++v)
        if (chosen.count(ca.group[v])) x.insert(v);
    return x;
}

/// The G1 set {q} + selection, for comparing margins across the two graphs.
inline vertex_set g1_selection(const g1_instance& g1, const std::vector<std::string>& selection)
{
    vertex_set x(g1.graph.vertex_count());
    x.insert(g1.q);
    for (const auto& name : selection) {
        if (name == "t") throw error("g1_selection: t is never on the q side");
        x.insert(g1.graph.id(name));
    }
    return x;
}

/// Gadget-complete rounding of a G2 set: the seed names (H labels and "s")
/// whose gadgets lie entirely on q's side of X.
inline std::vector<std::string> round_to_gadgets(const ca_instance& ca, const vertex_set& x)
{
    auto side = x.contains(ca.q) ? x : x.complement();
    std::map<std::string, bool> whole;
    for (vertex_id v = 0; v < ca.g2.vertex_count(); ++v) {
        const auto& name = ca.group[v];
        if (name == "q" || name == "t") continue;
        auto [it, fresh] = whole.emplace(name, true);
        if (!side.contains(v)) it->second = false;
    }
    std::vector<std::string> out;
    for (const auto& [name, all] : whole)
        if (all) out.push_back(name);
    return out;
}

/// 2*floor(min(max degree in X, max degree outside X) / 2).
inline count_t r_degree_formula(const multigraph& g, const vertex_set& x)
{
    count_t in_max = -1;
    count_t out_max = -1;
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        auto& side = x.contains(v) ? in_max : out_max;
        side = std::max(side, g.degree(v));
    }
    if (in_max < 0 || out_max < 0) return 0;
    return even_floor(std::min(in_max, out_max));
}

/// Outcome of checking d_G2(X) >= d_F(X) over a family of sets.
struct overload_report {
    std::size_t sets = 0;
    std::size_t failures = 0;
    std::optional<vertex_set> first_failure;
};

/// Checks d_G2(X) >= d_F(X) on singletons, whole gadgets, single grid rows,
/// min-cut sides of the flows between the two ends of every F edge, and
/// `samples` random gadget unions and random vertex sets drawn from `seed`.
inline overload_report check_no_overloaded_cut(const ca_instance& ca, std::uint64_t seed, std::size_t samples)
{
    overload_report rep;
    const auto n = ca.g2.vertex_count();
    auto test = [&](const vertex_set& x) {
        ++rep.sets;
        if (cut_size(ca.g2, x) < cut_size(ca.f, x)) {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = x;
        }
    };
    for (vertex_id v = 0; v < n; ++v) {
        vertex_set x(n);
        x.insert(v);
        test(x);
    }
    std::vector<const grid_spec*> grids{&ca.ws};
    for (const auto& w : ca.wv) grids.push_back(&w);
    for (const auto* w : grids) {
        test(vertex_set::of(n, w->cells));
        for (int i = 1; i <= w->rows; ++i) {
            vertex_set row(n);
            for (int j = 1; j <= w->cols; ++j) row.insert(w->at(i, j));
            test(row);
        }
    }
    lambda_solver solver(ca.g2);
    for (const auto& e : ca.f.edges()) test(solver.certify(e.u, e.v).side);

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        vertex_set x(n);
        if (i % 2 == 0) {
            std::uint64_t bits = rng();
            for (vertex_id v = 0; v < n; ++v) {
                const auto& name = ca.group[v];
                std::size_t slot = name == "q" ? 0 : name == "t" ? 1 : name == "s" ? 2 : 3 + *ca.seed.h.find(name);
                if (bits >> (slot % 64) & 1U) x.insert(v);
            }
        } else {
            for (vertex_id v = 0; v < n; ++v)
                if (rng() & 1U) x.insert(v);
        }
        test(x);
    }
    return rep;
}

// ----------------------------------------------------------- BWBO -> LACO --

struct bwbo_instance {
    multigraph g;
    std::vector<count_t> lower_out;  // l+ per vertex
    std::vector<count_t> lower_in;   // l- per vertex
};

inline void require_bwbo(const bwbo_instance& inst)
{
    auto n = inst.g.vertex_count();
    if (inst.lower_out.size() != n || inst.lower_in.size() != n) throw error("BWBO instance: one bound pair per vertex required");
    for (std::size_t v = 0; v < n; ++v)
        if (inst.lower_out[v] < 0 || inst.lower_in[v] < 0) throw error("BWBO instance: negative bound at '" + inst.g.label(static_cast<vertex_id>(v)) + "'");
}

/// Requirement table r(u, v) over ordered vertex pairs; r[u][u] is unused.
using requirement_table = std::vector<std::vector<count_t>>;

struct laco_instance {
    multigraph g;  // G' = G + x + y
    requirement_table r;
    vertex_id x = 0;
    vertex_id y = 0;
    std::size_t base_vertices = 0;  // the first vertices of G' are those of G, in order
};

/// First ordered pair (u, v) with lambda_D(u, v) < r(u, v).
struct requirement_violation {
    vertex_id source;
    vertex_id sink;
    count_t got;
    count_t need;
};

inline std::optional<requirement_violation> find_requirement_violation(const orientation& d, const requirement_table& r)
{
    const auto n = d.graph().vertex_count();
    if (r.size() != n) throw error("requirement table does not match the graph");
    lambda_solver solver(d);
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v = 0; v < n; ++v) {
            if (u == v || r[u][v] <= 0) continue;
            auto got = solver.value(u, v, r[u][v]);
            if (got < r[u][v]) return requirement_violation{u, v, got, r[u][v]};
        }
    return std::nullopt;
}

/// Adds hubs x and y, each joined to every v by d_G(v) parallel edges, with
/// r(u,v) = floor(lambda_G(u,v)/2), r(x,v) = d_G(v) + l-(v),
/// r(v,y) = d_G(v) + l+(v), r(x,y) = 2|E| and zero elsewhere.
inline laco_instance bwbo_to_laco(const bwbo_instance& inst)
{
    require_bwbo(inst);
    const auto& g = inst.g;
    for (const auto* name : {"x", "y"})
        if (g.find(name)) throw error(std::string("bwbo_to_laco: the graph uses the reserved vertex label '") + name + "'");
    const auto n = g.vertex_count();
    graph_builder b(g);
    laco_instance out;
    out.base_vertices = n;
    out.x = b.add_vertex("x");
    out.y = b.add_vertex("y");
    for (vertex_id v = 0; v < n; ++v)
        if (g.degree(v) > 0) {
            b.add_edge(v, out.x, g.degree(v));
            b.add_edge(v, out.y, g.degree(v));
        }
    out.g = b.build();

    auto lam = all_pairs_lambda(g);
    out.r.assign(n + 2, std::vector<count_t>(n + 2, 0));
    for (vertex_id u = 0; u < n; ++u)
        for (vertex_id v = 0; v < n; ++v)
            if (u != v) out.r[u][v] = lam[u][v] / 2;
    for (vertex_id v = 0; v < n; ++v) {
        out.r[out.x][v] = g.degree(v) + inst.lower_in[v];
        out.r[v][out.y] = g.degree(v) + inst.lower_out[v];
    }
    out.r[out.x][out.y] = 2 * g.edge_count();
    return out;
}

/// Restricts a LACO solution on G' to G.
inline orientation project_laco_witness(const laco_instance& inst, const orientation& d)
{
    if (!(d.graph() == inst.g)) throw error("project: orientation does not orient the LACO graph");
    if (auto bad = find_requirement_violation(d, inst.r))
        throw error("project: requirement r(" + inst.g.label(bad->source) + "," + inst.g.label(bad->sink) + ") = " +
                    std::to_string(bad->need) + " not met (lambda " + std::to_string(bad->got) + ")");
    vertex_set base(inst.g.vertex_count());
    for (vertex_id v = 0; v < inst.base_vertices; ++v) base.insert(v);
    auto g = induced(inst.g, base);
    std::vector<count_t> fwd(g.pair_count());
    for (std::size_t i = 0; i < g.pair_count(); ++i) {
        const auto& e = g.edge_at(i);
        fwd[i] = d.arcs(e.u, e.v);  // vertex indices coincide on the base part
    }
    return {std::move(g), std::move(fwd)};
}

/// Empty if d is a bounded well-balanced orientation for inst, else the reason.
inline std::string bwbo_defect(const bwbo_instance& inst, const orientation& d)
{
    if (!(d.graph() == inst.g)) return "orientation does not orient the BWBO graph";
    for (vertex_id v = 0; v < inst.g.vertex_count(); ++v) {
        if (d.out_degree(v) < inst.lower_out[v]) return "out-degree of '" + inst.g.label(v) + "' below l+";
        if (d.in_degree(v) < inst.lower_in[v]) return "in-degree of '" + inst.g.label(v) + "' below l-";
    }
    if (auto bad = find_balance_violation(inst.g, d))
        return "not well-balanced at (" + inst.g.label(bad->source) + "," + inst.g.label(bad->sink) + ")";
    return {};
}

/// Extends a BWBO solution to G' with every x edge leaving x and every y edge entering y.
inline orientation lift_bwbo_witness(const bwbo_instance& bw, const laco_instance& inst, const orientation& d)
{
    if (auto why = bwbo_defect(bw, d); !why.empty()) throw error("lift: not a BWBO solution: " + why);
    std::vector<count_t> fwd(inst.g.pair_count());
    for (std::size_t i = 0; i < inst.g.pair_count(); ++i) {
        const auto& e = inst.g.edge_at(i);
        if (e.v == inst.x) fwd[i] = 0;             // e.u < x: orient x -> e.u
        else if (e.v == inst.y) fwd[i] = e.mult;  // e.u -> y
        else fwd[i] = d.arcs(e.u, e.v);
    }
    return {inst.g, std::move(fwd)};
}

}  // namespace orient
