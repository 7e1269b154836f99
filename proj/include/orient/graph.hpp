#pragma once

// Undirected multigraphs, vertex subsets and orientations, together with the
// degree and cut functionals everything else is built on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orient {

using vertex_id = std::uint32_t;
using count_t = std::int64_t;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An unordered vertex pair with its multiplicity. Always u < v.
struct edge {
    vertex_id u;
    vertex_id v;
    count_t mult;

    friend bool operator==(const edge&, const edge&) = default;
};

class graph_builder;

/// Immutable undirected multigraph without self-loops.
///
/// Vertices are dense indices 0..n-1 carrying unique string labels. Parallel
/// edges are stored as one record per vertex pair with a multiplicity, so the
/// gadget graphs with hundreds of parallel edges stay compact. The edge list is
/// sorted by (u, v) index.
class multigraph {
public:
    struct incidence {
        vertex_id other;
        std::uint32_t edge;
    };

    multigraph() = default;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t pair_count() const { return edges_.size(); }

    /// Total number of edges counting multiplicity.
    count_t edge_count() const { return total_; }

    std::span<const edge> edges() const { return edges_; }
    const edge& edge_at(std::size_t i) const { return edges_.at(i); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(vertex_id v) const
    {
        check_vertex(v);
        return labels_[v];
    }

    std::optional<vertex_id> find(std::string_view label) const
    {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    vertex_id id(std::string_view label) const
    {
        if (auto v = find(label)) return *v;
        throw error("unknown vertex '" + std::string(label) + "'");
    }

    /// Incident pairs of v, sorted by the other endpoint.
    std::span<const incidence> incident(vertex_id v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    count_t degree(vertex_id v) const
    {
        check_vertex(v);
        return degree_[v];
    }

    count_t multiplicity(vertex_id a, vertex_id b) const
    {
        check_vertex(a);
        check_vertex(b);
        for (const auto& inc : adj_[a])
            if (inc.other == b) return edges_[inc.edge].mult;
        return 0;
    }

    std::optional<std::size_t> pair_index(vertex_id a, vertex_id b) const
    {
        check_vertex(a);
        check_vertex(b);
        for (const auto& inc : adj_[a])
            if (inc.other == b) return inc.edge;
        return std::nullopt;
    }

    void check_vertex(vertex_id v) const
    {
        if (v >= labels_.size())
            throw error("vertex index " + std::to_string(v) + " out of range");
    }

    bool same_vertices(const multigraph& other) const { return labels_ == other.labels_; }

    friend bool operator==(const multigraph& a, const multigraph& b)
    {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    friend class graph_builder;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, vertex_id> index_;
    std::vector<edge> edges_;
    std::vector<std::vector<incidence>> adj_;
    std::vector<count_t> degree_;
    count_t total_ = 0;
};

/// Mutable accumulator that produces a multigraph. Repeated add_edge calls on
/// the same pair add up.
class graph_builder {
public:
    graph_builder() = default;

    explicit graph_builder(const multigraph& base)
    {
        for (const auto& l : base.labels()) add_vertex(l);
        for (const auto& e : base.edges()) add_edge(e.u, e.v, e.mult);
    }

    vertex_id add_vertex(std::string label)
    {
        if (index_.count(label)) throw error("duplicate vertex label '" + label + "'");
        auto id = static_cast<vertex_id>(labels_.size());
        index_.emplace(label, id);
        labels_.push_back(std::move(label));
        return id;
    }

    std::optional<vertex_id> find(std::string_view label) const
    {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    vertex_id vertex(std::string_view label) const
    {
        if (auto v = find(label)) return *v;
        throw error("unknown vertex '" + std::string(label) + "'");
    }

    std::size_t vertex_count() const { return labels_.size(); }

    void add_edge(vertex_id a, vertex_id b, count_t mult = 1)
    {
        if (a >= labels_.size() || b >= labels_.size()) throw error("edge endpoint out of range");
        if (a == b) throw error("self-loop at '" + labels_[a] + "' rejected");
        if (mult < 1) throw error("edge multiplicity must be at least 1");
        if (a > b) std::swap(a, b);
        pairs_[{a, b}] += mult;
    }

    void add_edge(std::string_view a, std::string_view b, count_t mult = 1)
    {
        add_edge(vertex(a), vertex(b), mult);
    }

    multigraph build() const
    {
        multigraph g;
        g.labels_ = labels_;
        g.index_ = index_;
        g.adj_.assign(labels_.size(), {});
        g.degree_.assign(labels_.size(), 0);
        g.edges_.reserve(pairs_.size());
        for (const auto& [uv, m] : pairs_) {
            auto idx = static_cast<std::uint32_t>(g.edges_.size());
            g.edges_.push_back({uv.first, uv.second, m});
            g.adj_[uv.first].push_back({uv.second, idx});
            g.adj_[uv.second].push_back({uv.first, idx});
            g.degree_[uv.first] += m;
            g.degree_[uv.second] += m;
            g.total_ += m;
        }
        for (auto& list : g.adj_)
            std::sort(list.begin(), list.end(),
                      [](const auto& x, const auto& y) { return x.other < y.other; });
        return g;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, vertex_id> index_;
    std::map<std::pair<vertex_id, vertex_id>, count_t> pairs_;
};

/// A subset of the vertices of some graph with `universe` vertices.
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(std::size_t universe) : bits_(universe, false) {}

    static vertex_set of(std::size_t universe, std::span<const vertex_id> members)
    {
        vertex_set s(universe);
        for (auto v : members) s.insert(v);
        return s;
    }

    static vertex_set from_labels(const multigraph& g, const std::vector<std::string>& labels)
    {
        vertex_set s(g.vertex_count());
        for (const auto& l : labels) s.insert(g.id(l));
        return s;
    }

    /// Bit i of mask selects vertex i.
    static vertex_set from_mask(std::size_t universe, std::uint64_t mask)
    {
        vertex_set s(universe);
        for (std::size_t i = 0; i < universe && i < 64; ++i)
            if (mask >> i & 1U) s.bits_[i] = true;
        return s;
    }

    static vertex_set full(std::size_t universe)
    {
        vertex_set s(universe);
        s.bits_.assign(universe, true);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }

    bool contains(vertex_id v) const { return v < bits_.size() && bits_[v]; }

    void insert(vertex_id v)
    {
        if (v >= bits_.size()) throw error("vertex index " + std::to_string(v) + " is not in the host graph");
        bits_[v] = true;
    }

    void erase(vertex_id v)
    {
        if (v < bits_.size()) bits_[v] = false;
    }

    std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
    bool empty() const { return size() == 0; }

    vertex_set complement() const
    {
        vertex_set s(*this);
        s.bits_.flip();
        return s;
    }

    std::vector<vertex_id> members() const
    {
        std::vector<vertex_id> out;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(static_cast<vertex_id>(i));
        return out;
    }

    std::vector<std::string> labels(const multigraph& g) const
    {
        std::vector<std::string> out;
        for (auto v : members()) out.push_back(g.label(v));
        return out;
    }

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

private:
    std::vector<bool> bits_;
};

inline void require_subset(const multigraph& g, const vertex_set& x)
{
    if (x.universe() != g.vertex_count())
        throw error("vertex set does not belong to this graph (" + std::to_string(x.universe()) +
                    " vs " + std::to_string(g.vertex_count()) + " vertices)");
}

inline count_t degree(const multigraph& g, vertex_id v) { return g.degree(v); }

/// d_G(X): total multiplicity of edges with exactly one endpoint in X.
inline count_t cut_size(const multigraph& g, const vertex_set& x)
{
    require_subset(g, x);
    count_t total = 0;
    for (const auto& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v)) total += e.mult;
    return total;
}

/// d_G(X, Y) for disjoint X and Y.
inline count_t cut_between(const multigraph& g, const vertex_set& x, const vertex_set& y)
{
    require_subset(g, x);
    require_subset(g, y);
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (x.contains(v) && y.contains(v)) throw error("cut_between: sets overlap at '" + g.label(v) + "'");
    count_t total = 0;
    for (const auto& e : g.edges())
        if ((x.contains(e.u) && y.contains(e.v)) || (y.contains(e.u) && x.contains(e.v))) total += e.mult;
    return total;
}

/// G[X], vertices kept in their original relative order.
inline multigraph induced(const multigraph& g, const vertex_set& x)
{
    require_subset(g, x);
    graph_builder b;
    for (auto v : x.members()) b.add_vertex(g.label(v));
    for (const auto& e : g.edges())
        if (x.contains(e.u) && x.contains(e.v)) b.add_edge(g.label(e.u), g.label(e.v), e.mult);
    return b.build();
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<vertex_id>> components(const multigraph& g)
{
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<vertex_id>> out;
    for (vertex_id root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] >= 0) continue;
        auto c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<vertex_id> stack{root};
        comp[root] = c;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (const auto& inc : g.incident(v))
                if (comp[inc.other] < 0) {
                    comp[inc.other] = c;
                    stack.push_back(inc.other);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const multigraph& g) { return components(g).size() <= 1; }

/// Every degree even; connectivity is not required.
inline bool is_eulerian(const multigraph& g)
{
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

/// G1 + G2 on a common vertex set; multiplicities add.
inline multigraph graph_sum(const multigraph& a, const multigraph& b)
{
    if (!a.same_vertices(b)) throw error("graph_sum: vertex sets differ");
    graph_builder out(a);
    for (const auto& e : b.edges()) out.add_edge(e.u, e.v, e.mult);
    return out.build();
}

/// The edgeless graph on the vertices of g.
inline multigraph empty_like(const multigraph& g)
{
    graph_builder b;
    for (const auto& l : g.labels()) b.add_vertex(l);
    return b.build();
}

/// An orientation of a multigraph: for each stored pair (u < v), how many of its
/// parallel copies point u -> v. The rest point v -> u.
class orientation {
public:
    orientation() = default;

    orientation(multigraph g, std::vector<count_t> forward) : graph_(std::move(g)), forward_(std::move(forward))
    {
        if (forward_.size() != graph_.pair_count()) throw error("orientation: wrong number of pair counts");
        for (std::size_t i = 0; i < forward_.size(); ++i)
            if (forward_[i] < 0 || forward_[i] > graph_.edges()[i].mult)
                throw error("orientation: forward count out of range on pair " + std::to_string(i));
    }

    /// Every copy points from the smaller to the larger vertex index.
    static orientation all_forward(multigraph g)
    {
        std::vector<count_t> fwd;
        fwd.reserve(g.pair_count());
        for (const auto& e : g.edges()) fwd.push_back(e.mult);
        return {std::move(g), std::move(fwd)};
    }

    /// Builds an orientation from arc records (from, to, count); the
    /// underlying graph is the union of the arcs.
    static orientation from_arcs(const std::vector<std::string>& labels,
                                 const std::vector<std::tuple<vertex_id, vertex_id, count_t>>& arcs)
    {
        graph_builder b;
        for (const auto& l : labels) b.add_vertex(l);
        for (const auto& [from, to, c] : arcs)
            if (c > 0) b.add_edge(from, to, c);
        auto g = b.build();
        std::vector<count_t> fwd(g.pair_count(), 0);
        for (const auto& [from, to, c] : arcs) {
            if (c <= 0) continue;
            auto idx = *g.pair_index(from, to);
            if (from < to) fwd[idx] += c;
        }
        return {std::move(g), std::move(fwd)};
    }

    const multigraph& graph() const { return graph_; }
    std::span<const count_t> forward_counts() const { return forward_; }
    count_t forward(std::size_t pair) const { return forward_.at(pair); }
    count_t backward(std::size_t pair) const { return graph_.edge_at(pair).mult - forward_.at(pair); }

    /// Number of arcs from -> to.
    count_t arcs(vertex_id from, vertex_id to) const
    {
        auto idx = graph_.pair_index(from, to);
        if (!idx) return 0;
        return from < to ? forward_[*idx] : backward(*idx);
    }

    count_t out_degree(vertex_id v) const
    {
        count_t total = 0;
        for (const auto& inc : graph_.incident(v))
            total += v < inc.other ? forward_[inc.edge] : backward(inc.edge);
        return total;
    }

    count_t in_degree(vertex_id v) const { return graph_.degree(v) - out_degree(v); }

    /// The same orientation with every arc reversed.
    orientation reversed() const
    {
        std::vector<count_t> fwd(forward_.size());
        for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = backward(i);
        return {graph_, std::move(fwd)};
    }

    friend bool operator==(const orientation&, const orientation&) = default;

private:
    multigraph graph_;
    std::vector<count_t> forward_;
};

/// d+_D(X): arcs leaving X.
inline count_t out_cut(const orientation& d, const vertex_set& x)
{
    const auto& g = d.graph();
    require_subset(g, x);
    count_t total = 0;
    for (std::size_t i = 0; i < g.pair_count(); ++i) {
        const auto& e = g.edge_at(i);
        if (x.contains(e.u) && !x.contains(e.v)) total += d.forward(i);
        else if (x.contains(e.v) && !x.contains(e.u)) total += d.backward(i);
    }
    return total;
}

/// d-_D(X): arcs entering X.
inline count_t in_cut(const orientation& d, const vertex_set& x) { return out_cut(d, x.complement()); }

inline bool is_eulerian_orientation(const orientation& d)
{
    for (vertex_id v = 0; v < d.graph().vertex_count(); ++v)
        if (d.out_degree(v) != d.in_degree(v)) return false;
    return true;
}

/// D1 + D2 on a common vertex set.
inline orientation orientation_sum(const orientation& a, const orientation& b)
{
    if (!a.graph().same_vertices(b.graph())) throw error("orientation_sum: vertex sets differ");
    auto g = graph_sum(a.graph(), b.graph());
    std::vector<count_t> fwd(g.pair_count(), 0);
    for (const auto* d : {&a, &b})
        for (std::size_t i = 0; i < d->graph().pair_count(); ++i) {
            const auto& e = d->graph().edge_at(i);
            fwd[*g.pair_index(e.u, e.v)] += d->forward(i);
        }
    return {std::move(g), std::move(fwd)};
}

}  // namespace orient
