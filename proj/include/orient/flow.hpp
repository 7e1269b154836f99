#pragma once

// Integral max-flow (Dinic: blocking flows along shortest augmenting paths)
// with residual-reachability min cuts.

#include <cstdint>
#include <limits>
#include <vector>

#include "graph.hpp"

namespace orient {

class flow_network {
public:
    explicit flow_network(std::size_t n) : out_(n), level_(n), iter_(n) {}

    std::size_t node_count() const { return out_.size(); }

    /// Adds arc from->to with capacity cap, paired with to->from of capacity
    /// rev_cap. An undirected edge is add_arc(u, v, c, c). Returns the index of
    /// the forward arc; its partner is index ^ 1.
    std::size_t add_arc(std::size_t from, std::size_t to, count_t cap, count_t rev_cap = 0)
    {
        auto idx = arcs_.size();
        arcs_.push_back({static_cast<std::uint32_t>(to), cap});
        arcs_.push_back({static_cast<std::uint32_t>(from), rev_cap});
        initial_.push_back(cap);
        initial_.push_back(rev_cap);
        out_[from].push_back(static_cast<std::uint32_t>(idx));
        out_[to].push_back(static_cast<std::uint32_t>(idx + 1));
        return idx;
    }

    void reset()
    {
        for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_[i];
    }

    /// Maximum s-t flow, stopping early once `limit` units are routed.
    count_t max_flow(std::size_t s, std::size_t t, count_t limit = std::numeric_limits<count_t>::max())
    {
        if (s == t) throw error("max_flow: source equals sink");
        count_t total = 0;
        while (total < limit && bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (total < limit) {
                count_t pushed = dfs(s, t, limit - total);
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    /// Nodes reachable from s in the residual network.
    std::vector<bool> source_side(std::size_t s) const
    {
        std::vector<bool> seen(out_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto a : out_[v]) {
                const auto& arc = arcs_[a];
                if (arc.cap > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        return seen;
    }

    /// Net flow pushed along the forward arc `idx`.
    count_t flow_on(std::size_t idx) const { return initial_[idx] - arcs_[idx].cap; }

private:
    struct arc {
        std::uint32_t to;
        count_t cap;
    };

    bool bfs(std::size_t s, std::size_t t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<std::size_t> queue{s};
        level_[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto v = queue[head];
            for (auto a : out_[v]) {
                const auto& e = arcs_[a];
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    count_t dfs(std::size_t v, std::size_t t, count_t pushed)
    {
        if (v == t) return pushed;
        for (auto& i = iter_[v]; i < out_[v].size(); ++i) {
            auto a = out_[v][i];
            auto& e = arcs_[a];
            if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
            count_t got = dfs(e.to, t, std::min(pushed, e.cap));
            if (got > 0) {
                e.cap -= got;
                arcs_[a ^ 1U].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<arc> arcs_;
    std::vector<count_t> initial_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

}  // namespace orient
