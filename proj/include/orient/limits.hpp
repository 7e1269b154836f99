#pragma once

#include <cstddef>
#include <string>

#include "graph.hpp"

namespace orient {

/// Raised when an exhaustive procedure is asked to search beyond its bound.
class size_bound_error : public error {
public:
    using error::error;
};

/// Size bounds for the exhaustive deciders and brute-force oracles.
struct search_limits {
    std::size_t ca_max_vertices = 22;
    count_t oa_max_edges = 18;  // |E(G)| + |E(F)|
    std::size_t maxcut_max_vertices = 20;
    count_t orientation_max_edges = 20;  // bwbo, laco, wbo oracles
    std::size_t pairing_max_vertices = 12;
    std::size_t pairing_max_odd = 8;
};

inline void enforce_bound(bool ok, const std::string& what)
{
    if (!ok) throw size_bound_error(what);
}

}  // namespace orient
