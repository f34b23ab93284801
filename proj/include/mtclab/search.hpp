#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mtclab/graph.hpp"

namespace mtclab {

inline constexpr std::size_t kExactSearchLimit = 32;

struct Component {
    VertexSet vertices;
    std::size_t diameter = 0;

    bool operator==(const Component&) const = default;
};

/// Connected components ordered by smallest member, with exact diameters.
std::vector<Component> components_and_diameters(const SimpleGraph& g);

/// Breadth-first distances from `source` inside `allowed`; unreachable is -1.
std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source, VertexSet allowed);

/// A shortest path from `from` to `to` using only `allowed` vertices, or empty.
std::vector<Vertex> shortest_path(const SimpleGraph& g, Vertex from, Vertex to, VertexSet allowed);

/// Exact domination number, |V| <= kExactSearchLimit.
std::size_t domination_number(const SimpleGraph& g);

/// A maximum stable set inside `candidates`, |candidates| <= kExactSearchLimit.
/// Among maximum sets, the one found first by the canonical branch order wins.
VertexSet maximum_stable_set(const SimpleGraph& g, VertexSet candidates);

/// Calls `visit` on every maximal stable set of g[within] in canonical order;
/// stops early when `visit` returns false.
void for_each_maximal_stable_set(const SimpleGraph& g, VertexSet within,
                                 const std::function<bool(VertexSet)>& visit);

}  // namespace mtclab
