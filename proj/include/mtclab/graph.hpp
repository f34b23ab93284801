#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mtclab/vertex_set.hpp"

namespace mtclab {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph over at most kMaxVertices labelled vertices.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<std::string> labels);

    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    VertexSet vertices() const { return VertexSet::first_n(order()); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
    VertexSet neighbors(Vertex v) const { return adj_.at(v); }
    VertexSet closed_neighborhood(Vertex v) const { return adj_.at(v) | VertexSet{v}; }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool is_clique(VertexSet s) const;
    bool is_stable(VertexSet s) const;

    /// Edges (u, v), u < v, sorted.
    std::vector<Edge> edges() const;

    /// Induced subgraph on `keep`, preserving the relative vertex order.
    SimpleGraph induced(VertexSet keep) const;
    SimpleGraph complement() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

/// Graphs with labels "1".."n" used by tests and examples.
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph star_graph(std::size_t leaves);
SimpleGraph empty_graph(std::size_t n);

}  // namespace mtclab
