#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mtclab/vertex_set.hpp"

namespace mtclab {

using Arc = std::pair<Vertex, Vertex>;

/// Finite simple digraph over at most kMaxVertices labelled vertices.
///
/// Labels are opaque strings; vertices are addressed by their dense index,
/// which is the declaration order of the labels.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::vector<std::string> labels);

    std::size_t order() const { return labels_.size(); }
    std::size_t arc_count() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const;
    Vertex index_of(std::string_view label) const;
    std::optional<Vertex> find(std::string_view label) const;
    VertexSet vertices() const { return VertexSet::first_n(order()); }

    /// Adds u -> v. Adding an existing arc is a no-op.
    void add_arc(Vertex u, Vertex v);
    void remove_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const;

    VertexSet out_neighbors(Vertex v) const;
    VertexSet in_neighbors(Vertex v) const;
    std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

    /// Arcs sorted by (tail, head) index.
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph&) const = default;

private:
    void check(Vertex v) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// True iff a directed walk of length at most `bound` leads from u to w in
/// D minus `excluded`. u == w counts as distance 0. `bound` must be 1 or 2.
bool distance_at_most(const Digraph& d, Vertex u, Vertex w, std::optional<Vertex> excluded,
                      int bound);

/// Induced subdigraph on V(D) - {v}; remaining vertices keep their relative order.
Digraph delete_vertex(const Digraph& d, Vertex v);

}  // namespace mtclab
