#include "mtclab/graph.hpp"

#include "mtclab/error.hpp"

namespace mtclab {

SimpleGraph::SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxVertices) {
        throw Error(ErrorKind::TooManyVertices, std::to_string(labels_.size()) + " vertices");
    }
    adj_.resize(labels_.size());
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) throw Error(ErrorKind::VertexNotFound, "edge endpoint");
    if (u == v) throw Error(ErrorKind::SelfLoop, labels_[u]);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
    adj_.at(u).erase(v);
    adj_.at(v).erase(u);
}

bool SimpleGraph::is_clique(VertexSet s) const {
    for (Vertex v : s) {
        if (!(s - VertexSet{v}).is_subset_of(adj_[v])) return false;
    }
    return true;
}

bool SimpleGraph::is_stable(VertexSet s) const {
    for (Vertex v : s) {
        if (adj_[v].intersects(s)) return false;
    }
    return true;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> result;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
    std::vector<std::string> labels;
    std::vector<Vertex> remap(order(), 0);
    for (Vertex v : keep) {
        remap[v] = labels.size();
        labels.push_back(labels_[v]);
    }
    SimpleGraph g(std::move(labels));
    for (auto [u, v] : edges()) {
        if (keep.contains(u) && keep.contains(v)) g.add_edge(remap[u], remap[v]);
    }
    return g;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph g(labels_);
    for (Vertex u = 0; u < order(); ++u) {
        g.adj_[u] = vertices() - adj_[u] - VertexSet{u};
    }
    return g;
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

SimpleGraph cycle_graph(std::size_t n) {
    SimpleGraph g(numbered(n));
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(numbered(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph star_graph(std::size_t leaves) {
    SimpleGraph g(numbered(leaves + 1));
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(numbered(n)); }

}  // namespace mtclab
