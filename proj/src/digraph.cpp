#include "mtclab/digraph.hpp"

#include "mtclab/error.hpp"

namespace mtclab {

Digraph::Digraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxVertices) {
        throw Error(ErrorKind::TooManyVertices,
                    std::to_string(labels_.size()) + " vertices, limit is " +
                        std::to_string(kMaxVertices));
    }
    for (Vertex v = 0; v < labels_.size(); ++v) {
        if (!index_.emplace(labels_[v], v).second) {
            throw Error(ErrorKind::DuplicateVertex, labels_[v]);
        }
    }
    out_.resize(labels_.size());
    in_.resize(labels_.size());
}

std::size_t Digraph::arc_count() const {
    std::size_t total = 0;
    for (VertexSet s : out_) total += s.size();
    return total;
}

void Digraph::check(Vertex v) const {
    if (v >= labels_.size()) {
        throw Error(ErrorKind::VertexNotFound, "index " + std::to_string(v));
    }
}

const std::string& Digraph::label(Vertex v) const {
    check(v);
    return labels_[v];
}

std::optional<Vertex> Digraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Digraph::index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error(ErrorKind::VertexNotFound, std::string(label));
}

void Digraph::add_arc(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw Error(ErrorKind::SelfLoop, labels_[u]);
    out_[u].insert(v);
    in_[v].insert(u);
}

void Digraph::remove_arc(Vertex u, Vertex v) {
    check(u);
    check(v);
    out_[u].erase(v);
    in_[v].erase(u);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return out_[u].contains(v);
}

VertexSet Digraph::out_neighbors(Vertex v) const {
    check(v);
    return out_[v];
}

VertexSet Digraph::in_neighbors(Vertex v) const {
    check(v);
    return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    for (Vertex u = 0; u < out_.size(); ++u) {
        for (Vertex v : out_[u]) result.emplace_back(u, v);
    }
    return result;
}

bool distance_at_most(const Digraph& d, Vertex u, Vertex w, std::optional<Vertex> excluded,
                      int bound) {
    if (bound < 1 || bound > 2) {
        throw Error(ErrorKind::UnsupportedBound, "bound " + std::to_string(bound));
    }
    VertexSet allowed = d.vertices();
    if (!allowed.contains(u)) throw Error(ErrorKind::VertexNotFound, "index " + std::to_string(u));
    if (!allowed.contains(w)) throw Error(ErrorKind::VertexNotFound, "index " + std::to_string(w));
    if (excluded) {
        if (*excluded == u || *excluded == w) {
            throw Error(ErrorKind::InvalidExclusion, d.label(*excluded));
        }
        allowed.erase(*excluded);
    }
    if (u == w) return true;
    // Breadth-first frontier expansion restricted to the allowed vertices.
    VertexSet reached{u};
    VertexSet frontier{u};
    for (int step = 0; step < bound; ++step) {
        VertexSet next;
        for (Vertex x : frontier) next |= d.out_neighbors(x) & allowed;
        next -= reached;
        if (next.contains(w)) return true;
        reached |= next;
        frontier = next;
    }
    return false;
}

Digraph delete_vertex(const Digraph& d, Vertex v) {
    const std::vector<std::string>& old_labels = d.labels();
    if (v >= old_labels.size()) throw Error(ErrorKind::VertexNotFound, "index " + std::to_string(v));
    std::vector<std::string> labels;
    std::vector<Vertex> remap(old_labels.size(), 0);
    for (Vertex x = 0; x < old_labels.size(); ++x) {
        if (x == v) continue;
        remap[x] = labels.size();
        labels.push_back(old_labels[x]);
    }
    Digraph result(std::move(labels));
    for (auto [a, b] : d.arcs()) {
        if (a != v && b != v) result.add_arc(remap[a], remap[b]);
    }
    return result;
}

}  // namespace mtclab
