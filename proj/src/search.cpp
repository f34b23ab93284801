#include "mtclab/search.hpp"

#include <algorithm>
#include <deque>

#include "mtclab/error.hpp"

namespace mtclab {

namespace {

void require_exact_size(const SimpleGraph& g) {
    if (g.order() > kExactSearchLimit) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(g.order()) + " vertices, exact search limit is " +
                        std::to_string(kExactSearchLimit));
    }
}

}  // namespace

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source, VertexSet allowed) {
    std::vector<int> dist(g.order(), -1);
    if (!allowed.contains(source)) return dist;
    dist[source] = 0;
    VertexSet seen{source};
    VertexSet frontier{source};
    for (int level = 1; !frontier.empty(); ++level) {
        VertexSet next;
        for (Vertex x : frontier) next |= g.neighbors(x) & allowed;
        next -= seen;
        for (Vertex x : next) dist[x] = level;
        seen |= next;
        frontier = next;
    }
    return dist;
}

std::vector<Vertex> shortest_path(const SimpleGraph& g, Vertex from, Vertex to, VertexSet allowed) {
    std::vector<int> dist = bfs_distances(g, to, allowed);
    if (!allowed.contains(from) || dist[from] < 0) return {};
    std::vector<Vertex> path{from};
    Vertex cur = from;
    while (cur != to) {
        // Step to the smallest neighbor one level closer to `to`.
        for (Vertex next : g.neighbors(cur) & allowed) {
            if (dist[next] == dist[cur] - 1) {
                cur = next;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

std::vector<Component> components_and_diameters(const SimpleGraph& g) {
    std::vector<Component> result;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        const Vertex root = unseen.front();
        Component c;
        std::vector<int> dist = bfs_distances(g, root, g.vertices());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (dist[v] >= 0) c.vertices.insert(v);
        }
        for (Vertex v : c.vertices) {
            std::vector<int> d = bfs_distances(g, v, c.vertices);
            for (Vertex w : c.vertices) {
                c.diameter = std::max(c.diameter, static_cast<std::size_t>(d[w]));
            }
        }
        unseen -= c.vertices;
        result.push_back(c);
    }
    return result;
}

namespace {

class DominationSearch {
public:
    explicit DominationSearch(const SimpleGraph& g) : g_(g) {
        for (Vertex v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighborhood(v));
    }

    std::size_t run() {
        best_ = greedy();
        branch(VertexSet{}, 0);
        return best_;
    }

private:
    std::size_t greedy() const {
        VertexSet covered;
        std::size_t count = 0;
        while (covered != g_.vertices()) {
            Vertex pick = 0;
            std::size_t gain = 0;
            for (Vertex v = 0; v < g_.order(); ++v) {
                std::size_t s = (closed_[v] - covered).size();
                if (s > gain) {
                    gain = s;
                    pick = v;
                }
            }
            covered |= closed_[pick];
            ++count;
        }
        return count;
    }

    void branch(VertexSet covered, std::size_t chosen) {
        const VertexSet open = g_.vertices() - covered;
        if (open.empty()) {
            best_ = std::min(best_, chosen);
            return;
        }
        // Each new vertex covers at most max_gain open vertices.
        std::size_t max_gain = 1;
        for (Vertex v = 0; v < g_.order(); ++v) max_gain = std::max(max_gain, (closed_[v] & open).size());
        const std::size_t lower = chosen + (open.size() + max_gain - 1) / max_gain;
        if (lower >= best_) return;
        // The lowest undominated vertex must be covered by one of its closed neighbors.
        const Vertex target = open.front();
        for (Vertex v : closed_[target]) branch(covered | closed_[v], chosen + 1);
    }

    const SimpleGraph& g_;
    std::vector<VertexSet> closed_;
    std::size_t best_ = 0;
};

class StableSetSearch {
public:
    explicit StableSetSearch(const SimpleGraph& g) : g_(g) {}

    VertexSet run(VertexSet candidates) {
        branch(VertexSet{}, candidates);
        return best_;
    }

private:
    void branch(VertexSet current, VertexSet candidates) {
        if (found_ && current.size() + candidates.size() <= best_.size()) return;
        if (candidates.empty()) {
            best_ = current;
            found_ = true;
            return;
        }
        const Vertex v = candidates.front();
        const VertexSet nbrs = g_.neighbors(v) & candidates;
        branch(current | VertexSet{v}, candidates - nbrs - VertexSet{v});
        // Some maximum set contains a vertex of degree <= 1 in the candidates.
        if (nbrs.size() <= 1) return;
        branch(current, candidates - VertexSet{v});
    }

    const SimpleGraph& g_;
    VertexSet best_;
    bool found_ = false;
};

}  // namespace

std::size_t domination_number(const SimpleGraph& g) {
    require_exact_size(g);
    if (g.order() == 0) return 0;
    return DominationSearch(g).run();
}

VertexSet maximum_stable_set(const SimpleGraph& g, VertexSet candidates) {
    candidates &= g.vertices();
    if (candidates.size() > kExactSearchLimit) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(candidates.size()) + " candidates, exact search limit is " +
                        std::to_string(kExactSearchLimit));
    }
    return StableSetSearch(g).run(candidates);
}

namespace {

// Bron-Kerbosch with pivoting on the complement: cliques of the complement are
// stable sets of g. `non_adj(v)` is the complement neighborhood inside `within`.
bool enumerate_stable(const std::vector<VertexSet>& non_adj, VertexSet r, VertexSet p, VertexSet x,
                      const std::function<bool(VertexSet)>& visit) {
    if (p.empty() && x.empty()) return visit(r);
    Vertex pivot = (p | x).front();
    std::size_t best = 0;
    for (Vertex u : p | x) {
        std::size_t s = (p & non_adj[u]).size();
        if (s > best) {
            best = s;
            pivot = u;
        }
    }
    for (Vertex v : p - non_adj[pivot]) {
        if (!enumerate_stable(non_adj, r | VertexSet{v}, p & non_adj[v], x & non_adj[v], visit)) {
            return false;
        }
        p.erase(v);
        x.insert(v);
    }
    return true;
}

}  // namespace

void for_each_maximal_stable_set(const SimpleGraph& g, VertexSet within,
                                 const std::function<bool(VertexSet)>& visit) {
    within &= g.vertices();
    std::vector<VertexSet> non_adj(g.order());
    for (Vertex v : within) non_adj[v] = within - g.neighbors(v) - VertexSet{v};
    if (within.empty()) {
        visit(VertexSet{});
        return;
    }
    enumerate_stable(non_adj, VertexSet{}, within, VertexSet{}, visit);
}

}  // namespace mtclab
