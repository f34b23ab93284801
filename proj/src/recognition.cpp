#include "mtclab/recognition.hpp"

#include <algorithm>

#include "mtclab/error.hpp"
#include "mtclab/search.hpp"

namespace mtclab {

HoleWitness canonical_hole(std::vector<Vertex> cycle) {
    if (cycle.empty()) return {};
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return HoleWitness{std::move(cycle)};
}

bool hole_valid(const SimpleGraph& g, const HoleWitness& h) {
    const std::size_t len = h.cycle.size();
    if (len < 4) return false;
    VertexSet members;
    for (Vertex v : h.cycle) {
        if (v >= g.order() || members.contains(v)) return false;
        members.insert(v);
    }
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex v = h.cycle[i];
        const VertexSet expected{h.cycle[(i + 1) % len], h.cycle[(i + len - 1) % len]};
        if ((g.neighbors(v) & members) != expected) return false;
    }
    return true;
}

bool at_valid(const SimpleGraph& g, const ATWitness& at) {
    const VertexSet triple{at.triple[0], at.triple[1], at.triple[2]};
    if (triple.size() != 3 || !g.is_stable(triple)) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vertex a = at.triple[(i + 1) % 3];
        const Vertex b = at.triple[(i + 2) % 3];
        const std::vector<Vertex>& p = at.paths[i];
        if (p.empty()) return false;
        const bool endpoints = (p.front() == a && p.back() == b) || (p.front() == b && p.back() == a);
        if (!endpoints) return false;
        const VertexSet forbidden = g.closed_neighborhood(at.triple[i]);
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (forbidden.contains(p[k])) return false;
            if (k > 0 && !g.adjacent(p[k - 1], p[k])) return false;
        }
    }
    return true;
}

namespace {

/// Hole through v, y, z where y, z are non-adjacent neighbors of v, if one exists.
std::optional<HoleWitness> hole_through(const SimpleGraph& g, Vertex v, Vertex y, Vertex z) {
    const VertexSet allowed = (g.vertices() - g.closed_neighborhood(v)) | VertexSet{y, z};
    std::vector<Vertex> path = shortest_path(g, y, z, allowed);
    if (path.empty()) return std::nullopt;
    path.insert(path.begin(), v);
    return canonical_hole(std::move(path));
}

std::optional<HoleWitness> any_hole_by_scan(const SimpleGraph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet nbrs = g.neighbors(v);
        for (Vertex y : nbrs) {
            for (Vertex z : nbrs - g.neighbors(y)) {
                if (z <= y) continue;
                if (auto h = hole_through(g, v, y, z)) return h;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ChordalityResult is_chordal(const SimpleGraph& g) {
    const std::size_t n = g.order();
    // Maximum-cardinality search; the reverse visiting order is the candidate elimination order.
    std::vector<std::size_t> weight(n, 0);
    VertexSet unvisited = g.vertices();
    std::vector<Vertex> visit;
    while (!unvisited.empty()) {
        Vertex pick = unvisited.front();
        for (Vertex v : unvisited) {
            if (weight[v] > weight[pick]) pick = v;
        }
        visit.push_back(pick);
        unvisited.erase(pick);
        for (Vertex w : g.neighbors(pick) & unvisited) ++weight[w];
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    ChordalityResult result;
    for (Vertex v : order) {
        VertexSet later;
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] > pos[v]) later.insert(w);
        }
        if (later.empty()) continue;
        Vertex follower = later.front();
        for (Vertex w : later) {
            if (pos[w] < pos[follower]) follower = w;
        }
        const VertexSet missing = later - VertexSet{follower} - g.neighbors(follower);
        if (missing.empty()) continue;
        result.hole = hole_through(g, v, follower, missing.front());
        if (!result.hole) result.hole = any_hole_by_scan(g);
        return result;
    }
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
}

namespace {

class HoleSearch {
public:
    HoleSearch(const SimpleGraph& g, std::size_t length,
               const std::function<bool(const HoleWitness&)>& visit)
        : g_(g), length_(length), visit_(visit) {}

    /// Returns false when the visitor asked to stop.
    bool run() {
        for (Vertex s = 0; s < g_.order(); ++s) {
            start_ = s;
            above_ = g_.vertices() - VertexSet::first_n(s + 1);
            path_ = {s};
            for (Vertex p1 : g_.neighbors(s) & above_) {
                path_.push_back(p1);
                if (!extend(VertexSet{s, p1}, VertexSet{})) return false;
                path_.pop_back();
            }
        }
        return true;
    }

private:
    // `interior_nbrs` is the union of neighborhoods of path vertices other than
    // the start and the current end.
    bool extend(VertexSet on_path, VertexSet interior_nbrs) {
        const Vertex last = path_.back();
        const VertexSet start_nbrs = g_.neighbors(start_);
        const VertexSet candidates = (g_.neighbors(last) & above_) - on_path - interior_nbrs;
        const VertexSet next_interior = path_.size() >= 2 ? interior_nbrs | g_.neighbors(last) : interior_nbrs;
        for (Vertex u : candidates) {
            if (start_nbrs.contains(u)) {
                if (path_.size() + 1 == length_ && path_.size() >= 3 && path_[1] < u) {
                    path_.push_back(u);
                    const bool go_on = visit_(HoleWitness{path_});
                    path_.pop_back();
                    if (!go_on) return false;
                }
                continue;
            }
            if (path_.size() + 1 >= length_) continue;
            path_.push_back(u);
            const bool go_on = extend(on_path | VertexSet{u}, next_interior);
            path_.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    const SimpleGraph& g_;
    std::size_t length_;
    const std::function<bool(const HoleWitness&)>& visit_;
    Vertex start_ = 0;
    VertexSet above_;
    std::vector<Vertex> path_;
};

}  // namespace

void for_each_hole(const SimpleGraph& g, std::size_t min_length,
                   const std::function<bool(const HoleWitness&)>& visit) {
    if (g.order() > kHoleSearchLimit) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(g.order()) + " vertices, hole search limit is " +
                        std::to_string(kHoleSearchLimit));
    }
    for (std::size_t len = std::max<std::size_t>(min_length, 4); len <= g.order(); ++len) {
        if (!HoleSearch(g, len, visit).run()) return;
    }
}

std::optional<HoleWitness> find_hole(const SimpleGraph& g, std::size_t min_length) {
    std::optional<HoleWitness> found;
    for_each_hole(g, min_length, [&found](const HoleWitness& h) {
        found = h;
        return false;
    });
    return found;
}

C4Result is_c4_free(const SimpleGraph& g) {
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex c : g.vertices() - g.closed_neighborhood(a)) {
            if (c <= a) continue;
            const VertexSet common = g.neighbors(a) & g.neighbors(c);
            for (Vertex b : common) {
                for (Vertex d : common - g.neighbors(b)) {
                    if (d <= b) continue;
                    return C4Result{false, canonical_hole({a, b, c, d})};
                }
            }
        }
    }
    return C4Result{};
}

std::vector<HoleWitness> all_four_holes(const SimpleGraph& g) {
    std::vector<HoleWitness> holes;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex c : g.vertices() - g.closed_neighborhood(a)) {
            if (c <= a) continue;
            const VertexSet common = g.neighbors(a) & g.neighbors(c);
            for (Vertex b : common) {
                for (Vertex d : common - g.neighbors(b)) {
                    if (d > b) holes.push_back(canonical_hole({a, b, c, d}));
                }
            }
        }
    }
    // Each hole is met once per diagonal.
    std::sort(holes.begin(), holes.end(),
              [](const HoleWitness& x, const HoleWitness& y) { return x.cycle < y.cycle; });
    holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
    return holes;
}

std::vector<std::vector<int>> components_outside_closed_neighborhoods(const SimpleGraph& g) {
    std::vector<std::vector<int>> comp(g.order(), std::vector<int>(g.order(), -1));
    for (Vertex z = 0; z < g.order(); ++z) {
        const VertexSet allowed = g.vertices() - g.closed_neighborhood(z);
        VertexSet unseen = allowed;
        int id = 0;
        while (!unseen.empty()) {
            const std::vector<int> dist = bfs_distances(g, unseen.front(), allowed);
            for (Vertex v : allowed) {
                if (dist[v] >= 0) {
                    comp[z][v] = id;
                    unseen.erase(v);
                }
            }
            ++id;
        }
    }
    return comp;
}

namespace {

template <typename Visit>
void scan_asteroidal_triples(const SimpleGraph& g, Visit&& visit) {
    const auto comp = components_outside_closed_neighborhoods(g);
    auto together = [&comp](Vertex third, Vertex a, Vertex b) {
        return comp[third][a] >= 0 && comp[third][a] == comp[third][b];
    };
    for (Vertex x = 0; x < g.order(); ++x) {
        const VertexSet free_x = g.vertices() - g.closed_neighborhood(x);
        for (Vertex y : free_x) {
            if (y <= x) continue;
            for (Vertex z : free_x - g.closed_neighborhood(y)) {
                if (z <= y) continue;
                if (together(z, x, y) && together(y, x, z) && together(x, y, z)) {
                    if (!visit(std::array<Vertex, 3>{x, y, z})) return;
                }
            }
        }
    }
}

}  // namespace

std::optional<ATWitness> find_asteroidal_triple(const SimpleGraph& g) {
    std::optional<ATWitness> found;
    scan_asteroidal_triples(g, [&](std::array<Vertex, 3> t) {
        ATWitness at;
        at.triple = t;
        for (std::size_t i = 0; i < 3; ++i) {
            const VertexSet allowed = g.vertices() - g.closed_neighborhood(t[i]);
            at.paths[i] = shortest_path(g, t[(i + 1) % 3], t[(i + 2) % 3], allowed);
        }
        found = std::move(at);
        return false;
    });
    return found;
}

std::vector<std::array<Vertex, 3>> all_asteroidal_triples(const SimpleGraph& g) {
    std::vector<std::array<Vertex, 3>> result;
    scan_asteroidal_triples(g, [&result](std::array<Vertex, 3> t) {
        result.push_back(t);
        return true;
    });
    return result;
}

IntervalResult is_interval(const SimpleGraph& g) {
    IntervalResult result;
    ChordalityResult chordal = is_chordal(g);
    if (!chordal.chordal) {
        result.hole = std::move(chordal.hole);
        return result;
    }
    result.elimination_order = std::move(chordal.elimination_order);
    result.asteroidal_triple = find_asteroidal_triple(g);
    result.interval = !result.asteroidal_triple.has_value();
    return result;
}

}  // namespace mtclab
