#include "mtclab/competition.hpp"

#include "mtclab/error.hpp"

namespace mtclab {

namespace {

void require_distinct(const MultipartiteTournament& d, Vertex u, Vertex v) {
    if (u >= d.order() || v >= d.order()) throw Error(ErrorKind::VertexNotFound, "pair query");
    if (u == v) throw Error(ErrorKind::SameVertex, d.label(u));
}

/// Smallest m with start -> m -> target, m outside `avoid`.
std::optional<Vertex> two_step_middle(const MultipartiteTournament& d, Vertex start, Vertex target,
                                      Vertex avoid) {
    VertexSet middles = d.out(start) & d.in(target);
    middles.erase(avoid);
    if (middles.empty()) return std::nullopt;
    return middles.front();
}

}  // namespace

std::optional<AdjacencyWitness> competes(const MultipartiteTournament& d, Vertex u, Vertex v) {
    require_distinct(d, u, v);
    VertexSet common = d.out(u) & d.out(v);
    if (common.empty()) return std::nullopt;
    return AdjacencyWitness{WitnessKind::CommonOutNeighbor, common.front(), u, {}};
}

std::optional<AdjacencyWitness> one_two_competes(const MultipartiteTournament& d, Vertex u, Vertex v) {
    require_distinct(d, u, v);
    VertexSet candidates = d.digraph().vertices() - VertexSet{u, v};
    for (Vertex w : candidates) {
        if (d.out(u).contains(w)) {
            if (auto m = two_step_middle(d, v, w, u)) {
                return AdjacencyWitness{WitnessKind::OneTwoStep, w, u, {v, *m, w}};
            }
        }
        if (d.out(v).contains(w)) {
            if (auto m = two_step_middle(d, u, w, v)) {
                return AdjacencyWitness{WitnessKind::OneTwoStep, w, v, {u, *m, w}};
            }
        }
    }
    return std::nullopt;
}

bool witness_valid(const Digraph& d, Vertex u, Vertex v, const AdjacencyWitness& w) {
    if (w.target == u || w.target == v || u == v) return false;
    if (w.kind == WitnessKind::CommonOutNeighbor) {
        return d.has_arc(u, w.target) && d.has_arc(v, w.target);
    }
    if (w.arc_tail != u && w.arc_tail != v) return false;
    const Vertex other = w.arc_tail == u ? v : u;
    if (w.path.size() != 3 || w.path[0] != other || w.path[2] != w.target) return false;
    if (w.path[1] == w.arc_tail || w.path[1] == other || w.path[1] == w.target) return false;
    return d.has_arc(w.arc_tail, w.target) && d.has_arc(w.path[0], w.path[1]) &&
           d.has_arc(w.path[1], w.path[2]);
}

bool adjacent_oracle(const MultipartiteTournament& d, Vertex u, Vertex v) {
    require_distinct(d, u, v);
    const Digraph& g = d.digraph();
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        if (distance_at_most(g, u, w, v, 1) && distance_at_most(g, v, w, u, 2)) return true;
        if (distance_at_most(g, v, w, u, 1) && distance_at_most(g, u, w, v, 2)) return true;
    }
    return false;
}

bool only_out_neighbor(const MultipartiteTournament& d, Vertex u, Vertex v) {
    return d.out(u) == VertexSet{v};
}

bool outdegree_one_and_part_conditions(const MultipartiteTournament& d, Vertex u, Vertex v) {
    if (only_out_neighbor(d, u, v) || only_out_neighbor(d, v, u)) return false;
    // A non-empty out-neighborhood lies inside at most one part, so each
    // direction of the part condition has at most one X to test.
    auto blocked = [&d](Vertex a, Vertex b) {
        auto x = d.part_containing(d.out(b));
        return x && d.out(a).is_subset_of(d.part(*x) | VertexSet{b});
    };
    return !blocked(u, v) && !blocked(v, u);
}

bool adjacent_fast(const MultipartiteTournament& d, Vertex u, Vertex v) {
    require_distinct(d, u, v);
    const VertexSet nu = d.out(u);
    const VertexSet nv = d.out(v);
    if (nu.empty() || nv.empty()) return false;
    if (nu.intersects(nv)) return true;
    if (d.same_part(u, v)) {
        return !d.part_containing(nu | nv).has_value();
    }
    return outdegree_one_and_part_conditions(d, u, v);
}

SimpleGraph competition_graph(const MultipartiteTournament& d, Method method) {
    SimpleGraph g(d.digraph().labels());
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = u + 1; v < d.order(); ++v) {
            const bool adjacent =
                method == Method::Fast ? adjacent_fast(d, u, v) : adjacent_oracle(d, u, v);
            if (adjacent) g.add_edge(u, v);
        }
    }
    return g;
}

SimpleGraph generic_ij_graph(const MultipartiteTournament& d, int i, int j) {
    if (i < 1 || j > 2 || i > j) {
        throw Error(ErrorKind::UnsupportedBound,
                    "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    const Digraph& dg = d.digraph();
    SimpleGraph g(dg.labels());
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = u + 1; v < d.order(); ++v) {
            for (Vertex w = 0; w < d.order(); ++w) {
                if (w == u || w == v) continue;
                if ((distance_at_most(dg, u, w, v, i) && distance_at_most(dg, v, w, u, j)) ||
                    (distance_at_most(dg, v, w, u, i) && distance_at_most(dg, u, w, v, j))) {
                    g.add_edge(u, v);
                    break;
                }
            }
        }
    }
    return g;
}

}  // namespace mtclab
