#pragma once

#include <optional>
#include <vector>

#include "mtclab/graph.hpp"
#include "mtclab/tournament.hpp"

namespace mtclab {

enum class WitnessKind { CommonOutNeighbor, OneTwoStep };

/// Evidence that two vertices {1,2}-compete.
///
/// For OneTwoStep, `path` is the length-2 directed path (start, middle, target)
/// taken by the vertex that reaches `target` in two steps; `arc_tail` is the
/// vertex with the arc (arc_tail, target).
struct AdjacencyWitness {
    WitnessKind kind = WitnessKind::CommonOutNeighbor;
    Vertex target = 0;
    Vertex arc_tail = 0;
    std::vector<Vertex> path;

    bool operator==(const AdjacencyWitness&) const = default;
};

/// Common out-neighbor witness, smallest target first.
std::optional<AdjacencyWitness> competes(const MultipartiteTournament& d, Vertex u, Vertex v);

/// (1,2)-step witness: smallest target w, checking "u -> w and v => w in two
/// steps avoiding u" before the role swap.
std::optional<AdjacencyWitness> one_two_competes(const MultipartiteTournament& d, Vertex u, Vertex v);

/// Replays a witness against the raw arc set.
bool witness_valid(const Digraph& d, Vertex u, Vertex v, const AdjacencyWitness& w);

/// Ground truth from bounded distances in vertex-deleted subdigraphs.
bool adjacent_oracle(const MultipartiteTournament& d, Vertex u, Vertex v);

/// Closed-form adjacency without path search.
bool adjacent_fast(const MultipartiteTournament& d, Vertex u, Vertex v);

enum class Method { Oracle, Fast };

SimpleGraph competition_graph(const MultipartiteTournament& d, Method method);

/// (i,j)-step competition graph from distances, 1 <= i <= j <= 2.
SimpleGraph generic_ij_graph(const MultipartiteTournament& d, int i, int j);

/// The three adjacency conditions for non-sink u, v, as literally stated:
/// neither is the other's only out-neighbor, and no part X holding one
/// out-neighborhood holds the other inside X plus the first vertex.
bool outdegree_one_and_part_conditions(const MultipartiteTournament& d, Vertex u, Vertex v);

/// u has exactly one out-neighbor and it is v.
bool only_out_neighbor(const MultipartiteTournament& d, Vertex u, Vertex v);

}  // namespace mtclab
