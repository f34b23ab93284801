#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mtclab/graph.hpp"

namespace mtclab {

/// Induced cycle of length >= 4, stored canonically: starts at its smallest
/// vertex and continues toward the smaller of that vertex's two cycle neighbors.
struct HoleWitness {
    std::vector<Vertex> cycle;

    bool operator==(const HoleWitness&) const = default;
};

/// Three pairwise non-adjacent vertices; paths[i] joins the two vertices other
/// than triple[i] while avoiding the closed neighborhood of triple[i].
struct ATWitness {
    std::array<Vertex, 3> triple{};
    std::array<std::vector<Vertex>, 3> paths;

    bool operator==(const ATWitness&) const = default;
};

HoleWitness canonical_hole(std::vector<Vertex> cycle);
bool hole_valid(const SimpleGraph& g, const HoleWitness& h);
bool at_valid(const SimpleGraph& g, const ATWitness& at);

struct ChordalityResult {
    bool chordal = false;
    std::vector<Vertex> elimination_order;  // perfect elimination ordering when chordal
    std::optional<HoleWitness> hole;        // when not chordal
};

/// Maximum-cardinality search followed by the zero fill-in test.
ChordalityResult is_chordal(const SimpleGraph& g);

inline constexpr std::size_t kHoleSearchLimit = 32;

/// A shortest hole of length >= min_length (canonical DFS), |V| <= kHoleSearchLimit.
std::optional<HoleWitness> find_hole(const SimpleGraph& g, std::size_t min_length);

/// Visits every hole of length >= min_length exactly once, shortest first;
/// stops when `visit` returns false. |V| <= kHoleSearchLimit.
void for_each_hole(const SimpleGraph& g, std::size_t min_length,
                   const std::function<bool(const HoleWitness&)>& visit);

struct C4Result {
    bool c4_free = true;
    std::optional<HoleWitness> hole;
};

C4Result is_c4_free(const SimpleGraph& g);

/// Every hole of length exactly 4, canonical and sorted.
std::vector<HoleWitness> all_four_holes(const SimpleGraph& g);

/// Components of G - N[z] for every z: comp[z][v] is a component id, or -1 for v in N[z].
std::vector<std::vector<int>> components_outside_closed_neighborhoods(const SimpleGraph& g);

/// The lexicographically smallest asteroidal triple, with paths.
std::optional<ATWitness> find_asteroidal_triple(const SimpleGraph& g);

/// Every asteroidal triple (x < y < z).
std::vector<std::array<Vertex, 3>> all_asteroidal_triples(const SimpleGraph& g);

struct IntervalResult {
    bool interval = false;
    std::vector<Vertex> elimination_order;
    std::optional<HoleWitness> hole;
    std::optional<ATWitness> asteroidal_triple;
};

/// Chordal and asteroidal-triple-free.
IntervalResult is_interval(const SimpleGraph& g);

}  // namespace mtclab
