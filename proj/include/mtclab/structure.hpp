#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtclab/graph.hpp"
#include "mtclab/tournament.hpp"

namespace mtclab {

enum class PartFlag { Competing, NonCompeting };

/// One checked block of the adjacency matrix of C_{1,2}(D) under a chosen
/// non-competing part X1. Patterns: "O" (no edges), "J" (all cross pairs),
/// "J-I" (clique), "subset" (row set lies inside X1).
struct BlockVerdict {
    std::string designation;  // name of the part playing X1
    std::string block;
    std::string pattern;
    bool pass = true;

    bool operator==(const BlockVerdict&) const = default;
};

struct StructureReport {
    VertexSet sinks;
    std::vector<PartFlag> part_flags;
    std::vector<VertexSet> f_sets;  // indexed by part
    bool loose = false;
    std::optional<std::size_t> x1;  // lowest non-competing part
    std::optional<std::size_t> x2;  // its partner part in the block layout
    VertexSet x1_star;
    std::vector<BlockVerdict> block_verdicts;

    std::vector<std::size_t> non_competing_parts() const;
    bool blocks_pass() const;
};

VertexSet sinks(const MultipartiteTournament& d);

/// Per part: the non-sink vertices whose whole out-neighborhood lies in it.
std::vector<VertexSet> f_sets(const MultipartiteTournament& d);

/// Fills sinks, part_flags, f_sets and loose. G must be C_{1,2}(D).
StructureReport classify_parts(const MultipartiteTournament& d, const SimpleGraph& g);

/// The part that plays X2 when `x1` plays X1: where a non-adjacent pair of
/// non-sinks in X1 sends its out-neighbors, else the lowest other part.
std::size_t partner_part(const MultipartiteTournament& d, const SimpleGraph& g, std::size_t x1);

/// classify_parts plus the block decomposition and its verdicts. Every
/// non-competing part is tried as X1 in turn, lowest first.
/// Throws NotLoose for tight tournaments.
StructureReport verify_block_structure(const MultipartiteTournament& d, const SimpleGraph& g);

/// Verdicts for a fixed (X1, X2) designation.
std::vector<BlockVerdict> block_verdicts(const MultipartiteTournament& d, const SimpleGraph& g,
                                         std::size_t x1, std::size_t x2);

enum class ScopeKind { Any, CrossPart, WithinPart };

struct AntiCompetingScope {
    ScopeKind kind = ScopeKind::Any;
    std::size_t part = 0;  // for WithinPart

    static AntiCompetingScope any() { return {ScopeKind::Any, 0}; }
    static AntiCompetingScope cross_part() { return {ScopeKind::CrossPart, 0}; }
    static AntiCompetingScope within(std::size_t i) { return {ScopeKind::WithinPart, i}; }
};

struct AntiCompetingSetResult {
    VertexSet best_set;
    std::size_t size = 0;
    bool crosses_parts = false;
    std::optional<bool> star_shape_verified;
};

/// Maximum stable set of G = C_{1,2}(D) under the scope constraint.
AntiCompetingSetResult max_anti_competing_set(const MultipartiteTournament& d, const SimpleGraph& g,
                                              AntiCompetingScope scope);

/// Non-edges of G are exactly the pairs inside `s`, and `s` splits 2+2 over two parts.
bool has_complete_minus_k4_shape(const MultipartiteTournament& d, const SimpleGraph& g, VertexSet s);

bool true_twins_digraph(const MultipartiteTournament& d, Vertex u, Vertex v);
bool true_twins_graph(const SimpleGraph& g, Vertex u, Vertex v);

}  // namespace mtclab
