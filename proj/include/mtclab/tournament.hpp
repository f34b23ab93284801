#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtclab/digraph.hpp"
#include "mtclab/vertex_set.hpp"

namespace mtclab {

/// A named partite set, listed by vertex label in declaration order.
struct PartSpec {
    std::string name;
    std::vector<std::string> members;
};

/// An orientation of a complete k-partite graph, k >= 3.
///
/// Vertices are re-indexed into canonical order on construction: parts in
/// declaration order, members in declaration order within each part. All
/// "first violation" reports and enumeration orders refer to this order.
class MultipartiteTournament {
public:
    /// Validates `digraph` against `parts` and returns the tournament.
    static MultipartiteTournament validate(const Digraph& digraph, const std::vector<PartSpec>& parts);

    const Digraph& digraph() const { return digraph_; }
    std::size_t order() const { return digraph_.order(); }
    std::size_t part_count() const { return parts_.size(); }

    VertexSet part(std::size_t i) const { return parts_.at(i); }
    const std::vector<VertexSet>& parts() const { return parts_; }
    const std::string& part_name(std::size_t i) const { return part_names_.at(i); }
    std::size_t part_of(Vertex v) const { return part_of_.at(v); }
    bool same_part(Vertex u, Vertex v) const { return part_of(u) == part_of(v); }

    VertexSet out(Vertex v) const { return digraph_.out_neighbors(v); }
    VertexSet in(Vertex v) const { return digraph_.in_neighbors(v); }
    const std::string& label(Vertex v) const { return digraph_.label(v); }
    Vertex index_of(std::string_view label) const { return digraph_.index_of(label); }

    /// Index of the part containing all of `s`, if any. The empty set fits every part; 0 is returned.
    std::optional<std::size_t> part_containing(VertexSet s) const;

    std::vector<PartSpec> part_specs() const;

    bool operator==(const MultipartiteTournament&) const = default;

private:
    MultipartiteTournament() = default;

    Digraph digraph_;
    std::vector<VertexSet> parts_;
    std::vector<std::string> part_names_;
    std::vector<std::size_t> part_of_;
};

/// SplitMix64. Fixed here so seeds reproduce the same instances everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Cross pairs (u, v), u < v in canonical order, of a partition given by part sizes.
std::vector<Arc> cross_pairs(const std::vector<std::size_t>& part_sizes);

/// Uniformly random orientation. Vertices are named p<i>v<j> and parts p<i>
/// (both 1-based). One SplitMix64 draw per cross pair in canonical order;
/// the top bit set orients the pair from the later vertex to the earlier one.
MultipartiteTournament random_tournament(const std::vector<std::size_t>& part_sizes, std::uint64_t seed);

/// Builds the tournament whose i-th cross pair (canonical order) is reversed
/// iff bit i of `orientation` (counted from the most significant used bit) is set.
MultipartiteTournament tournament_from_orientation(const std::vector<std::size_t>& part_sizes,
                                                   std::uint64_t orientation);

inline constexpr std::size_t kMaxEnumeratedCrossPairs = 20;

/// Every orientation of the complete multipartite graph with the given part
/// sizes, in lexicographic order of the orientation bit-vector.
class TournamentEnumerator {
public:
    explicit TournamentEnumerator(std::vector<std::size_t> part_sizes);

    std::uint64_t size() const { return std::uint64_t{1} << pair_count_; }
    std::optional<MultipartiteTournament> next();

private:
    std::vector<std::size_t> part_sizes_;
    std::size_t pair_count_ = 0;
    std::uint64_t cursor_ = 0;
};

enum class Fixture { T3, STAR5, SINK4 };

MultipartiteTournament fixture(Fixture which);
std::string_view fixture_name(Fixture which);

}  // namespace mtclab
