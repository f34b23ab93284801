#include "mtclab/tournament.hpp"

#include <unordered_set>

#include "mtclab/error.hpp"

namespace mtclab {

namespace {

void check_part_count(std::size_t k) {
    if (k < 3) throw Error(ErrorKind::TooFewParts, "k = " + std::to_string(k));
}

std::vector<PartSpec> generated_parts(const std::vector<std::size_t>& part_sizes) {
    check_part_count(part_sizes.size());
    std::vector<PartSpec> parts;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] == 0) {
            throw Error(ErrorKind::EmptyPart, "part " + std::to_string(i + 1) + " has size 0");
        }
        PartSpec spec{"p" + std::to_string(i + 1), {}};
        for (std::size_t j = 0; j < part_sizes[i]; ++j) {
            spec.members.push_back(spec.name + "v" + std::to_string(j + 1));
        }
        parts.push_back(std::move(spec));
    }
    return parts;
}

std::vector<std::string> flatten(const std::vector<PartSpec>& parts) {
    std::vector<std::string> labels;
    for (const PartSpec& p : parts) labels.insert(labels.end(), p.members.begin(), p.members.end());
    return labels;
}

}  // namespace

MultipartiteTournament MultipartiteTournament::validate(const Digraph& digraph,
                                                        const std::vector<PartSpec>& parts) {
    for (const PartSpec& p : parts) {
        if (p.members.empty()) throw Error(ErrorKind::EmptyPart, "part " + p.name);
    }
    check_part_count(parts.size());

    std::vector<std::string> labels = flatten(parts);
    std::unordered_set<std::string> seen;
    for (const std::string& l : labels) {
        if (!seen.insert(l).second) {
            throw Error(ErrorKind::PartitionMismatch, "vertex " + l + " appears in two parts");
        }
        if (!digraph.find(l)) {
            throw Error(ErrorKind::PartitionMismatch, "vertex " + l + " is not in the digraph");
        }
    }
    if (labels.size() != digraph.order()) {
        for (const std::string& l : digraph.labels()) {
            if (!seen.contains(l)) {
                throw Error(ErrorKind::PartitionMismatch, "vertex " + l + " is in no part");
            }
        }
    }

    MultipartiteTournament t;
    t.digraph_ = Digraph(labels);
    std::vector<Vertex> to_source(labels.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexSet members;
        for (const std::string& l : parts[i].members) {
            Vertex v = t.digraph_.index_of(l);
            members.insert(v);
            to_source[v] = digraph.index_of(l);
            t.part_of_.push_back(i);
        }
        t.parts_.push_back(members);
        t.part_names_.push_back(parts[i].name);
    }

    const std::size_t n = labels.size();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool forward = digraph.has_arc(to_source[u], to_source[v]);
            const bool backward = digraph.has_arc(to_source[v], to_source[u]);
            const std::string pair = labels[u] + ", " + labels[v];
            if (t.part_of_[u] == t.part_of_[v]) {
                if (forward || backward) throw Error(ErrorKind::IntraPartArc, pair);
                continue;
            }
            if (forward && backward) throw Error(ErrorKind::DoubleOrientation, pair);
            if (!forward && !backward) throw Error(ErrorKind::MissingCrossArc, pair);
            if (forward) {
                t.digraph_.add_arc(u, v);
            } else {
                t.digraph_.add_arc(v, u);
            }
        }
    }
    return t;
}

std::optional<std::size_t> MultipartiteTournament::part_containing(VertexSet s) const {
    if (s.empty()) return 0;
    std::size_t i = part_of(s.front());
    if (s.is_subset_of(parts_[i])) return i;
    return std::nullopt;
}

std::vector<PartSpec> MultipartiteTournament::part_specs() const {
    std::vector<PartSpec> specs;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        PartSpec spec{part_names_[i], {}};
        for (Vertex v : parts_[i]) spec.members.push_back(label(v));
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<Arc> cross_pairs(const std::vector<std::size_t>& part_sizes) {
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) owner.insert(owner.end(), part_sizes[i], i);
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < owner.size(); ++u) {
        for (Vertex v = u + 1; v < owner.size(); ++v) {
            if (owner[u] != owner[v]) pairs.emplace_back(u, v);
        }
    }
    return pairs;
}

namespace {

template <typename ReverseFn>
MultipartiteTournament orient(const std::vector<std::size_t>& part_sizes, ReverseFn&& reverse) {
    std::vector<PartSpec> parts = generated_parts(part_sizes);
    Digraph d(flatten(parts));
    const std::vector<Arc> pairs = cross_pairs(part_sizes);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (reverse(i, pairs.size())) {
            d.add_arc(v, u);
        } else {
            d.add_arc(u, v);
        }
    }
    return MultipartiteTournament::validate(d, parts);
}

}  // namespace

MultipartiteTournament random_tournament(const std::vector<std::size_t>& part_sizes, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return orient(part_sizes, [&rng](std::size_t, std::size_t) { return (rng.next() >> 63) != 0; });
}

MultipartiteTournament tournament_from_orientation(const std::vector<std::size_t>& part_sizes,
                                                   std::uint64_t orientation) {
    return orient(part_sizes, [orientation](std::size_t i, std::size_t count) {
        return ((orientation >> (count - 1 - i)) & 1U) != 0;
    });
}

TournamentEnumerator::TournamentEnumerator(std::vector<std::size_t> part_sizes)
    : part_sizes_(std::move(part_sizes)) {
    generated_parts(part_sizes_);
    pair_count_ = cross_pairs(part_sizes_).size();
    if (pair_count_ > kMaxEnumeratedCrossPairs) {
        throw Error(ErrorKind::EnumerationTooLarge,
                    std::to_string(pair_count_) + " cross pairs, limit is " +
                        std::to_string(kMaxEnumeratedCrossPairs));
    }
}

std::optional<MultipartiteTournament> TournamentEnumerator::next() {
    if (cursor_ >= size()) return std::nullopt;
    return tournament_from_orientation(part_sizes_, cursor_++);
}

std::string_view fixture_name(Fixture which) {
    switch (which) {
        case Fixture::T3: return "T3";
        case Fixture::STAR5: return "STAR5";
        case Fixture::SINK4: return "SINK4";
    }
    return "";
}

MultipartiteTournament fixture(Fixture which) {
    auto build = [](const std::vector<PartSpec>& parts,
                    const std::vector<std::pair<std::string, std::string>>& arcs) {
        Digraph d(flatten(parts));
        for (const auto& [u, v] : arcs) d.add_arc(d.index_of(u), d.index_of(v));
        return MultipartiteTournament::validate(d, parts);
    };
    switch (which) {
        case Fixture::T3:
            return build({{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {"c"}}},
                         {{"a", "b"}, {"b", "c"}, {"c", "a"}});
        case Fixture::STAR5:
            return build({{"X1", {"u1", "u2"}}, {"X2", {"u3", "u4"}}, {"X3", {"x"}}},
                         {{"u1", "u3"},
                          {"u3", "u2"},
                          {"u2", "u4"},
                          {"u4", "u1"},
                          {"x", "u1"},
                          {"x", "u2"},
                          {"x", "u3"},
                          {"x", "u4"}});
        case Fixture::SINK4:
            return build({{"X1", {"s", "u"}}, {"X2", {"v"}}, {"X3", {"w"}}},
                         {{"v", "s"}, {"w", "s"}, {"u", "v"}, {"u", "w"}, {"v", "w"}});
    }
    throw Error(ErrorKind::ConfigError, "unknown fixture");
}

}  // namespace mtclab
