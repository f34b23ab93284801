#include "mtclab/structure.hpp"

#include <algorithm>

#include "mtclab/error.hpp"
#include "mtclab/search.hpp"

namespace mtclab {

namespace {

void require_same_vertices(const MultipartiteTournament& d, const SimpleGraph& g) {
    if (g.labels() != d.digraph().labels()) {
        throw Error(ErrorKind::VertexSetMismatch, "graph and tournament vertex lists differ");
    }
}

}  // namespace

std::vector<std::size_t> StructureReport::non_competing_parts() const {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < part_flags.size(); ++i) {
        if (part_flags[i] == PartFlag::NonCompeting) result.push_back(i);
    }
    return result;
}

bool StructureReport::blocks_pass() const {
    return std::all_of(block_verdicts.begin(), block_verdicts.end(),
                       [](const BlockVerdict& b) { return b.pass; });
}

VertexSet sinks(const MultipartiteTournament& d) {
    VertexSet result;
    for (Vertex v = 0; v < d.order(); ++v) {
        if (d.out(v).empty()) result.insert(v);
    }
    return result;
}

std::vector<VertexSet> f_sets(const MultipartiteTournament& d) {
    std::vector<VertexSet> result(d.part_count());
    for (Vertex v = 0; v < d.order(); ++v) {
        const VertexSet out = d.out(v);
        if (out.empty()) continue;
        if (auto i = d.part_containing(out)) result[*i].insert(v);
    }
    return result;
}

StructureReport classify_parts(const MultipartiteTournament& d, const SimpleGraph& g) {
    require_same_vertices(d, g);
    StructureReport report;
    report.sinks = sinks(d);
    report.f_sets = f_sets(d);
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        const bool clique = g.is_clique(d.part(i));
        report.part_flags.push_back(clique ? PartFlag::Competing : PartFlag::NonCompeting);
        if (!clique) {
            report.loose = true;
            if (!report.x1) report.x1 = i;
        }
    }
    return report;
}

std::size_t partner_part(const MultipartiteTournament& d, const SimpleGraph& g, std::size_t x1) {
    const VertexSet members = d.part(x1) - sinks(d);
    for (Vertex a : members) {
        for (Vertex b : members - g.neighbors(a)) {
            if (b <= a) continue;
            if (auto x = d.part_containing(d.out(a) | d.out(b)); x && *x != x1) return *x;
        }
    }
    return x1 == 0 ? 1 : 0;
}

std::vector<BlockVerdict> block_verdicts(const MultipartiteTournament& d, const SimpleGraph& g,
                                         std::size_t x1, std::size_t x2) {
    require_same_vertices(d, g);
    const std::string designation = d.part_name(x1);
    const VertexSet u = sinks(d);
    const std::vector<VertexSet> f_all = f_sets(d);
    const VertexSet x1_set = d.part(x1);

    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        if (i != x1) others.push_back(i);
    }
    std::vector<VertexSet> f(d.part_count());
    std::vector<VertexSet> x(d.part_count());
    VertexSet x1_star = x1_set - u;
    for (std::size_t i : others) {
        f[i] = f_all[i] & x1_set;
        x[i] = d.part(i) - u;
        x1_star -= f_all[i];
    }

    std::vector<BlockVerdict> out;
    auto name_f = [&](std::size_t i) { return "F[" + d.part_name(i) + "]"; };
    auto name_x = [&](std::size_t i) { return "X[" + d.part_name(i) + "]"; };
    auto all_pairs = [&](VertexSet a, VertexSet b) {
        for (Vertex p : a) {
            if (!(b - VertexSet{p}).is_subset_of(g.neighbors(p))) return false;
        }
        return true;
    };
    auto add = [&](std::string block, std::string pattern, bool pass) {
        out.push_back({designation, std::move(block), std::move(pattern), pass});
    };
    auto ones = [&](const std::string& block, VertexSet a, VertexSet b) {
        if (!a.empty() && !b.empty()) add(block, "J", all_pairs(a, b));
    };
    auto clique = [&](const std::string& block, VertexSet a) {
        if (a.size() >= 2) add(block, "J-I", g.is_clique(a));
    };

    add("U", "subset", u.is_subset_of(x1_set));
    for (std::size_t i : others) {
        if (!f_all[i].empty()) add(name_f(i), "subset", f_all[i].is_subset_of(x1_set));
    }
    if (!u.empty()) {
        bool isolated = true;
        for (Vertex s : u) isolated = isolated && g.neighbors(s).empty();
        add("U x V", "O", isolated);
    }
    for (std::size_t i : others) {
        for (std::size_t j : others) {
            if (i < j) ones(name_f(i) + " x " + name_f(j), f[i], f[j]);
        }
        ones(name_f(i) + " x X1*", f[i], x1_star);
        for (std::size_t j : others) {
            if (j != i) ones(name_f(i) + " x " + name_x(j), f[i], x[j]);
        }
    }
    clique("X1* x X1*", x1_star);
    for (std::size_t j : others) ones("X1* x " + name_x(j), x1_star, x[j]);
    for (std::size_t i : others) {
        for (std::size_t j : others) {
            if (i < j) ones(name_x(i) + " x " + name_x(j), x[i], x[j]);
        }
        if (i != x2) clique(name_x(i) + " x " + name_x(i), x[i]);
    }
    const bool m_determined =
        !u.empty() || maximum_stable_set(g, x1_set).size() >= 3;
    if (m_determined) clique(name_x(x2) + " x " + name_x(x2) + " (M)", x[x2]);
    return out;
}

StructureReport verify_block_structure(const MultipartiteTournament& d, const SimpleGraph& g) {
    StructureReport report = classify_parts(d, g);
    if (!report.loose) throw Error(ErrorKind::NotLoose, "every part is a clique of C_{1,2}(D)");
    const std::size_t x1 = *report.x1;
    report.x2 = partner_part(d, g, x1);
    report.x1_star = d.part(x1) - report.sinks;
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        if (i != x1) report.x1_star -= report.f_sets[i];
    }
    for (std::size_t designated : report.non_competing_parts()) {
        std::vector<BlockVerdict> v =
            block_verdicts(d, g, designated, partner_part(d, g, designated));
        report.block_verdicts.insert(report.block_verdicts.end(), v.begin(), v.end());
    }
    return report;
}

bool has_complete_minus_k4_shape(const MultipartiteTournament& d, const SimpleGraph& g, VertexSet s) {
    if (s.size() != 4) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet expected_non_adjacent = s.contains(v) ? s : VertexSet{v};
        if (g.vertices() - g.neighbors(v) != (expected_non_adjacent | VertexSet{v})) return false;
    }
    std::vector<std::size_t> counts(d.part_count(), 0);
    for (Vertex v : s) ++counts[d.part_of(v)];
    return std::count(counts.begin(), counts.end(), 2) == 2;
}

AntiCompetingSetResult max_anti_competing_set(const MultipartiteTournament& d, const SimpleGraph& g,
                                              AntiCompetingScope scope) {
    require_same_vertices(d, g);
    if (g.order() > kExactSearchLimit) {
        throw Error(ErrorKind::InstanceTooLarge, std::to_string(g.order()) + " vertices");
    }
    AntiCompetingSetResult result;
    switch (scope.kind) {
        case ScopeKind::Any:
            result.best_set = maximum_stable_set(g, g.vertices());
            break;
        case ScopeKind::WithinPart:
            result.best_set = maximum_stable_set(g, d.part(scope.part));
            break;
        case ScopeKind::CrossPart:
            // Every cross-part stable set contains a non-adjacent pair from two parts.
            for (Vertex a = 0; a < g.order(); ++a) {
                for (Vertex b : g.vertices() - g.closed_neighborhood(a)) {
                    if (b <= a || d.same_part(a, b)) continue;
                    const VertexSet rest =
                        g.vertices() - g.closed_neighborhood(a) - g.closed_neighborhood(b);
                    const VertexSet candidate = maximum_stable_set(g, rest) | VertexSet{a, b};
                    if (candidate.size() > result.best_set.size()) result.best_set = candidate;
                }
            }
            break;
    }
    result.size = result.best_set.size();
    result.crosses_parts = !result.best_set.empty() && !d.part_containing(result.best_set);
    if (scope.kind == ScopeKind::CrossPart && result.size == 4 && sinks(d).empty()) {
        result.star_shape_verified = has_complete_minus_k4_shape(d, g, result.best_set);
    }
    return result;
}

bool true_twins_digraph(const MultipartiteTournament& d, Vertex u, Vertex v) {
    if (u == v) throw Error(ErrorKind::SameVertex, d.label(u));
    return d.out(u) == d.out(v) && d.in(u) == d.in(v);
}

bool true_twins_graph(const SimpleGraph& g, Vertex u, Vertex v) {
    if (u == v) throw Error(ErrorKind::SameVertex, g.label(u));
    return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

}  // namespace mtclab
