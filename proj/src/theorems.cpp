#include "mtclab/theorems.hpp"

#include <algorithm>

#include "mtclab/competition.hpp"
#include "mtclab/error.hpp"
#include "mtclab/mtd.hpp"
#include "mtclab/search.hpp"

namespace mtclab {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "NOT_APPLICABLE";
        case Verdict::SkippedSize: return "SKIPPED_SIZE";
    }
    return "?";
}

InstanceContext::InstanceContext(const MultipartiteTournament& tournament)
    : d(tournament),
      g(competition_graph(tournament, Method::Fast)),
      oracle(competition_graph(tournament, Method::Oracle)),
      report(classify_parts(tournament, g)),
      sink_set(report.sinks),
      non_competing(report.non_competing_parts()) {}

std::string InstanceContext::names(VertexSet s) const {
    std::string out = "{";
    for (Vertex v : s) {
        if (out.size() > 1) out += ",";
        out += d.label(v);
    }
    return out + "}";
}

const std::optional<std::vector<HoleWitness>>& InstanceContext::long_holes() const {
    if (!long_holes_) {
        if (g.order() > kHoleEnumerationLimit) {
            long_holes_.emplace(std::nullopt);
        } else {
            std::vector<HoleWitness> holes;
            for_each_hole(g, 5, [&holes](const HoleWitness& h) {
                holes.push_back(h);
                return true;
            });
            long_holes_.emplace(std::move(holes));
        }
    }
    return *long_holes_;
}

const std::vector<HoleWitness>& InstanceContext::four_holes() const {
    if (!four_holes_) four_holes_ = all_four_holes(g);
    return *four_holes_;
}

const ChordalityResult& InstanceContext::chordality() const {
    if (!chordality_) chordality_ = is_chordal(g);
    return *chordality_;
}

const IntervalResult& InstanceContext::interval() const {
    if (!interval_) interval_ = is_interval(g);
    return *interval_;
}

void Tally::consider(bool hypothesis, bool conclusion, const std::function<std::string()>& describe) {
    if (!hypothesis) return;
    ++applicable_;
    if (conclusion) {
        ++tested_ok_;
    } else if (!failure_) {
        failure_ = describe();
    }
}

void Tally::skip(std::string reason) {
    if (!skipped_) skipped_ = std::move(reason);
}

CheckResult Tally::result(const std::string& id, const InstanceContext& ctx) const {
    CheckResult r;
    r.id = id;
    r.observations = observations_;
    if (failure_) {
        r.verdict = Verdict::Fail;
        r.detail = *failure_;
        r.counterexample = Counterexample{serialize_mtd(ctx.d), *failure_};
    } else if (skipped_) {
        r.verdict = Verdict::SkippedSize;
        r.detail = *skipped_;
    } else if (applicable_ == 0) {
        r.verdict = Verdict::NotApplicable;
    } else {
        r.verdict = Verdict::Pass;
        r.detail = std::to_string(tested_ok_) + " case(s) checked";
    }
    return r;
}

namespace {

using Ctx = InstanceContext;

bool star(const Ctx& c, Vertex u, Vertex v) { return only_out_neighbor(c.d, u, v); }

bool non_sink(const Ctx& c, Vertex v) { return !c.sink_set.contains(v); }

std::string pair_text(const Ctx& c, Vertex u, Vertex v) { return "(" + c.name(u) + "," + c.name(v) + ")"; }

template <typename Fn>
void for_pairs(const Ctx& c, Fn&& fn) {
    for (Vertex u = 0; u < c.d.order(); ++u) {
        for (Vertex v = u + 1; v < c.d.order(); ++v) fn(u, v);
    }
}

std::size_t max_part_size(const MultipartiteTournament& d) {
    std::size_t best = 0;
    for (VertexSet p : d.parts()) best = std::max(best, p.size());
    return best;
}

/// Calls fn(S) for every stable subset S of `part` with at least two vertices.
template <typename Fn>
bool for_stable_subsets(const Ctx& c, VertexSet part, Tally& t, Fn&& fn) {
    if (part.size() > kSubsetScanLimit) {
        t.skip("partite set larger than " + std::to_string(kSubsetScanLimit));
        return false;
    }
    const std::uint64_t mask = part.bits();
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        const VertexSet s(sub);
        if (s.size() >= 2 && c.g.is_stable(s)) fn(s);
    }
    return true;
}

// Same-part and different-part adjacency characterizations.

void adjacency_equivalence(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        t.consider(true, c.g.adjacent(u, v) == c.oracle.adjacent(u, v),
                   [&] { return "closed form and distance oracle disagree on " + pair_text(c, u, v); });
    });
}

void same_part_compete(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        if (!c.d.same_part(u, v) || !non_sink(c, u) || !non_sink(c, v)) return;
        const bool no_compete = !competes(c.d, u, v).has_value();
        const bool disjoint = !c.d.out(u).intersects(c.d.out(v));
        t.consider(true, no_compete == disjoint, [&] { return pair_text(c, u, v); });
    });
}

void same_part_one_two(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        if (!c.d.same_part(u, v) || !non_sink(c, u) || !non_sink(c, v)) return;
        const bool no_one_two = !one_two_competes(c.d, u, v).has_value();
        const bool inside_part = c.d.part_containing(c.d.out(u) | c.d.out(v)).has_value();
        t.consider(true, no_one_two == inside_part, [&] { return pair_text(c, u, v); });
    });
}

void same_part_adjacency(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        if (!c.d.same_part(u, v) || !non_sink(c, u) || !non_sink(c, v)) return;
        const bool disjoint = !c.d.out(u).intersects(c.d.out(v));
        const bool inside_part = c.d.part_containing(c.d.out(u) | c.d.out(v)).has_value();
        t.consider(true, !c.oracle.adjacent(u, v) == (disjoint && inside_part),
                   [&] { return pair_text(c, u, v); });
    });
}

void different_part_adjacency(const Ctx& c, Tally& t) {
    for (auto [u, v] : c.d.digraph().arcs()) {
        if (!non_sink(c, u) || !non_sink(c, v)) continue;
        const VertexSet nu = c.d.out(u);
        const VertexSet nv = c.d.out(v);
        const auto x = c.d.part_containing(nv);
        const bool fits = x && nu.is_subset_of(c.d.part(*x) | VertexSet{v});
        const bool expected_non_adjacent = star(c, u, v) || (!nu.intersects(nv) && fits);
        t.consider(true, !c.oracle.adjacent(u, v) == expected_non_adjacent,
                   [&] { return "arc " + pair_text(c, u, v); });
    }
}

void corollary_adjacency(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        if (!non_sink(c, u) || !non_sink(c, v)) return;
        const bool predicted =
            competes(c.d, u, v).has_value() || outdegree_one_and_part_conditions(c.d, u, v);
        t.consider(true, c.oracle.adjacent(u, v) == predicted, [&] { return pair_text(c, u, v); });
    });
}

// Loose structure.

void sub_digraph_union(const Ctx& c, Tally& t) {
    for (std::size_t x : c.non_competing) {
        if (!for_stable_subsets(c, c.d.part(x), t, [&](VertexSet s) {
                const std::size_t non_sinks = (s - c.sink_set).size();
                VertexSet out;
                for (Vertex v : s) out |= c.d.out(v);
                t.consider(non_sinks != 1, c.d.part_containing(out).has_value(),
                           [&] { return "S = " + c.names(s); });
            })) {
            return;
        }
    }
}

void sub_digraph_common_out_neighbor(const Ctx& c, Tally& t) {
    for (std::size_t x : c.non_competing) {
        const VertexSet outside = c.d.digraph().vertices() - c.d.part(x);
        if (!for_stable_subsets(c, c.d.part(x), t, [&](VertexSet s) {
                if (s.size() < 3) return;
                bool ok = true;
                std::string bad;
                for (Vertex a : outside) {
                    for (Vertex b : outside) {
                        if (b <= a || !ok) continue;
                        if (!(c.d.out(a) & c.d.out(b)).intersects(s)) {
                            ok = false;
                            bad = pair_text(c, a, b);
                        }
                    }
                }
                t.consider(true, ok, [&] { return "S = " + c.names(s) + ", pair " + bad; });
            })) {
            return;
        }
    }
}

void sinks_in_non_competing_part(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    for (Vertex s : c.sink_set) {
        for (std::size_t x : c.non_competing) {
            t.consider(true, c.d.part(x).contains(s),
                       [&] { return "sink " + c.name(s) + " outside " + c.d.part_name(x); });
        }
    }
}

void distinct_parts_vertex(const Ctx& c, Tally& t) {
    const VertexSet non_sinks = c.d.digraph().vertices() - c.sink_set;
    for (std::size_t x : c.non_competing) {
        for (Vertex v : c.d.part(x)) {
            const VertexSet out = c.d.out(v);
            const bool spread = !out.empty() && !c.d.part_containing(out);
            t.consider(spread, (non_sinks - VertexSet{v}).is_subset_of(c.g.neighbors(v)),
                       [&] { return "vertex " + c.name(v) + " in " + c.d.part_name(x); });
        }
    }
}

void f_sets_inside_x1(const Ctx& c, Tally& t) {
    for (std::size_t x1 : c.non_competing) {
        for (std::size_t i = 0; i < c.d.part_count(); ++i) {
            if (i == x1) continue;
            t.consider(true, c.report.f_sets[i].is_subset_of(c.d.part(x1)), [&] {
                return "F[" + c.d.part_name(i) + "] = " + c.names(c.report.f_sets[i]) + " not inside " +
                       c.d.part_name(x1);
            });
        }
    }
}

void remaining_parts_clique(const Ctx& c, Tally& t) {
    for (std::size_t x1 : c.non_competing) {
        const std::size_t x2 = partner_part(c.d, c.g, x1);
        VertexSet rest;
        for (std::size_t i = 0; i < c.d.part_count(); ++i) {
            if (i != x1 && i != x2) rest |= c.d.part(i);
        }
        bool joined = true;
        for (Vertex a : rest) joined = joined && c.d.part(x2).is_subset_of(c.g.neighbors(a));
        t.consider(true, c.g.is_clique(rest) && joined, [&] {
            return "X1 = " + c.d.part_name(x1) + ", X2 = " + c.d.part_name(x2);
        });
    }
}

void f_sets_join(const Ctx& c, Tally& t) {
    for (std::size_t x1 : c.non_competing) {
        for (std::size_t i = 0; i < c.d.part_count(); ++i) {
            for (std::size_t j = 0; j < c.d.part_count(); ++j) {
                if (i == x1 || j == x1 || i == j) continue;
                const VertexSet target = c.report.f_sets[j] | c.d.part(j);
                for (Vertex v : c.report.f_sets[i]) {
                    for (Vertex w : target - VertexSet{v}) {
                        t.consider(true, c.g.adjacent(v, w), [&] {
                            return "X1 = " + c.d.part_name(x1) + ", " + pair_text(c, v, w);
                        });
                    }
                }
            }
        }
    }
}

void f_set_non_adjacency(const Ctx& c, Tally& t) {
    for (std::size_t x1 : c.non_competing) {
        for (std::size_t i = 0; i < c.d.part_count(); ++i) {
            if (i == x1) continue;
            for (Vertex x : c.report.f_sets[i]) {
                for (Vertex y : c.d.part(i)) {
                    const bool non_adjacent = !c.g.adjacent(x, y);
                    t.consider(true, non_adjacent == (star(c, x, y) || star(c, y, x)),
                               [&] { return pair_text(c, x, y); });
                }
            }
        }
    }
}

void outside_x1_clique(const Ctx& c, Tally& t) {
    for (std::size_t x1 : c.non_competing) {
        const bool hypothesis =
            !c.sink_set.empty() || maximum_stable_set(c.g, c.d.part(x1)).size() >= 3;
        const VertexSet rest = c.d.digraph().vertices() - c.d.part(x1);
        t.consider(hypothesis, c.g.is_clique(rest), [&] { return "X1 = " + c.d.part_name(x1); });
    }
}

void block_structure(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    const StructureReport r = verify_block_structure(c.d, c.g);
    for (const BlockVerdict& b : r.block_verdicts) {
        t.consider(true, b.pass, [&] { return "X1 = " + b.designation + ", block " + b.block + " not " + b.pattern; });
    }
}

void component_diameters(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    for (const Component& comp : components_and_diameters(c.g)) {
        t.consider(true, comp.diameter <= 2, [&] {
            return "component " + c.names(comp.vertices) + " has diameter " + std::to_string(comp.diameter);
        });
    }
}

void connected_iff_sinkless(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    const bool connected = components_and_diameters(c.g).size() == 1;
    t.consider(true, connected == c.sink_set.empty(), [&] {
        return std::string(connected ? "connected" : "disconnected") + " with sinks " + c.names(c.sink_set);
    });
}

void stable_sets_two_parts(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    if (c.g.order() > kMaximalStableSetLimit) {
        t.skip("more than " + std::to_string(kMaximalStableSetLimit) + " vertices");
        return;
    }
    for_each_maximal_stable_set(c.g, c.g.vertices(), [&](VertexSet s) {
        std::size_t parts = 0;
        for (VertexSet p : c.d.parts()) parts += p.intersects(s) ? 1 : 0;
        t.consider(true, parts <= 2, [&] { return "stable set " + c.names(s); });
        return !t.failed();
    });
}

void at_most_two_non_competing(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    t.consider(true, c.non_competing.size() <= 2, [&] {
        return std::to_string(c.non_competing.size()) + " non-competing partite sets";
    });
}

void domination_bound(const Ctx& c, Tally& t) {
    if (!c.loose() || c.g.edge_count() == 0) return;
    if (c.g.order() > kExactSearchLimit) {
        t.skip("more than " + std::to_string(kExactSearchLimit) + " vertices");
        return;
    }
    const std::size_t m = c.sink_set.size();
    const std::size_t gamma = domination_number(c.g);
    t.consider(true, gamma == m + 1 || gamma == m + 2, [&] {
        return "domination number " + std::to_string(gamma) + " with " + std::to_string(m) + " sinks";
    });
    if (gamma >= m) t.observe("domination-excess=" + std::to_string(gamma - m));
}

// Directed 3- and 4-cycles, each once, starting at their smallest vertex.
std::vector<std::vector<Vertex>> short_directed_cycles(const MultipartiteTournament& d) {
    std::vector<std::vector<Vertex>> cycles;
    for (Vertex a = 0; a < d.order(); ++a) {
        const VertexSet above = d.digraph().vertices() - VertexSet::first_n(a + 1);
        for (Vertex b : d.out(a) & above) {
            for (Vertex c : d.out(b) & above) {
                if (d.out(c).contains(a)) cycles.push_back({a, b, c});
                for (Vertex e : (d.out(c) & above) - VertexSet{b}) {
                    if (d.out(e).contains(a)) cycles.push_back({a, b, c, e});
                }
            }
        }
    }
    return cycles;
}

void cycle_lemma(const Ctx& c, Tally& t) {
    if (c.d.order() > kCycleScanLimit) {
        t.skip("more than " + std::to_string(kCycleScanLimit) + " vertices");
        return;
    }
    for (const std::vector<Vertex>& cycle : short_directed_cycles(c.d)) {
        VertexSet on_cycle;
        for (Vertex v : cycle) on_cycle.insert(v);
        // Out-neighbor pairs on C whose two sections both have length <= 2.
        auto qualifies = [&](Vertex u) {
            const VertexSet out = c.d.out(u);
            if (cycle.size() == 3) return (out & on_cycle).size() >= 2;
            return (out.contains(cycle[0]) && out.contains(cycle[2])) ||
                   (out.contains(cycle[1]) && out.contains(cycle[3]));
        };
        VertexSet good;
        for (Vertex u : c.d.digraph().vertices() - on_cycle) {
            if (qualifies(u)) good.insert(u);
        }
        std::vector<VertexSet> candidates;
        if (!good.empty()) candidates.push_back(on_cycle | good);
        for (VertexSet p : c.d.parts()) {
            const VertexSet off = p - on_cycle;
            if (!off.empty() && off.is_subset_of(good)) candidates.push_back(p);
        }
        for (VertexSet x : candidates) {
            bool ok = true;
            for (Vertex u : x - on_cycle) ok = ok && (x - VertexSet{u}).is_subset_of(c.g.neighbors(u));
            t.consider(true, ok, [&] {
                std::string cyc;
                for (Vertex v : cycle) cyc += c.name(v) + "->";
                return "cycle " + cyc + c.name(cycle[0]) + ", X = " + c.names(x);
            });
        }
    }
}

std::vector<VertexSet> stable_triples(const Ctx& c) {
    std::vector<VertexSet> triples;
    for (Vertex a = 0; a < c.g.order(); ++a) {
        const VertexSet free_a = c.g.vertices() - c.g.closed_neighborhood(a);
        for (Vertex b : free_a) {
            if (b <= a) continue;
            for (Vertex e : free_a - c.g.closed_neighborhood(b)) {
                if (e > b) triples.push_back(VertexSet{a, b, e});
            }
        }
    }
    return triples;
}

void size_three_part(const Ctx& c, Tally& t) {
    if (!c.sink_set.empty()) return;
    const std::vector<VertexSet> triples = stable_triples(c);
    for (VertexSet p : c.d.parts()) {
        const bool hypothesis = std::any_of(triples.begin(), triples.end(),
                                            [p](VertexSet s) { return s.is_subset_of(p); });
        if (!hypothesis) continue;
        for (VertexSet s : triples) {
            t.consider(true, s.is_subset_of(p), [&] { return "stable triple " + c.names(s) + " leaves " + c.names(p); });
        }
    }
}

void anti_competing_bound(const Ctx& c, Tally& t) {
    if (!c.loose() || !c.sink_set.empty()) return;
    if (c.g.order() > kExactSearchLimit) {
        t.skip("more than " + std::to_string(kExactSearchLimit) + " vertices");
        return;
    }
    const AntiCompetingSetResult r = max_anti_competing_set(c.d, c.g, AntiCompetingScope::cross_part());
    const bool shape_ok = r.size < 4 || (r.star_shape_verified.value_or(false) && c.d.order() >= 5);
    t.consider(r.size >= 2, r.size <= 4 && shape_ok, [&] {
        return "cross-part anti-competing set " + c.names(r.best_set);
    });
    if (r.size >= 2) t.observe("cross-part-stable-max=" + std::to_string(r.size));
}

void asteroidal_triple_part(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    for (const auto& triple : all_asteroidal_triples(c.g)) {
        const VertexSet s{triple[0], triple[1], triple[2]};
        const auto p = c.d.part_containing(s);
        const bool ok = p && c.non_competing.size() == 1 && c.non_competing.front() == *p;
        t.consider(true, ok, [&] { return "asteroidal triple " + c.names(s); });
    }
}

void true_twins(const Ctx& c, Tally& t) {
    for_pairs(c, [&](Vertex u, Vertex v) {
        const bool hypothesis = non_sink(c, u) && non_sink(c, v) && true_twins_digraph(c.d, u, v);
        t.consider(hypothesis, true_twins_graph(c.g, u, v), [&] { return pair_text(c, u, v); });
    });
}

void adjacent_pair_covers(const Ctx& c, Tally& t) {
    for (std::size_t x : c.non_competing) {
        for (Vertex u : c.d.part(x)) {
            for (Vertex v : c.d.part(x) & c.g.neighbors(u)) {
                if (v <= u || true_twins_graph(c.g, u, v)) continue;
                const auto i = c.d.part_containing(c.d.out(u) | c.d.out(v));
                if (!i) continue;
                const VertexSet covered = c.g.neighbors(u) | c.g.neighbors(v);
                t.consider(true, c.d.part(*i).is_subset_of(covered), [&] {
                    return pair_text(c, u, v) + " against " + c.d.part_name(*i);
                });
            }
        }
    }
}

void adjacent_pair_outsiders(const Ctx& c, Tally& t) {
    for (std::size_t x : c.non_competing) {
        for (Vertex u : c.d.part(x)) {
            for (Vertex v : c.d.part(x) & c.g.neighbors(u)) {
                if (v <= u || true_twins_graph(c.g, u, v)) continue;
                const VertexSet far = c.g.vertices() - c.g.closed_neighborhood(u) - c.g.closed_neighborhood(v);
                t.consider(true, far.is_subset_of(c.d.part(x)), [&] {
                    return pair_text(c, u, v) + ", far vertices " + c.names(far);
                });
            }
        }
    }
}

std::string hole_text(const Ctx& c, const HoleWitness& h) {
    std::string s = "hole";
    for (Vertex v : h.cycle) s += " " + c.name(v);
    return s;
}

void long_hole_structure(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    const auto& holes = c.long_holes();
    if (!holes) {
        t.skip("more than " + std::to_string(kHoleEnumerationLimit) + " vertices");
        return;
    }
    if (holes->empty()) return;
    t.consider(true, c.non_competing.size() == 1, [&] {
        return std::to_string(c.non_competing.size()) + " non-competing partite sets";
    });
    if (c.non_competing.size() != 1) return;
    const std::size_t x = c.non_competing.front();
    for (const HoleWitness& h : *holes) {
        VertexSet on_hole;
        for (Vertex v : h.cycle) on_hole.insert(v);
        bool ok = false;
        for (std::size_t y = 0; y < c.d.part_count() && !ok; ++y) {
            const VertexSet fy = c.report.f_sets[y];
            ok = y != x && c.d.part(y).size() >= h.cycle.size() && on_hole.is_subset_of(fy) &&
                 fy.is_subset_of(c.d.part(x));
        }
        t.consider(true, ok, [&] { return hole_text(c, h); });
    }
}

void four_hole_parts(const Ctx& c, Tally& t) {
    if (!c.loose() || c.four_holes().empty()) return;
    for (std::size_t x : c.non_competing) {
        bool ok = c.non_competing.size() == 1;
        if (!ok && c.non_competing.size() == 2 && c.d.part(x).size() >= 4) {
            const std::size_t other = c.non_competing[0] == x ? c.non_competing[1] : c.non_competing[0];
            ok = c.d.part(other).size() >= 4;
        }
        t.consider(true, ok, [&] { return "X = " + c.d.part_name(x) + ", " + hole_text(c, c.four_holes().front()); });
    }
}

void four_hole_diagonals(const Ctx& c, Tally& t) {
    if (!c.loose()) return;
    for (const HoleWitness& h : c.four_holes()) {
        const auto& v = h.cycle;
        const bool first_same = c.d.same_part(v[0], v[2]);
        const bool second_same = c.d.same_part(v[1], v[3]);
        for (auto [a, b] : {std::pair{v[0], v[2]}, std::pair{v[1], v[3]}}) {
            if (c.d.same_part(a, b)) continue;
            t.consider(true, star(c, a, b) || star(c, b, a),
                       [&] { return hole_text(c, h) + ", diagonal " + pair_text(c, a, b); });
        }
        if (first_same && second_same) {
            t.consider(true, max_part_size(c.d) >= 4, [&] { return hole_text(c, h) + ", both diagonals in parts"; });
        } else if (first_same != second_same) {
            t.observe("hole4-mixed-diagonals");
        }
    }
}

void chordality_corollary(const Ctx& c, Tally& t) {
    bool outdegree_one = false;
    for (Vertex v = 0; v < c.d.order(); ++v) outdegree_one = outdegree_one || c.d.out(v).size() == 1;
    const bool hypothesis = c.loose() && !outdegree_one && max_part_size(c.d) <= 3;
    if (!hypothesis) return;
    const ChordalityResult& r = c.chordality();
    t.consider(true, r.chordal, [&] { return r.hole ? hole_text(c, *r.hole) : std::string("not chordal"); });
}

void small_parts_interval(const Ctx& c, Tally& t) {
    if (!c.loose() || max_part_size(c.d) > 2) return;
    const IntervalResult& r = c.interval();
    t.consider(true, r.interval, [&] {
        if (r.hole) return hole_text(c, *r.hole);
        const auto& at = r.asteroidal_triple->triple;
        return "asteroidal triple " + c.names(VertexSet{at[0], at[1], at[2]});
    });
}

void c4_equivalence(const Ctx& c, Tally& t) {
    if (c.non_competing.size() != 2) return;
    const bool interval = c.interval().interval;
    const bool chordal = c.chordality().chordal;
    const bool c4_free = is_c4_free(c.g).c4_free;
    t.consider(true, interval == chordal && chordal == c4_free, [&] {
        return "interval=" + std::to_string(interval) + " chordal=" + std::to_string(chordal) +
               " c4free=" + std::to_string(c4_free);
    });
    std::size_t large = 0;
    for (VertexSet p : c.d.parts()) large += p.size() > 3 ? 1 : 0;
    t.consider(large <= 1, interval, [&] { return std::string("small parts but not interval"); });
}

std::vector<TheoremCheck> build_catalog() {
    return {
        {"ADJ-EQ", "closed-form adjacency agrees with the bounded-distance definition on every pair",
         adjacency_equivalence},
        {"P-SAME-1", "same part, non-sinks: not competing iff disjoint out-neighborhoods", same_part_compete},
        {"P-SAME-2", "same part, non-sinks: no (1,2)-competition iff both out-neighborhoods fit one part",
         same_part_one_two},
        {"P-SAME-3", "same part, non-sinks: non-adjacent iff disjoint and fitting one part",
         same_part_adjacency},
        {"P-DIFF", "arc u->v across parts, non-sinks: non-adjacent iff u's only out-neighbor is v, or "
                   "disjoint with N+(v) in X and N+(u) in X plus v",
         different_part_adjacency},
        {"C-ADJ", "non-sinks: adjacent iff competing or the out-degree-one and part conditions hold",
         corollary_adjacency},
        {"P-SUB-1", "anti-competing S inside a non-competing part, unless one non-sink plus sinks: "
                    "the union of out-neighborhoods fits one part",
         sub_digraph_union},
        {"P-SUB-2", "anti-competing S of size >= 3 inside non-competing X: every pair outside X has a "
                    "common out-neighbor in S",
         sub_digraph_common_out_neighbor},
        {"S-SINK", "every sink lies in every non-competing part", sinks_in_non_competing_part},
        {"P-DIST", "a vertex of a non-competing part with out-neighbors in two parts is adjacent to all "
                   "non-sinks",
         distinct_parts_vertex},
        {"T-NNS-1", "every F_i, i != 1, lies inside the non-competing part X1", f_sets_inside_x1},
        {"T-NNS-2", "the parts other than X1 and X2 form a clique joined to X2", remaining_parts_clique},
        {"T-NNS-3", "F_i is joined to F_j and X_j for distinct i, j != 1", f_sets_join},
        {"T-NNS-4", "x in F_i, y in X_i: non-adjacent iff one is the other's only out-neighbor",
         f_set_non_adjacency},
        {"T-NNS-5", "a sink or an anti-competing triple in X1 makes V - X1 a clique", outside_x1_clique},
        {"T-STRUCT", "the adjacency matrix follows the block layout", block_structure},
        {"T-AB-1", "every component has diameter at most two", component_diameters},
        {"T-AB-2", "connected iff sinkless", connected_iff_sinkless},
        {"T-AB-3", "every maximal stable set meets at most two parts", stable_sets_two_parts},
        {"T-AB-4", "at most two non-competing parts", at_most_two_non_competing},
        {"T-AB-5", "domination number is m+1 or m+2 for m sinks, unless edgeless", domination_bound},
        {"L-CYC", "vertices with two well-spread out-neighbors on a directed 3- or 4-cycle are joined to "
                  "the rest of their set",
         cycle_lemma},
        {"L-P3", "sinkless with an anti-competing triple in part X: every anti-competing set of size >= 3 "
                 "lies in X",
         size_three_part},
        {"T-S4", "sinkless: a cross-part anti-competing set has size <= 4, and size 4 forces a 2+2 split "
                 "and K_n - E(K_4)",
         anti_competing_bound},
        {"L-AT", "an asteroidal triple lies in the unique non-competing part", asteroidal_triple_part},
        {"L-TT", "non-sink true twins of D are true twins of C_{1,2}(D)", true_twins},
        {"L-XI-1", "adjacent non-twins in a non-competing part sending out-arcs into X_i dominate X_i",
         adjacent_pair_covers},
        {"L-XI-2", "a vertex adjacent to neither of two adjacent non-twins of non-competing X lies in X",
         adjacent_pair_outsiders},
        {"T-HOLE5", "a hole of length >= 5 forces a unique non-competing part X and holes inside F_Y "
                    "within X with |Y| >= hole length",
         long_hole_structure},
        {"T-HOLE4-1", "a 4-hole forces X to be the only non-competing part, or two non-competing parts "
                      "of size >= 4",
         four_hole_parts},
        {"T-HOLE4-2", "4-hole diagonals across parts are out-degree-one arcs; diagonals inside parts "
                      "force a part of size >= 4",
         four_hole_diagonals},
        {"C-CHORD", "loose, no out-degree-one vertex, parts of size <= 3: chordal", chordality_corollary},
        {"T-INT2", "loose with parts of size <= 2: interval", small_parts_interval},
        {"T-C4EQ", "exactly two non-competing parts: interval, chordal and C4-free coincide; all but one "
                   "part of size <= 3 gives interval",
         c4_equivalence},
    };
}

}  // namespace

const std::vector<TheoremCheck>& theorem_catalog() {
    static const std::vector<TheoremCheck> catalog = build_catalog();
    return catalog;
}

const TheoremCheck& find_theorem(std::string_view id) {
    for (const TheoremCheck& c : theorem_catalog()) {
        if (c.id == id) return c;
    }
    throw Error(ErrorKind::UnknownTheorem, std::string(id));
}

CheckResult run_check(const TheoremCheck& check, const InstanceContext& ctx) {
    Tally tally;
    try {
        check.run(ctx, tally);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InstanceTooLarge) throw;
        tally.skip(e.detail());
    }
    return tally.result(check.id, ctx);
}

CheckResult check(std::string_view id, const MultipartiteTournament& d) {
    const TheoremCheck& entry = find_theorem(id);
    const InstanceContext ctx(d);
    return run_check(entry, ctx);
}

std::vector<CheckResult> check_all(const MultipartiteTournament& d) {
    const InstanceContext ctx(d);
    std::vector<CheckResult> results;
    for (const TheoremCheck& c : theorem_catalog()) results.push_back(run_check(c, ctx));
    return results;
}

}  // namespace mtclab
