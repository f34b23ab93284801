#include <doctest.h>

#include "corpus.hpp"
#include "mtclab/competition.hpp"
#include "mtclab/recognition.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mtclab;

namespace {

SimpleGraph c4_with_pendant() {
    SimpleGraph g = cycle_graph(4);
    SimpleGraph h({"1", "2", "3", "4", "5"});
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(0, 4);
    return h;
}

std::uint64_t mask_of(const std::vector<Vertex>& vs) {
    std::uint64_t m = 0;
    for (Vertex v : vs) m |= std::uint64_t{1} << v;
    return m;
}

/// Compares every recognizer with the brute-force definitions.
void cross_validate(const oracle::Matrix& m, bool with_model) {
    const SimpleGraph g = oracle::to_graph(m);
    const auto holes = oracle::holes_by_subsets(m);
    const auto chordal = is_chordal(g);
    CHECK(chordal.chordal == holes.empty());
    if (chordal.hole) CHECK(oracle::induces_hole(m, mask_of(chordal.hole->cycle)));
    if (chordal.chordal) {
        // Perfect elimination order: later neighbors of each vertex form a clique.
        std::vector<std::size_t> pos(g.order());
        REQUIRE(chordal.elimination_order.size() == g.order());
        for (std::size_t i = 0; i < g.order(); ++i) pos[chordal.elimination_order[i]] = i;
        for (Vertex v = 0; v < g.order(); ++v) {
            VertexSet later;
            for (Vertex w : g.neighbors(v)) {
                if (pos[w] > pos[v]) later.insert(w);
            }
            CHECK(g.is_clique(later));
        }
    }

    const auto shortest = find_hole(g, 4);
    CHECK(shortest.has_value() == !holes.empty());
    if (shortest) {
        std::size_t min_len = 64;
        for (auto h : holes) min_len = std::min<std::size_t>(min_len, __builtin_popcountll(h));
        CHECK(shortest->cycle.size() == min_len);
        CHECK(hole_valid(g, *shortest));
    }
    std::set<std::uint64_t> long_expected;
    for (auto h : oracle::holes_by_subsets(m, 5)) long_expected.insert(h);
    std::set<std::uint64_t> long_found;
    for_each_hole(g, 5, [&](const HoleWitness& h) {
        CHECK(hole_valid(g, h));
        CHECK(h == canonical_hole(h.cycle));
        CHECK(long_found.insert(mask_of(h.cycle)).second);
        return true;
    });
    CHECK(long_found == long_expected);

    std::size_t fours = 0;
    for (auto h : holes) fours += __builtin_popcountll(h) == 4 ? 1 : 0;
    const auto c4 = is_c4_free(g);
    CHECK(c4.c4_free == (fours == 0));
    if (c4.hole) CHECK(c4.hole->cycle.size() == 4);
    CHECK(all_four_holes(g).size() == fours);

    const auto triples = oracle::asteroidal_triples(m);
    const auto at = find_asteroidal_triple(g);
    CHECK(at.has_value() == !triples.empty());
    if (at) {
        CHECK(at_valid(g, *at));
        CHECK(at->triple[0] == triples.front()[0]);
        CHECK(at->triple[1] == triples.front()[1]);
        CHECK(at->triple[2] == triples.front()[2]);
    }
    const auto all_at = all_asteroidal_triples(g);
    CHECK(all_at.size() == triples.size());
    for (std::size_t i = 0; i < std::min(all_at.size(), triples.size()); ++i) {
        CHECK(all_at[i][0] == triples[i][0]);
        CHECK(all_at[i][1] == triples[i][1]);
        CHECK(all_at[i][2] == triples[i][2]);
    }

    const auto interval = is_interval(g);
    CHECK(interval.interval == (holes.empty() && triples.empty()));
    if (with_model) CHECK(interval.interval == oracle::interval_model(m).has_value());
}

}  // namespace

TEST_CASE("chordality examples") {
    const auto c4 = is_chordal(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    REQUIRE(c4.hole);
    CHECK(c4.hole->cycle == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(is_chordal(complete_graph(4)).chordal);
    const auto star = competition_graph(star5(), Method::Fast);
    CHECK(is_chordal(star).chordal);
    CHECK(oracle::holes_by_subsets(oracle::edge_matrix(star)).empty());
}

TEST_CASE("hole search examples") {
    const auto six = find_hole(cycle_graph(6), 4);
    REQUIRE(six);
    CHECK(six->cycle == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(find_hole(complete_graph(4), 4));
    CHECK_FALSE(find_hole(c4_with_pendant(), 5));
    CHECK(find_hole(c4_with_pendant(), 4));
    CHECK_ERROR_KIND(find_hole(empty_graph(33), 4), ErrorKind::InstanceTooLarge);
}

TEST_CASE("canonical holes") {
    CHECK(canonical_hole({3, 2, 1, 0}).cycle == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(canonical_hole({2, 0, 4, 1}).cycle == std::vector<Vertex>{0, 2, 1, 4});
}

TEST_CASE("C4-freeness examples") {
    CHECK_FALSE(is_c4_free(cycle_graph(4)).c4_free);
    CHECK(is_c4_free(star_graph(4)).c4_free);
    CHECK(is_c4_free(cycle_graph(6)).c4_free);
}

TEST_CASE("asteroidal triple examples") {
    const auto c6 = find_asteroidal_triple(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->triple == std::array<Vertex, 3>{0, 2, 4});
    CHECK(at_valid(cycle_graph(6), *c6));
    CHECK_FALSE(find_asteroidal_triple(star_graph(4)));
    CHECK_FALSE(find_asteroidal_triple(complete_graph(5)));

    // Subdivided claw: the three leaves form the classic asteroidal triple.
    SimpleGraph claw({"c", "a1", "a2", "b1", "b2", "d1", "d2"});
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}) claw.add_edge(u, v);
    const auto at = find_asteroidal_triple(claw);
    REQUIRE(at);
    CHECK(at->triple == std::array<Vertex, 3>{2, 4, 6});
    CHECK(is_chordal(claw).chordal);
    CHECK_FALSE(is_interval(claw).interval);
}

TEST_CASE("interval examples") {
    CHECK(is_interval(star_graph(4)).interval);
    const auto c4 = is_interval(cycle_graph(4));
    CHECK_FALSE(c4.interval);
    CHECK(c4.hole);
    const auto c6 = is_interval(cycle_graph(6));
    CHECK_FALSE(c6.interval);
    CHECK(c6.hole);
    CHECK(oracle::interval_model(oracle::edge_matrix(star_graph(4))).has_value());
    CHECK_FALSE(oracle::interval_model(oracle::edge_matrix(cycle_graph(4))).has_value());
}

TEST_CASE("recognizers agree with brute force on every graph with at most 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) cross_validate(oracle::graph_from_code(n, code), true);
    }
}

TEST_CASE("recognizers agree with brute force on random graphs up to 10 vertices") {
    SplitMix64 rng(77);
    for (int i = 0; i < 1500; ++i) {
        const std::size_t n = 7 + rng.next() % 4;
        std::uint64_t code = rng.next();
        if (i % 2 == 0) code |= rng.next();  // denser half
        cross_validate(oracle::graph_from_code(n, code), n <= 8);
    }
}

TEST_CASE("recognizers agree with brute force on competition graphs") {
    corpus::for_each_exhaustive([](const MultipartiteTournament& d) {
        cross_validate(oracle::edge_matrix(competition_graph(d, Method::Fast)), true);
    });
}
