#include <doctest.h>

#include <map>
#include <set>

#include "mtclab/mtd.hpp"
#include "mtclab/tournament.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mtclab;

namespace {

std::vector<PartSpec> t3_parts() { return {{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {"c"}}}; }

Digraph t3_digraph() {
    Digraph d({"a", "b", "c"});
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    return d;
}

void check_error_detail(const Digraph& d, const std::vector<PartSpec>& parts, ErrorKind kind, const std::string& detail) {
    try {
        (void)MultipartiteTournament::validate(d, parts);
        FAIL("validation should have failed");
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
        CHECK(e.detail() == detail);
    }
}

std::set<std::pair<std::string, std::string>> named_arcs(const MultipartiteTournament& t) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : t.digraph().arcs()) out.insert({t.label(u), t.label(v)});
    return out;
}

}  // namespace

TEST_CASE("validation examples") {
    const auto t = MultipartiteTournament::validate(t3_digraph(), t3_parts());
    CHECK(t.part_count() == 3);

    Digraph missing = t3_digraph();
    missing.remove_arc(2, 0);
    check_error_detail(missing, t3_parts(), ErrorKind::MissingCrossArc, "a, c");

    Digraph doubled = t3_digraph();
    doubled.add_arc(0, 2);
    check_error_detail(doubled, t3_parts(), ErrorKind::DoubleOrientation, "a, c");
}

TEST_CASE("validation rejects malformed partitions") {
    Digraph d = t3_digraph();
    CHECK_ERROR_KIND(MultipartiteTournament::validate(d, {{"X1", {"a"}}, {"X2", {"b", "c"}}}), ErrorKind::TooFewParts);
    CHECK_ERROR_KIND(MultipartiteTournament::validate(d, {{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {}}}),
                     ErrorKind::EmptyPart);
    CHECK_ERROR_KIND(MultipartiteTournament::validate(d, {{"X1", {"a"}}, {"X2", {"b"}}}), ErrorKind::TooFewParts);
    CHECK_ERROR_KIND(MultipartiteTournament::validate(d, {{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {"c", "a"}}}),
                     ErrorKind::PartitionMismatch);
    CHECK_ERROR_KIND(MultipartiteTournament::validate(d, {{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {"z"}}}),
                     ErrorKind::PartitionMismatch);

    Digraph four({"a", "b", "c", "d"});
    four.add_arc(0, 1);
    four.add_arc(0, 2);
    four.add_arc(1, 2);
    four.add_arc(3, 0);
    four.add_arc(3, 1);
    four.add_arc(2, 3);
    check_error_detail(four, {{"X1", {"a"}}, {"X2", {"b"}}, {"X3", {"c", "d"}}}, ErrorKind::IntraPartArc, "c, d");
}

TEST_CASE("first violation follows the canonical order") {
    // Parts listed as {c},{b},{a}: canonical order is c, b, a.
    Digraph d({"a", "b", "c"});
    d.add_arc(0, 1);
    const std::vector<PartSpec> parts{{"P", {"c"}}, {"Q", {"b"}}, {"R", {"a"}}};
    check_error_detail(d, parts, ErrorKind::MissingCrossArc, "c, b");
    const auto t = MultipartiteTournament::validate(t3_digraph(), parts);
    CHECK(t.label(0) == "c");
    CHECK(t.part_name(0) == "P");
}

TEST_CASE("random tournaments") {
    const auto d = random_tournament({2, 2, 1}, 42);
    CHECK(d.digraph().arc_count() == 8);
    CHECK(d == random_tournament({2, 2, 1}, 42));
    CHECK(d.label(0) == "p1v1");
    CHECK(d.label(4) == "p3v1");
    CHECK(d.part_name(2) == "p3");
    CHECK_ERROR_KIND(random_tournament({3, 1}, 7), ErrorKind::TooFewParts);
    CHECK_ERROR_KIND(random_tournament({3, 0, 1}, 7), ErrorKind::EmptyPart);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = random_tournament({3, 2, 2, 1}, seed);
        CHECK(t.digraph().arc_count() == 3 * 2 + 3 * 2 + 3 + 2 * 2 + 2 + 2);
        CHECK(MultipartiteTournament::validate(t.digraph(), t.part_specs()) == t);
    }
}

TEST_CASE("splitmix64 reference values") {
    // First outputs for seed 0 of the published SplitMix64 generator.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("coin fairness band per cross pair") {
    const std::vector<std::size_t> sizes{2, 2, 2};
    const auto pairs = cross_pairs(sizes);
    std::vector<int> forward(pairs.size(), 0);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto t = random_tournament(sizes, seed);
        for (std::size_t i = 0; i < pairs.size(); ++i) forward[i] += t.digraph().has_arc(pairs[i].first, pairs[i].second);
    }
    for (int f : forward) {
        CHECK(f >= 400);
        CHECK(f <= 600);
    }
}

TEST_CASE("enumeration sizes and order") {
    auto count = [](std::vector<std::size_t> sizes) {
        TournamentEnumerator e(std::move(sizes));
        std::size_t n = 0;
        std::set<std::set<std::pair<std::string, std::string>>> distinct;
        while (auto d = e.next()) {
            distinct.insert(named_arcs(*d));
            ++n;
        }
        CHECK(distinct.size() == n);
        return n;
    };
    CHECK(count({1, 1, 1}) == 8);
    CHECK(count({2, 1, 1}) == 32);
    CHECK(count({2, 2, 1}) == 256);
    CHECK(count({1, 1, 1, 1}) == 64);
    CHECK_ERROR_KIND(TournamentEnumerator({3, 3, 3}), ErrorKind::EnumerationTooLarge);
    CHECK_ERROR_KIND(TournamentEnumerator({3, 3}), ErrorKind::TooFewParts);

    // Orientation bit-vectors in lexicographic order: first all forward, last all reversed,
    // and the first cross pair flips only in the second half.
    TournamentEnumerator e({2, 1, 1});
    const auto pairs = cross_pairs({2, 1, 1});
    std::vector<MultipartiteTournament> all;
    while (auto d = e.next()) all.push_back(*d);
    for (std::size_t k = 0; k < all.size(); ++k) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const bool reversed = all[k].digraph().has_arc(pairs[i].second, pairs[i].first);
            CHECK(reversed == (((k >> (pairs.size() - 1 - i)) & 1U) != 0));
        }
    }
}

TEST_CASE("two strongly connected orientations of the triangle") {
    TournamentEnumerator e({1, 1, 1});
    int strong = 0;
    while (auto d = e.next()) strong += oracle::strongly_connected(oracle::arc_matrix(*d)) ? 1 : 0;
    CHECK(strong == 2);
}

TEST_CASE("fixtures") {
    CHECK(t3().part_count() == 3);
    CHECK(named_arcs(t3()) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(named_arcs(star5()) == std::set<std::pair<std::string, std::string>>{{"u1", "u3"},
                                                                                {"u3", "u2"},
                                                                                {"u2", "u4"},
                                                                                {"u4", "u1"},
                                                                                {"x", "u1"},
                                                                                {"x", "u2"},
                                                                                {"x", "u3"},
                                                                                {"x", "u4"}});
    CHECK(named_arcs(sink4()) ==
          std::set<std::pair<std::string, std::string>>{{"v", "s"}, {"w", "s"}, {"u", "v"}, {"u", "w"}, {"v", "w"}});
    CHECK(star5().part(0) == by_label(star5(), {"u1", "u2"}));
    CHECK(sink4().part(0) == by_label(sink4(), {"s", "u"}));
    for (const auto* f : {&t3(), &star5(), &sink4()}) {
        CHECK(MultipartiteTournament::validate(f->digraph(), f->part_specs()) == *f);
    }
}
