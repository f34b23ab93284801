#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "mtclab/competition.hpp"
#include "mtclab/mtd.hpp"
#include "mtclab/report.hpp"
#include "mtclab/structure.hpp"
#include "test_support.hpp"

using namespace mtclab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_parse_error(const std::string& text, ErrorKind kind, std::size_t line) {
    try {
        (void)parse_mtd(text);
        FAIL("parse should have failed");
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
        CHECK(e.line() == line);
    }
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("data files match the in-code fixtures byte for byte") {
    for (Fixture f : {Fixture::T3, Fixture::STAR5, Fixture::SINK4}) {
        const std::string path = std::string(MTCLAB_DATA_DIR) + "/" + std::string(fixture_name(f)) + ".mtd";
        const std::string text = read_file(path);
        CHECK(text == serialize_mtd(fixture(f)));
        CHECK(parse_mtd(text) == fixture(f));
    }
}

TEST_CASE("serialization layout") {
    CHECK(serialize_mtd(t3()) == "mtd 1\npart X1 a\npart X2 b\npart X3 c\narc a b\narc b c\narc c a\n");
}

TEST_CASE("round trips") {
    for (const auto* f : {&t3(), &star5(), &sink4()}) CHECK(parse_mtd(serialize_mtd(*f)) == *f);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto d = random_tournament({3, 2, 2, 1}, seed);
        const std::string text = serialize_mtd(d);
        CHECK(parse_mtd(text) == d);
        CHECK(serialize_mtd(parse_mtd(text)) == text);
    }
}

TEST_CASE("comments, blank lines and arc order are tolerated") {
    const std::string text =
        "# three-cycle\r\nmtd 1\n\npart X1 a   # first\npart X2 b\npart X3 c\narc c a\narc b c\narc a b\n";
    CHECK(parse_mtd(text) == t3());
}

TEST_CASE("parse errors carry line numbers") {
    const std::string head = "mtd 1\npart X1 u1 u2\npart X2 u3\npart X3 x\n";
    check_parse_error(head + "arc u1 u1\n", ErrorKind::SyntaxError, 5);
    check_parse_error("mtd 1\narc a b\n", ErrorKind::SyntaxError, 2);
    check_parse_error("mtd 1\n# nothing\n", ErrorKind::SyntaxError, 2);
    check_parse_error("", ErrorKind::SyntaxError, 0);
    check_parse_error("mtd 2\n", ErrorKind::SyntaxError, 1);
    check_parse_error("graph\n", ErrorKind::SyntaxError, 1);
    check_parse_error(head + "arc u1 zz\n", ErrorKind::SyntaxError, 5);
    check_parse_error(head + "arc u1\n", ErrorKind::SyntaxError, 5);
    check_parse_error(head + "edge u1 x\n", ErrorKind::SyntaxError, 5);
    check_parse_error(head + "arc u1 u3\npart X4 y\n", ErrorKind::SyntaxError, 6);
    check_parse_error("mtd 1\npart X1 a a\n", ErrorKind::SyntaxError, 2);
    check_parse_error(head + "arc u1 u3\narc u1 u3\n", ErrorKind::SyntaxError, 6);
    check_parse_error(head + "arc u1 u3\narc u3 u1\n", ErrorKind::DoubleOrientation, 6);
    check_parse_error(head + "arc u1 u2\n", ErrorKind::IntraPartArc, 5);
    check_parse_error("mtd 1\npart X1 a\npart X2 b\narc a b\n", ErrorKind::TooFewParts, 4);
    // Missing cross arcs are reported at the last line.
    check_parse_error(head + "arc u1 u3\n", ErrorKind::MissingCrossArc, 5);
}

TEST_CASE("DOT output") {
    const std::string t = emit_dot(t3(), competition_graph(t3(), Method::Fast));
    CHECK(count(t, " -- ") == 0);
    CHECK(count(t, "subgraph cluster_") == 3);
    CHECK(count(t, "    \"") == 3);

    const std::string s = emit_dot(star5(), competition_graph(star5(), Method::Fast));
    CHECK(count(s, " -- ") == 4);
    CHECK(count(s, "    \"") == 5);
    CHECK(s.find("\"u1\" -- \"x\";") != std::string::npos);

    const std::string k = emit_dot(sink4(), competition_graph(sink4(), Method::Fast));
    CHECK(k.find("\"s\" [style=dashed];") != std::string::npos);
    CHECK(count(k, "dashed") == 1);
    CHECK(k.rfind("graph C12 {\n", 0) == 0);
}

TEST_CASE("structure report text") {
    const SimpleGraph g = competition_graph(sink4(), Method::Fast);
    const std::string text = emit_structure(sink4(), verify_block_structure(sink4(), g));
    CHECK(text.find("U={s}\n") != std::string::npos);
    CHECK(text.find("loose=true\n") != std::string::npos);
    CHECK(text.find("part X1 {s,u} non-competing\n") != std::string::npos);
    CHECK(text.find("blocks PASS\n") != std::string::npos);

    const std::string tight = emit_structure(t3(), classify_parts(t3(), competition_graph(t3(), Method::Fast)));
    CHECK(tight.find("loose=false\n") != std::string::npos);
    CHECK(tight.find("U={}\n") != std::string::npos);
}

TEST_CASE("competition listing names a witness per edge") {
    const std::string text = emit_competition(sink4(), competition_graph(sink4(), Method::Fast));
    CHECK(text.find("edges 3\n") != std::string::npos);
    CHECK(text.find("v -- w  compete s\n") != std::string::npos);
    CHECK(text.find("u -- w  step s arc w->s path u->v->s\n") != std::string::npos);
}
