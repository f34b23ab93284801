#include "mtclab/mtd.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

#include "mtclab/error.hpp"

namespace mtclab {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;) tokens.push_back(t);
    return tokens;
}

bool valid_name(const std::string& s) {
    for (unsigned char c : s) {
        if (c <= 0x20 || c >= 0x7F) return false;
    }
    return !s.empty();
}

}  // namespace

MultipartiteTournament parse_mtd(std::string_view text) {
    std::vector<PartSpec> parts;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::unordered_map<std::string, std::size_t> vertex_line;
    std::unordered_map<std::string, std::size_t> arc_line;
    bool header = false;
    std::size_t line_no = 0;
    std::size_t last_line = 0;  // last line with any content

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        start = end + 1;
        ++line_no;
        if (raw.find_first_not_of(" \t") != std::string_view::npos) last_line = line_no;

        const std::vector<std::string> tok = tokenize(raw);
        if (tok.empty()) continue;
        auto fail = [line_no](const std::string& what) -> Error {
            return Error(ErrorKind::SyntaxError, what, line_no);
        };
        if (!header) {
            if (tok.size() != 2 || tok[0] != "mtd") throw fail("expected 'mtd 1' header");
            if (tok[1] != "1") throw fail("unsupported version " + tok[1]);
            header = true;
            continue;
        }
        if (tok[0] == "part") {
            if (!arcs.empty()) throw fail("part line after arc lines");
            if (tok.size() < 3) throw fail("part needs a name and at least one vertex");
            PartSpec spec{tok[1], {}};
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (!valid_name(tok[i])) throw fail("invalid vertex name");
                if (!vertex_line.emplace(tok[i], line_no).second) throw fail("duplicate vertex " + tok[i]);
                spec.members.push_back(tok[i]);
            }
            parts.push_back(std::move(spec));
        } else if (tok[0] == "arc") {
            if (tok.size() != 3) throw fail("arc needs exactly two vertices");
            if (parts.empty()) throw fail("arc line before any part line");
            if (tok[1] == tok[2]) throw fail("self-loop on " + tok[1]);
            for (std::size_t i = 1; i <= 2; ++i) {
                if (!vertex_line.contains(tok[i])) throw fail("undeclared vertex " + tok[i]);
            }
            const std::string key = tok[1] + " " + tok[2];
            const std::string reverse_key = tok[2] + " " + tok[1];
            if (arc_line.contains(key)) throw fail("duplicate arc " + key);
            if (arc_line.contains(reverse_key)) {
                throw Error(ErrorKind::DoubleOrientation, tok[1] + ", " + tok[2], line_no);
            }
            arc_line.emplace(key, line_no);
            arcs.emplace_back(tok[1], tok[2]);
        } else {
            throw fail("unknown directive '" + tok[0] + "'");
        }
    }
    if (!header) throw Error(ErrorKind::SyntaxError, "empty document", last_line);
    if (parts.empty()) throw Error(ErrorKind::SyntaxError, "no part lines", last_line);
    if (parts.size() < 3) {
        throw Error(ErrorKind::TooFewParts, "k = " + std::to_string(parts.size()), last_line);
    }

    std::vector<std::string> labels;
    for (const PartSpec& p : parts) labels.insert(labels.end(), p.members.begin(), p.members.end());
    Digraph d;
    try {
        d = Digraph(labels);
    } catch (const Error& e) {
        throw Error(e.kind(), e.detail(), last_line);
    }
    for (const auto& [u, v] : arcs) d.add_arc(d.index_of(u), d.index_of(v));
    try {
        return MultipartiteTournament::validate(d, parts);
    } catch (const Error& e) {
        // Point at the offending arc line when there is one.
        std::size_t where = last_line;
        for (const auto& [key, ln] : arc_line) {
            const auto space = key.find(' ');
            const std::string a = key.substr(0, space);
            const std::string b = key.substr(space + 1);
            if (e.detail() == a + ", " + b || e.detail() == b + ", " + a) where = ln;
        }
        throw Error(e.kind(), e.detail(), where);
    }
}

std::string serialize_mtd(const MultipartiteTournament& d) {
    std::string out = "mtd 1\n";
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        out += "part " + d.part_name(i);
        for (Vertex v : d.part(i)) out += " " + d.label(v);
        out += "\n";
    }
    for (auto [u, v] : d.digraph().arcs()) out += "arc " + d.label(u) + " " + d.label(v) + "\n";
    return out;
}

}  // namespace mtclab
