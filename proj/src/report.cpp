#include "mtclab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "mtclab/competition.hpp"

namespace mtclab {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string set_text(const MultipartiteTournament& d, VertexSet s) {
    std::string out = "{";
    for (Vertex v : s) {
        if (out.size() > 1) out += ",";
        out += d.label(v);
    }
    return out + "}";
}

std::string path_text(const SimpleGraph& g, const std::vector<Vertex>& path) {
    std::string out;
    for (Vertex v : path) {
        if (!out.empty()) out += " ";
        out += g.label(v);
    }
    return out;
}

}  // namespace

std::string emit_dot(const MultipartiteTournament& d, const SimpleGraph& g) {
    std::ostringstream out;
    const VertexSet sink_set = sinks(d);
    out << "graph C12 {\n";
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=" << quoted(d.part_name(i)) << ";\n";
        for (Vertex v : d.part(i)) {
            out << "    " << quoted(d.label(v));
            if (sink_set.contains(v)) out << " [style=dashed]";
            out << ";\n";
        }
        out << "  }\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_competition(const MultipartiteTournament& d, const SimpleGraph& g) {
    std::ostringstream out;
    out << "vertices " << g.order() << "\n";
    out << "edges " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        out << d.label(u) << " -- " << d.label(v);
        if (auto w = competes(d, u, v)) {
            out << "  compete " << d.label(w->target);
        } else if (auto s = one_two_competes(d, u, v)) {
            out << "  step " << d.label(s->target) << " arc " << d.label(s->arc_tail) << "->" << d.label(s->target)
                << " path";
            for (std::size_t i = 0; i < s->path.size(); ++i) out << (i ? "->" : " ") << d.label(s->path[i]);
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_structure(const MultipartiteTournament& d, const StructureReport& r) {
    std::ostringstream out;
    out << "vertices " << d.order() << "\n";
    out << "parts " << d.part_count() << "\n";
    out << "U=" << set_text(d, r.sinks) << "\n";
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        out << "part " << d.part_name(i) << " " << set_text(d, d.part(i)) << " "
            << (r.part_flags.at(i) == PartFlag::Competing ? "competing" : "non-competing") << "\n";
    }
    for (std::size_t i = 0; i < d.part_count(); ++i) {
        out << "F[" << d.part_name(i) << "]=" << set_text(d, r.f_sets.at(i)) << "\n";
    }
    out << "loose=" << (r.loose ? "true" : "false") << "\n";
    if (r.x1) out << "X1=" << d.part_name(*r.x1) << "\n";
    if (r.x2) out << "X2=" << d.part_name(*r.x2) << "\n";
    if (r.x1) out << "X1*=" << set_text(d, r.x1_star) << "\n";
    for (const BlockVerdict& b : r.block_verdicts) {
        out << "block [" << b.designation << "] " << b.block << " " << b.pattern << " " << (b.pass ? "PASS" : "FAIL")
            << "\n";
    }
    if (!r.block_verdicts.empty()) out << "blocks " << (r.blocks_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string emit_hole(const SimpleGraph& g, const HoleWitness& h) {
    return "hole " + path_text(g, h.cycle);
}

std::string emit_asteroidal_triple(const SimpleGraph& g, const ATWitness& at) {
    std::string out = "asteroidal-triple " + g.label(at.triple[0]) + " " + g.label(at.triple[1]) + " " +
                      g.label(at.triple[2]);
    for (std::size_t i = 0; i < 3; ++i) {
        out += "\n  avoiding N[" + g.label(at.triple[i]) + "]: " + path_text(g, at.paths[i]);
    }
    return out;
}

std::string emit_checks(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const CheckResult& r : results) {
        out << r.id << " " << to_string(r.verdict);
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
        if (r.counterexample) out << "--- counterexample\n" << r.counterexample->mtd << "--- end\n";
    }
    return out.str();
}

std::string emit_fuzz_text(const FuzzReport& report) {
    std::ostringstream out;
    out << "instances " << report.instances << (report.exhaustive ? " (exhaustive)" : "") << "\n";
    if (report.stopped_early) out << "stopped at first failure\n";
    out << "theorem PASS FAIL NOT_APPLICABLE SKIPPED_SIZE\n";
    for (const TheoremTally& t : report.tallies) {
        out << t.id << " " << t.pass << " " << t.fail << " " << t.not_applicable << " " << t.skipped_size << "\n";
    }
    out << "observations " << report.observations.size() << "\n";
    for (const auto& [note, count] : report.observations) out << "  " << note << " " << count << "\n";
    out << "failures " << report.failures.size() << "\n";
    for (const FuzzFailure& f : report.failures) {
        out << "failure " << f.id << " parts " << format_sizes(f.sizes) << (report.exhaustive ? " orientation " : " seed ")
            << f.seed << ": " << f.violation << "\n";
        out << "--- mtd\n" << f.mtd << "--- end\n";
    }
    return out.str();
}

std::string emit_fuzz_json(const FuzzReport& report) {
    nlohmann::ordered_json j;
    j["instances"] = report.instances;
    j["exhaustive"] = report.exhaustive;
    j["stopped_early"] = report.stopped_early;
    j["theorems"] = nlohmann::ordered_json::array();
    for (const TheoremTally& t : report.tallies) {
        j["theorems"].push_back({{"id", t.id},
                                 {"pass", t.pass},
                                 {"fail", t.fail},
                                 {"not_applicable", t.not_applicable},
                                 {"skipped_size", t.skipped_size}});
    }
    j["observations"] = nlohmann::ordered_json::object();
    for (const auto& [note, count] : report.observations) j["observations"][note] = count;
    j["failures"] = nlohmann::ordered_json::array();
    for (const FuzzFailure& f : report.failures) {
        j["failures"].push_back({{"theorem", f.id},
                                 {"parts", f.sizes},
                                 {report.exhaustive ? "orientation" : "seed", f.seed},
                                 {"violation", f.violation},
                                 {"mtd", f.mtd}});
    }
    return j.dump(2) + "\n";
}

}  // namespace mtclab
