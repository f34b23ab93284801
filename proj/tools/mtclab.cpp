// mtclab: command-line front end.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mtclab/competition.hpp"
#include "mtclab/error.hpp"
#include "mtclab/fuzz.hpp"
#include "mtclab/mtd.hpp"
#include "mtclab/recognition.hpp"
#include "mtclab/report.hpp"
#include "mtclab/structure.hpp"
#include "mtclab/theorems.hpp"

namespace {

using namespace mtclab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MultipartiteTournament load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mtd(buf.str());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("MTCLAB_SEED");
    if (env == nullptr || *env == '\0') return 0;
    return parse_seed_range(env).first;
}

int cmd_gen(const std::string& parts, std::uint64_t seed, const std::string& output) {
    write_output(output, serialize_mtd(random_tournament(parse_part_sizes(parts), seed)));
    return kExitOk;
}

int cmd_compete(const std::string& input, const std::string& method, const std::string& dot) {
    const MultipartiteTournament d = load(input);
    const bool fast = method != "oracle";
    const SimpleGraph g = competition_graph(d, fast ? Method::Fast : Method::Oracle);
    std::cout << "method " << method << "\n" << emit_competition(d, g);
    int code = kExitOk;
    if (method == "both") {
        const SimpleGraph oracle = competition_graph(d, Method::Oracle);
        const bool same = oracle == g;
        std::cout << "fast-vs-oracle " << (same ? "agree" : "DISAGREE") << "\n";
        if (!same) code = kExitFail;
    }
    if (!dot.empty()) write_output(dot, emit_dot(d, g));
    return code;
}

int cmd_classify(const std::string& input) {
    const MultipartiteTournament d = load(input);
    const SimpleGraph g = competition_graph(d, Method::Fast);
    StructureReport r = classify_parts(d, g);
    if (r.loose) r = verify_block_structure(d, g);
    std::cout << emit_structure(d, r);
    return r.blocks_pass() ? kExitOk : kExitFail;
}

int cmd_recognize(const std::string& input, const std::string& which) {
    const MultipartiteTournament d = load(input);
    const SimpleGraph g = competition_graph(d, Method::Fast);
    const bool all = which.empty();
    if (all || which == "chordal") {
        const ChordalityResult r = is_chordal(g);
        std::cout << "chordal " << (r.chordal ? "yes" : "no") << "\n";
        if (r.hole) std::cout << "  " << emit_hole(g, *r.hole) << "\n";
    }
    if (all || which == "c4free") {
        const C4Result r = is_c4_free(g);
        std::cout << "c4free " << (r.c4_free ? "yes" : "no") << "\n";
        if (r.hole) std::cout << "  " << emit_hole(g, *r.hole) << "\n";
    }
    if (all || which == "at") {
        const auto at = find_asteroidal_triple(g);
        std::cout << "at-free " << (at ? "no" : "yes") << "\n";
        if (at) std::cout << "  " << emit_asteroidal_triple(g, *at) << "\n";
    }
    if (all || which == "interval") {
        const IntervalResult r = is_interval(g);
        std::cout << "interval " << (r.interval ? "yes" : "no") << "\n";
        if (r.hole) std::cout << "  " << emit_hole(g, *r.hole) << "\n";
        if (r.asteroidal_triple) std::cout << "  " << emit_asteroidal_triple(g, *r.asteroidal_triple) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& theorem) {
    const MultipartiteTournament d = load(input);
    std::vector<CheckResult> results;
    if (theorem.empty()) {
        results = check_all(d);
    } else {
        results.push_back(check(theorem, d));
    }
    std::cout << emit_checks(results);
    for (const CheckResult& r : results) {
        if (r.verdict == Verdict::Fail) return kExitFail;
    }
    return kExitOk;
}

int cmd_fuzz(FuzzConfig config, const std::string& menu, const std::string& seeds, const std::string& format,
             const std::string& output) {
    config.part_size_menu = parse_parts_menu(menu);
    std::tie(config.seed_begin, config.seed_end) = parse_seed_range(seeds);
    const FuzzReport report = fuzz(config);
    write_output(output, format == "json" ? emit_fuzz_json(report) : emit_fuzz_text(report));
    return report.failures.empty() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multipartite tournaments and their (1,2)-step competition graphs"};
    app.require_subcommand(1);

    std::string parts;
    std::uint64_t seed = 0;
    std::string output;
    std::string input;
    std::string method = "fast";
    std::string dot;
    std::string graph_class;
    std::string theorem;
    std::string menu = "2,2,1;2,2,2;3,2,1";
    std::string seeds = "0..199";
    std::string format = "text";
    FuzzConfig config;

    auto* gen = app.add_subcommand("gen", "generate a random multipartite tournament (MTD v1)");
    gen->add_option("--parts", parts, "part sizes, e.g. 2,2,1")->required();
    auto* seed_opt = gen->add_option("--seed", seed, "generator seed (default: $MTCLAB_SEED or 0)");
    gen->add_option("-o,--output", output, "output file (default: stdout)");

    auto* compete = app.add_subcommand("compete", "compute C_{1,2}(D) with edge witnesses");
    compete->add_option("-i,--input", input, "MTD file")->required();
    compete->add_option("--method", method, "fast, oracle or both")
        ->check(CLI::IsMember({"fast", "oracle", "both"}));
    compete->add_option("--dot", dot, "write the graph as DOT");

    auto* classify = app.add_subcommand("classify", "sinks, part flags, F-sets and block structure");
    classify->add_option("-i,--input", input, "MTD file")->required();

    auto* recognize = app.add_subcommand("recognize", "chordal / C4-free / AT-free / interval tests");
    recognize->add_option("-i,--input", input, "MTD file")->required();
    recognize->add_option("--class", graph_class, "interval, chordal, c4free or at (default: all)")
        ->check(CLI::IsMember({"interval", "chordal", "c4free", "at"}));

    auto* verify = app.add_subcommand("verify", "run theorem checks on one instance");
    verify->add_option("-i,--input", input, "MTD file")->required();
    verify->add_option("--theorem", theorem, "catalog id (default: all)");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "run the theorem catalog over generated instances");
    fuzz_cmd->add_option("--parts-menu", menu, "size-vectors separated by ';'");
    fuzz_cmd->add_option("--seeds", seeds, "inclusive range lo..hi");
    fuzz_cmd->add_flag("--exhaustive", config.exhaustive, "enumerate all orientations instead of seeds");
    fuzz_cmd->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    fuzz_cmd->add_flag("--stop-on-fail", config.stop_on_fail, "stop at the first failing instance");
    fuzz_cmd->add_option("--theorem", theorem, "restrict to one catalog id");
    fuzz_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    fuzz_cmd->add_option("-o,--output", output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(parts, seed_opt->count() ? seed : default_seed(), output);
        if (*compete) return cmd_compete(input, method, dot);
        if (*classify) return cmd_classify(input);
        if (*recognize) return cmd_recognize(input, graph_class);
        if (*verify) return cmd_verify(input, theorem);
        if (*fuzz_cmd) {
            if (!theorem.empty()) config.theorem = theorem;
            return cmd_fuzz(config, menu, seeds, format, output);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
