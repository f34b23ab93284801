#include "mtclab/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <set>
#include <thread>

#include "mtclab/error.hpp"
#include "mtclab/mtd.hpp"
#include "mtclab/tournament.hpp"

namespace mtclab {

namespace {

std::uint64_t parse_number(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorKind::ConfigError, "bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Instance {
    PartSizes sizes;
    std::uint64_t seed = 0;
};

struct InstanceOutcome {
    std::vector<CheckResult> results;
    bool failed = false;
};

}  // namespace

PartSizes parse_part_sizes(std::string_view text) {
    PartSizes sizes;
    for (std::string_view item : split(text, ',')) {
        const std::uint64_t n = parse_number(item, "part size");
        if (n == 0) throw Error(ErrorKind::ConfigError, "part sizes must be positive");
        sizes.push_back(static_cast<std::size_t>(n));
    }
    return sizes;
}

std::vector<PartSizes> parse_parts_menu(std::string_view text) {
    std::vector<PartSizes> menu;
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ' ', ';');
    for (std::string_view item : split(normalized, ';')) {
        if (!item.empty()) menu.push_back(parse_part_sizes(item));
    }
    if (menu.empty()) throw Error(ErrorKind::ConfigError, "empty part-size menu");
    return menu;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::uint64_t s = parse_number(text, "seed");
        return {s, s};
    }
    const std::uint64_t lo = parse_number(text.substr(0, dots), "seed");
    const std::uint64_t hi = parse_number(text.substr(dots + 2), "seed");
    if (hi < lo) throw Error(ErrorKind::ConfigError, "empty seed range");
    return {lo, hi};
}

std::string format_sizes(const PartSizes& sizes) {
    std::string out;
    for (std::size_t s : sizes) {
        if (!out.empty()) out += ",";
        out += std::to_string(s);
    }
    return out;
}

FuzzReport fuzz(const FuzzConfig& config) {
    if (config.part_size_menu.empty()) throw Error(ErrorKind::ConfigError, "empty part-size menu");
    for (const PartSizes& sizes : config.part_size_menu) {
        if (sizes.size() < 3) {
            throw Error(ErrorKind::ConfigError, "size-vector [" + format_sizes(sizes) + "] has fewer than 3 parts");
        }
        if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
            throw Error(ErrorKind::ConfigError, "part sizes must be positive");
        }
        std::size_t total = 0;
        for (std::size_t s : sizes) total += s;
        if (total > kMaxVertices) throw Error(ErrorKind::ConfigError, "too many vertices");
    }
    if (!config.exhaustive && config.seed_end < config.seed_begin) {
        throw Error(ErrorKind::ConfigError, "empty seed range");
    }

    std::vector<const TheoremCheck*> checks;
    if (config.theorem) {
        try {
            checks.push_back(&find_theorem(*config.theorem));
        } catch (const Error& e) {
            throw Error(ErrorKind::ConfigError, e.what());
        }
    } else {
        for (const TheoremCheck& c : theorem_catalog()) checks.push_back(&c);
    }

    std::set<PartSizes> menu(config.part_size_menu.begin(), config.part_size_menu.end());
    std::vector<Instance> instances;
    for (const PartSizes& sizes : menu) {
        std::uint64_t lo = config.seed_begin;
        std::uint64_t hi = config.seed_end;
        if (config.exhaustive) {
            const std::size_t pairs = cross_pairs(sizes).size();
            if (pairs > kMaxEnumeratedCrossPairs) {
                throw Error(ErrorKind::ConfigError, "[" + format_sizes(sizes) + "] is too large to enumerate");
            }
            lo = 0;
            hi = (std::uint64_t{1} << pairs) - 1;
        }
        for (std::uint64_t s = lo;; ++s) {
            instances.push_back({sizes, s});
            if (s == hi) break;
        }
    }

    std::vector<InstanceOutcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{instances.size()};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            if (config.stop_on_fail && i > first_failure.load()) continue;
            const Instance& inst = instances[i];
            const MultipartiteTournament d = config.exhaustive
                                                 ? tournament_from_orientation(inst.sizes, inst.seed)
                                                 : random_tournament(inst.sizes, inst.seed);
            const InstanceContext ctx(d);
            InstanceOutcome& out = outcomes[i];
            for (const TheoremCheck* c : checks) {
                out.results.push_back(run_check(*c, ctx));
                out.failed = out.failed || out.results.back().verdict == Verdict::Fail;
            }
            if (out.failed) {
                std::size_t seen = first_failure.load();
                while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    FuzzReport report;
    report.exhaustive = config.exhaustive;
    for (const TheoremCheck* c : checks) report.tallies.push_back(TheoremTally{c->id});
    std::size_t limit = instances.size();
    if (config.stop_on_fail && first_failure.load() < instances.size()) {
        limit = first_failure.load() + 1;
        report.stopped_early = limit < instances.size();
    }
    report.instances = limit;
    for (std::size_t i = 0; i < limit; ++i) {
        for (std::size_t k = 0; k < checks.size(); ++k) {
            const CheckResult& r = outcomes[i].results[k];
            TheoremTally& t = report.tallies[k];
            switch (r.verdict) {
                case Verdict::Pass: ++t.pass; break;
                case Verdict::Fail: ++t.fail; break;
                case Verdict::NotApplicable: ++t.not_applicable; break;
                case Verdict::SkippedSize: ++t.skipped_size; break;
            }
            if (r.counterexample) {
                report.failures.push_back(
                    {instances[i].sizes, instances[i].seed, r.id, r.counterexample->violation, r.counterexample->mtd});
            }
            std::set<std::string> notes(r.observations.begin(), r.observations.end());
            for (const std::string& note : notes) ++report.observations[r.id + ":" + note];
        }
    }
    return report;
}

}  // namespace mtclab
