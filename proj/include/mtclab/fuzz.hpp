#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtclab/theorems.hpp"

namespace mtclab {

using PartSizes = std::vector<std::size_t>;

struct FuzzConfig {
    std::vector<PartSizes> part_size_menu;
    std::uint64_t seed_begin = 0;
    std::uint64_t seed_end = 199;  // inclusive
    bool exhaustive = false;       // enumerate every orientation instead of seeding
    bool stop_on_fail = false;
    std::size_t jobs = 1;
    std::optional<std::string> theorem;  // restrict to one catalog entry
};

struct TheoremTally {
    std::string id;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t not_applicable = 0;
    std::size_t skipped_size = 0;

    bool operator==(const TheoremTally&) const = default;
};

struct FuzzFailure {
    PartSizes sizes;
    std::uint64_t seed = 0;  // orientation index when exhaustive
    std::string id;
    std::string violation;
    std::string mtd;

    bool operator==(const FuzzFailure&) const = default;
};

struct FuzzReport {
    bool exhaustive = false;
    std::size_t instances = 0;
    bool stopped_early = false;
    std::vector<TheoremTally> tallies;  // catalog order
    std::vector<FuzzFailure> failures;  // by (sizes, seed, catalog order)
    std::map<std::string, std::size_t> observations;  // instances showing each note

    std::size_t failure_count() const { return failures.size(); }
    bool operator==(const FuzzReport&) const = default;
};

/// Runs the catalog over every (sizes, seed) of the config. The report does
/// not depend on `jobs`. With stop_on_fail, instances after the first failing
/// one (in (sizes, seed) order) are dropped.
FuzzReport fuzz(const FuzzConfig& config);

/// "2,2,1;2,2,2" -> {{2,2,1},{2,2,2}}; spaces also separate. Throws ConfigError.
std::vector<PartSizes> parse_parts_menu(std::string_view text);
/// "0..199" or a single "17". Throws ConfigError.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text);
/// "2,2,1". Throws ConfigError.
PartSizes parse_part_sizes(std::string_view text);

std::string format_sizes(const PartSizes& sizes);

}  // namespace mtclab
