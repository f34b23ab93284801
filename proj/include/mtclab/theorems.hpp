#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtclab/graph.hpp"
#include "mtclab/recognition.hpp"
#include "mtclab/structure.hpp"
#include "mtclab/tournament.hpp"

namespace mtclab {

enum class Verdict { Pass, Fail, NotApplicable, SkippedSize };

std::string_view to_string(Verdict v);

struct Counterexample {
    std::string mtd;        // the instance, MTD v1
    std::string violation;  // the violating tuple, by vertex label
};

struct CheckResult {
    std::string id;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
    std::optional<Counterexample> counterexample;  // set exactly when verdict == Fail
    std::vector<std::string> observations;          // tallied by the fuzzer
};

/// Everything the checks share for one instance, computed once.
class InstanceContext {
public:
    explicit InstanceContext(const MultipartiteTournament& d);

    const MultipartiteTournament& d;
    SimpleGraph g;       // C_{1,2}(D), closed-form route
    SimpleGraph oracle;  // C_{1,2}(D), distance route
    StructureReport report;
    VertexSet sink_set;
    std::vector<std::size_t> non_competing;

    bool loose() const { return report.loose; }
    std::string name(Vertex v) const { return d.label(v); }
    std::string names(VertexSet s) const;

    /// All holes of length >= 5, or nullopt past the enumeration cap.
    const std::optional<std::vector<HoleWitness>>& long_holes() const;
    /// All holes of length exactly 4.
    const std::vector<HoleWitness>& four_holes() const;
    const ChordalityResult& chordality() const;
    const IntervalResult& interval() const;

private:
    mutable std::optional<std::optional<std::vector<HoleWitness>>> long_holes_;
    mutable std::optional<std::vector<HoleWitness>> four_holes_;
    mutable std::optional<ChordalityResult> chordality_;
    mutable std::optional<IntervalResult> interval_;
};

/// Accumulates one check: each tuple either fails its hypothesis (ignored) or
/// is tested against the conclusion. The first failing tuple is kept.
class Tally {
public:
    void consider(bool hypothesis, bool conclusion, const std::function<std::string()>& describe);
    void skip(std::string reason);
    void observe(std::string note) { observations_.push_back(std::move(note)); }

    bool failed() const { return failure_.has_value(); }
    bool skipped() const { return skipped_.has_value(); }
    CheckResult result(const std::string& id, const InstanceContext& ctx) const;

private:
    std::size_t applicable_ = 0;
    std::size_t tested_ok_ = 0;
    std::optional<std::string> failure_;
    std::optional<std::string> skipped_;
    std::vector<std::string> observations_;
};

struct TheoremCheck {
    std::string id;
    std::string description;
    std::function<void(const InstanceContext&, Tally&)> run;
};

inline constexpr std::size_t kMaximalStableSetLimit = 16;
inline constexpr std::size_t kCycleScanLimit = 12;
inline constexpr std::size_t kHoleEnumerationLimit = 16;
inline constexpr std::size_t kSubsetScanLimit = 16;

const std::vector<TheoremCheck>& theorem_catalog();
const TheoremCheck& find_theorem(std::string_view id);

CheckResult run_check(const TheoremCheck& check, const InstanceContext& ctx);
CheckResult check(std::string_view id, const MultipartiteTournament& d);
std::vector<CheckResult> check_all(const MultipartiteTournament& d);

}  // namespace mtclab
