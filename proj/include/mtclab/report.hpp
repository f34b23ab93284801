#pragma once

#include <string>
#include <vector>

#include "mtclab/fuzz.hpp"
#include "mtclab/graph.hpp"
#include "mtclab/recognition.hpp"
#include "mtclab/structure.hpp"
#include "mtclab/theorems.hpp"
#include "mtclab/tournament.hpp"

namespace mtclab {

/// C_{1,2}(D) as an undirected DOT graph: one cluster per part, sinks dashed.
std::string emit_dot(const MultipartiteTournament& d, const SimpleGraph& g);

/// Edge list of G, each edge followed by the witness that produced it.
std::string emit_competition(const MultipartiteTournament& d, const SimpleGraph& g);

std::string emit_structure(const MultipartiteTournament& d, const StructureReport& report);

std::string emit_hole(const SimpleGraph& g, const HoleWitness& h);
std::string emit_asteroidal_triple(const SimpleGraph& g, const ATWitness& at);

std::string emit_checks(const std::vector<CheckResult>& results);

std::string emit_fuzz_text(const FuzzReport& report);
std::string emit_fuzz_json(const FuzzReport& report);

}  // namespace mtclab
