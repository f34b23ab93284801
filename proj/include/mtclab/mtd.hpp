#pragma once

#include <string>
#include <string_view>

#include "mtclab/tournament.hpp"

namespace mtclab {

/// Parses an MTD v1 document:
///
///     mtd 1
///     part <name> <v1> <v2> ...     (one line per partite set, at least 3)
///     arc <u> <v>                   (u -> v, one line per cross pair)
///
/// '#' starts a comment; blank lines are ignored. Errors carry the 1-based
/// line number; a missing cross arc is reported at the last line.
MultipartiteTournament parse_mtd(std::string_view text);

/// Canonical serialization: parts and vertices in declaration order, arcs by
/// (tail, head) canonical order, no comments, '\n' line endings.
std::string serialize_mtd(const MultipartiteTournament& d);

}  // namespace mtclab
