#pragma once

#include <string>

#include "chamber/link_model.hpp"

namespace chamber {

/// Fixed-width schematic.  The header lists the disc counts; below it one
/// block per chamber, separated by '|' disc markers, with a label row, a
/// summary row ("W + 2 spans") and one row per piece: spans as "b --- t",
/// clasps as "b0,b1 ]W[ t0,t1", turns as "a,b )" or "( a,b", circles as "o".
/// Throws InvalidLink.
std::string render_ascii(const ChamberLink& link);

/// Static SVG 1.1 schematic with the same layout, chambers left to right.
/// Throws InvalidLink.
std::string render_svg(const ChamberLink& link);

/// Summary of one chamber, e.g. "W + 2 spans", "4 spans", "S + 1 span".
std::string summarize(const ChamberContent& content);

}  // namespace chamber
