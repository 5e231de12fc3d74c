#pragma once

// Catalog of what a single chamber (a copy of B^2 x I cut out of the solid
// torus by two meridional discs) may contain: spanning arcs, turn-backs,
// the three named clasps and free circles.
//
// Endpoints are identified by dense 0-based slot indices on each side.  The
// bottom side of a chamber is glued to the top side of the previous chamber
// by slot equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chamber {

using Slot = std::uint32_t;

enum class ClaspKind : std::uint8_t { whitehead, square_knot, antoine };

enum class Side : std::uint8_t { bottom, top };

std::string_view to_string(ClaspKind kind);
std::string_view to_string(Side side);

/// Single-letter glyph used in schematics: W, S or A.
char clasp_glyph(ClaspKind kind);

/// Unordered pair of slots on one side.  Stored with first <= second.
struct SlotPair {
  Slot first = 0;
  Slot second = 0;

  static SlotPair of(Slot a, Slot b) { return a <= b ? SlotPair{a, b} : SlotPair{b, a}; }

  auto operator<=>(const SlotPair&) const = default;
};

/// An arc running from the bottom disc to the top disc.
struct Span {
  Slot bottom = 0;
  Slot top = 0;

  auto operator<=>(const Span&) const = default;
};

/// Unknotted, unlinked arc with both endpoints on one side.
struct Turn {
  Side side = Side::bottom;
  SlotPair pair;

  auto operator<=>(const Turn&) const = default;
};

/// A top arc (both ends on the top disc) clasped with a bottom arc.
struct Clasp {
  ClaspKind kind = ClaspKind::whitehead;
  SlotPair top;
  SlotPair bottom;

  auto operator<=>(const Clasp&) const = default;
};

/// Closed curve in the chamber interior.
struct Circle {
  auto operator<=>(const Circle&) const = default;
};

// Alternative order is the canonical piece order inside a chamber.
using Piece = std::variant<Clasp, Span, Turn, Circle>;

struct EndpointProfile {
  std::size_t bottom = 0;
  std::size_t top = 0;

  bool operator==(const EndpointProfile&) const = default;
};

/// Contents of one chamber.  Pieces are kept in canonical order (clasps,
/// spans by bottom slot, turns, circles) so that structurally equal contents
/// compare equal regardless of how they were assembled.
class ChamberContent {
 public:
  ChamberContent() = default;
  explicit ChamberContent(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  std::size_t clasp_count() const;
  std::size_t span_count() const;
  std::size_t turn_count() const;
  std::size_t circle_count() const;

  bool operator==(const ChamberContent&) const = default;

 private:
  std::vector<Piece> pieces_;
};

/// A broken content invariant.  `code` is a stable identifier.
struct ContentViolation {
  std::string code;
  std::string message;
  /// Offending piece in canonical order, or npos for whole-content issues.
  std::size_t piece = static_cast<std::size_t>(-1);
};

/// Checks pair distinctness, per-side slot uniqueness and density.
std::vector<ContentViolation> check_content(const ChamberContent& content);

/// Number of distinct slots used on each side.
EndpointProfile endpoint_profile(const ChamberContent& content);

/// Certified lower-bound contribution of a piece to the chamber index:
/// spans give 1, clasps give 2, turns and circles give nothing.
unsigned index_contribution(const Piece& piece);

/// Sum of index_contribution over the content (2k + l).
unsigned certified_contribution(const ChamberContent& content);

struct AntoineSplit {
  ChamberContent lower;
  ChamberContent upper;
  std::size_t middle_disc_count = 0;
};

/// Cuts a chamber holding one Antoine clasp (plus spans) along a middle
/// meridional disc into two chambers with one Whitehead clasp each.
///
/// Middle slots 0 and 1 carry the clasp crossings; the spans follow at
/// 2, 3, ... in canonical order.  Outer slots are left untouched.
/// Throws NotSplittable when the content is anything else.
AntoineSplit split_antoine(const ChamberContent& content);

}  // namespace chamber
