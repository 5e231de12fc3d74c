#pragma once

// A link in a solid torus, cut by m cyclically ordered meridional discs
// D_0 .. D_{m-1} into chambers.  Chamber i sits between D_{i-1} (its bottom)
// and D_i (its top), indices mod m.  With m == 1 both ends of the single
// chamber are the two sides of the same disc.

#include <cstddef>
#include <string>
#include <vector>

#include "chamber/tangle_catalog.hpp"

namespace chamber {

class ChamberLink {
 public:
  /// Throws InvalidLink if `chambers` is empty.  Contents are not validated
  /// here; see validate().
  explicit ChamberLink(std::vector<ChamberContent> chambers, std::string name = "L");

  const std::string& name() const { return name_; }
  const std::vector<ChamberContent>& chambers() const { return chambers_; }
  std::size_t chamber_count() const { return chambers_.size(); }
  const ChamberContent& chamber(std::size_t i) const { return chambers_.at(i); }

  /// Index of the disc below / above chamber i.
  std::size_t bottom_disc(std::size_t i) const { return (i + chambers_.size() - 1) % chambers_.size(); }
  std::size_t top_disc(std::size_t i) const { return i % chambers_.size(); }

  bool operator==(const ChamberLink&) const = default;

 private:
  std::vector<ChamberContent> chambers_;
  std::string name_;
};

struct LinkViolation {
  std::string code;
  std::size_t chamber = 0;
  std::string message;
  /// Piece index in canonical order, or npos when the whole chamber is meant.
  std::size_t piece = static_cast<std::size_t>(-1);
};

struct ValidationReport {
  /// n_i = number of slots on D_i, taken from the top of chamber i.
  std::vector<std::size_t> disc_counts;
  bool uniform = true;
  std::vector<LinkViolation> violations;

  bool accepted() const { return violations.empty(); }
};

/// Total: structural problems are reported, never thrown.  Non-uniform disc
/// counts are accepted but flagged through `uniform`.
ValidationReport validate(const ChamberLink& link);

/// Throws InvalidLink when validate() reports violations.
void require_valid(const ChamberLink& link);

/// [n_0, ..., n_{m-1}].  Throws InvalidLink.
std::vector<std::size_t> disc_counts(const ChamberLink& link);

struct DiscCrossing {
  std::size_t disc = 0;
  Slot slot = 0;
  /// +1 when the component passes from chamber disc to chamber disc+1.
  int sign = +1;

  bool operator==(const DiscCrossing&) const = default;
};

struct ComponentTrace {
  std::size_t id = 0;
  /// Crossings in traversal order; the list is cyclic.
  std::vector<DiscCrossing> crossings;
  /// Signed crossing count through disc 0, or through the first visited
  /// disc when the component never meets disc 0.
  long winding = 0;

  bool operator==(const ComponentTrace&) const = default;
};

/// Follows every arc through the disc identifications and returns one trace
/// per component.
///
/// Components are numbered in discovery order: endpoints are scanned by
/// (chamber, side, slot) with bottom before top, and an unvisited endpoint
/// starts a new component.  Circles follow as zero-crossing traces in
/// chamber order.  Each component is oriented so that its winding is
/// non-negative; a component of winding 0 is oriented so that the crossing at
/// its discovering endpoint is positive.  The crossing list starts at that
/// crossing.  Throws InvalidLink.
std::vector<ComponentTrace> trace_components(const ChamberLink& link);

/// Signed crossing sum of all components at disc 0 under the orientation of
/// trace_components.  Throws InvalidLink.
long total_signed_sum(const ChamberLink& link);

/// Signed crossing sum at an arbitrary disc.  Equal for every disc.
long signed_sum_at(const std::vector<ComponentTrace>& traces, std::size_t disc);

/// Replaces chamber i, which must hold one Antoine clasp and spans only, by
/// the two chambers produced by split_antoine.  The new middle disc becomes
/// D_{i}; later discs shift up by one.  Throws InvalidLink / NotSplittable.
ChamberLink split_antoine_at(const ChamberLink& link, std::size_t chamber);

/// Chamber list rotated so that old chamber `shift` becomes chamber 0.
ChamberLink rotate(const ChamberLink& link, std::size_t shift);

}  // namespace chamber
