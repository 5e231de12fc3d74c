#pragma once

// Index algebra for satellite nesting, and builders for the standard link
// families.  Nesting works on index facts: if T0 sits in T1 and T1 in T2,
// geometric and algebraic indices of T0 in T2 are the products of the two
// steps.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chamber/index_engine.hpp"
#include "chamber/link_model.hpp"

namespace chamber {

/// Closed interval of admissible geometric index values.
struct IndexRange {
  unsigned lower = 0;
  unsigned upper = 0;

  static IndexRange exactly(unsigned v) { return {v, v}; }
  bool exact() const { return lower == upper; }
  bool operator==(const IndexRange&) const = default;
};

/// Endpoint-wise product; exact for non-negative intervals.
IndexRange operator*(const IndexRange& a, const IndexRange& b);

std::string to_string(const IndexRange& range);

struct IndexFacts {
  IndexRange geometric;
  unsigned algebraic = 0;
  /// Number of link components; a companion (outer operand) needs exactly one.
  std::size_t components = 1;

  bool operator==(const IndexFacts&) const = default;
};

class IndexExpr {
 public:
  static IndexExpr leaf(IndexFacts facts, std::string source);
  /// Leaf carrying the facts of a computed report.
  static IndexExpr leaf(const IndexReport& report, std::string source);
  /// The core of a solid torus: N = 1, a = 1, one component.
  static IndexExpr identity();

  bool is_leaf() const;
  std::size_t components() const;
  /// Leaf source, or "(inner in outer)" for nests.
  std::string describe() const;

  const IndexExpr* inner() const;
  const IndexExpr* outer() const;
  const IndexFacts* leaf_facts() const;

 private:
  struct Node;
  explicit IndexExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend IndexExpr nest(const IndexExpr& inner, const IndexExpr& outer);
};

/// `inner` placed inside the solid torus whose core is `outer`.  Throws
/// MultiComponentCompanion if `outer` has more than one component.
IndexExpr nest(const IndexExpr& inner, const IndexExpr& outer);

/// Bottom-up fold.  The result keeps the component count of the innermost
/// leaf.
IndexFacts evaluate(const IndexExpr& expr);

/// Left fold: links[0] inside links[1] inside links[2] ...
IndexExpr nest_chain(std::span<const IndexExpr> links);

enum class Pattern : std::uint8_t { spans_only, whitehead_plus_spans, square_knot_plus_spans, antoine_plus_spans };

std::string_view to_string(Pattern pattern);
/// Accepts the long names and the short forms spans, whitehead, squareknot, antoine.
std::optional<Pattern> parse_pattern(std::string_view text);

struct PatternChoice {
  std::size_t slot = 0;
  Pattern pattern = Pattern::spans_only;
};

inline constexpr std::size_t complicated_chambers = 8;
inline constexpr std::size_t complicated_strands = 8;

/// Eight-chamber link with eight strands per disc; each chamber holds the
/// chosen replacement pattern.  Clasps take slots 0 and 1 on both sides,
/// remaining slots run straight through.
ChamberLink generate_complicated(const std::array<Pattern, complicated_chambers>& patterns,
                                 std::string name = "complicated");

/// Same, from slot-tagged choices.  Throws std::invalid_argument unless there
/// is exactly one choice per slot 0..7.
ChamberLink generate_complicated(std::span<const PatternChoice> choices, std::string name = "complicated");

/// The pattern assignment shipped as corpus/complicated.cld.
std::array<Pattern, complicated_chambers> default_complicated_patterns();

/// Names accepted by corpus_link, in listing order.
const std::vector<std::string>& corpus_names();

/// Canonical encoding of a named link.  Throws UnknownName.
ChamberLink corpus_link(std::string_view name);

}  // namespace chamber
