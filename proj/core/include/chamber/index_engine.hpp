#pragma once

// Algebraic and geometric index of a link in a solid torus.
//
// The geometric index is certified exactly only when every disc meets the
// link in the same number n of points and every chamber's certified lower
// bound (2 per clasp, 1 per spanning arc) already reaches n.  In every other
// case the engine abstains and reports a parity-refined interval.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chamber/link_model.hpp"

namespace chamber {

struct ChamberIndexBound {
  unsigned lower = 0;
  unsigned upper = 0;

  bool exact() const { return lower == upper; }
  bool operator==(const ChamberIndexBound&) const = default;
};

/// lower = 2 * clasps + spans, upper = min(bottom slots, top slots).
ChamberIndexBound chamber_index_bounds(const ChamberContent& content);

enum class CertificateRule : std::uint8_t { clasp_corollary, chamber_corollary };

std::string_view to_string(CertificateRule rule);
std::optional<CertificateRule> parse_certificate_rule(std::string_view text);

struct ChamberCertificate {
  std::size_t chamber = 0;
  CertificateRule rule = CertificateRule::clasp_corollary;
  unsigned clasps = 0;  // k
  unsigned spans = 0;   // l
  unsigned n = 0;

  bool operator==(const ChamberCertificate&) const = default;
};

/// Human-readable certificate line, e.g. "chamber 0: Clasp Corollary, k=1, l=0, n=2".
std::string describe(const ChamberCertificate& certificate);

enum class RefusalKind : std::uint8_t { non_uniform_disc_counts, uncertified_chamber, zero_index };

std::string_view to_string(RefusalKind kind);
std::optional<RefusalKind> parse_refusal_kind(std::string_view text);

struct Refusal {
  RefusalKind kind = RefusalKind::non_uniform_disc_counts;
  /// Set for uncertified_chamber.
  std::optional<std::size_t> chamber;

  bool operator==(const Refusal&) const = default;
};

std::string describe(const Refusal& refusal);

struct ExactIndex {
  unsigned value = 0;
  bool operator==(const ExactIndex&) const = default;
};

struct IndexBounds {
  unsigned lower = 0;
  unsigned upper = 0;
  bool operator==(const IndexBounds&) const = default;
};

using GeometricIndex = std::variant<ExactIndex, IndexBounds>;

struct ComponentSummary {
  std::size_t id = 0;
  long winding = 0;
  bool operator==(const ComponentSummary&) const = default;
};

struct IndexReport {
  std::vector<std::size_t> disc_counts;
  std::vector<ComponentSummary> components;
  /// |winding| per component, in component order.  Reported, not used as a bound.
  std::vector<unsigned> algebraic_per_component;
  long algebraic_total_signed = 0;
  GeometricIndex geometric = IndexBounds{};
  /// algebraic_total_signed mod 2; every admissible index has this parity.
  unsigned parity = 0;
  std::vector<ChamberCertificate> certificates;
  std::vector<Refusal> refusals;

  bool is_exact() const { return std::holds_alternative<ExactIndex>(geometric); }
  /// Exact value, or the lower end of the interval.
  unsigned lower() const;
  unsigned upper() const;

  bool operator==(const IndexReport&) const = default;
};

/// |winding| of one component.  Throws UnknownComponent / InvalidLink.
unsigned algebraic_index(const ChamberLink& link, std::size_t component);

/// Throws InvalidLink.
IndexReport geometric_index(const ChamberLink& link);

/// Self-audit: the geometric value (or lower bound) is at least |s|.
bool check_geq_algebraic(const IndexReport& report);

/// When every component has winding 0 the index must be even.  Vacuously
/// true otherwise, and for reports that only carry bounds.
bool even_index_audit(const ChamberLink& link, const IndexReport& report);

struct FactorConclusion {
  /// Index of the inner torus in the separating torus.
  unsigned inner = 0;
  /// Index of the separating torus in the outer torus.
  unsigned outer = 0;
  /// A factor of 1 forces the separating boundary to be parallel to the
  /// corresponding boundary.
  bool parallel_to_inner = false;
  bool parallel_to_outer = false;

  bool operator==(const FactorConclusion&) const = default;
};

struct SeparatingTorusConclusions {
  std::vector<FactorConclusion> factors;
  /// Total 0 admits every factorization; `factors` is empty and this is set.
  bool zero_total = false;
};

/// Ordered factorizations inner * outer == total of an index through a
/// separating unknotted torus.
SeparatingTorusConclusions separating_torus_conclusions(unsigned total_index);

}  // namespace chamber
