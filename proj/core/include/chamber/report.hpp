#pragma once

// Versioned JSON externalization of an IndexReport.  Keys are written in a
// fixed order, so equal documents serialize to identical bytes.

#include <string>
#include <string_view>
#include <vector>

#include "chamber/composer.hpp"
#include "chamber/index_engine.hpp"

namespace chamber {

inline constexpr std::string_view report_schema_version = "1";

struct ReportDocument {
  std::string schema_version{report_schema_version};
  std::string link_name;
  std::vector<std::size_t> disc_counts;
  std::vector<ComponentSummary> components;
  long algebraic_total = 0;
  GeometricIndex geometric = IndexBounds{};
  unsigned parity = 0;
  std::vector<ChamberCertificate> certificates;
  std::vector<Refusal> refusals;

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_document(std::string link_name, const IndexReport& report);

/// Compact when indent < 0, pretty-printed otherwise.  Always ends with '\n'.
std::string to_json(const ReportDocument& doc, int indent = 2);

/// Throws Error on malformed or schema-violating input.
ReportDocument parse_report_json(std::string_view text);

/// Evaluated nesting facts as JSON: {"chain": [...], "geometric": ..., "algebraic": ...}.
std::string facts_to_json(const std::vector<std::string>& chain, const IndexFacts& facts, int indent = 2);

std::string conclusions_to_json(unsigned total, const SeparatingTorusConclusions& conclusions, int indent = 2);

}  // namespace chamber
