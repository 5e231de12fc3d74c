#pragma once

// `.cld` chamber link descriptions.
//
//   link      := "link" IDENT "{" chamber+ "}"
//   chamber   := "chamber" "{" piece* "}"
//   piece     := span | turn | clasp | circle
//   span      := "span" INT "->" INT ";"
//   turn      := "turn" side "(" INT "," INT ")" ";"      side := "bottom" | "top"
//   clasp     := kind "top" "(" INT "," INT ")" "bottom" "(" INT "," INT ")" ";"
//   kind      := "whitehead" | "squareknot" | "antoine"
//   circle    := "circle" ";"
//
// "#" starts a comment running to the end of the line.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chamber/link_model.hpp"

namespace chamber {

struct SourceDocument {
  std::string text;
  std::string origin = "<memory>";
};

enum class Severity : std::uint8_t { error, warning };

struct ParseDiagnostic {
  Severity severity = Severity::error;
  std::size_t line = 1;  // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;
  std::string code;

  bool operator==(const ParseDiagnostic&) const = default;
};

/// "origin:line:col: error: message [CODE]"
std::string format_diagnostic(const ParseDiagnostic& d, std::string_view origin);

struct ParseResult {
  /// Present iff there are no error diagnostics.
  std::optional<ChamberLink> link;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return link.has_value(); }
};

ParseResult parse(const SourceDocument& doc);

/// Canonical text: lowercase keywords, one piece per line in canonical piece
/// order, two-space indentation, LF endings.  Throws InvalidLink.
std::string emit(const ChamberLink& link);

/// Embedded text of corpus/<name>.cld.  Throws UnknownName.
std::string_view corpus_source(std::string_view name);

/// Parses the shipped corpus file.  Throws UnknownName, or Error when the
/// shipped file carries diagnostics.
ChamberLink load_corpus(std::string_view name);

}  // namespace chamber
