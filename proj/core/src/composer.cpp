#include "chamber/composer.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <variant>

#include "chamber/errors.hpp"

namespace chamber {

IndexRange operator*(const IndexRange& a, const IndexRange& b) {
  return {a.lower * b.lower, a.upper * b.upper};
}

std::string to_string(const IndexRange& range) {
  if (range.exact()) return std::to_string(range.lower);
  return "[" + std::to_string(range.lower) + ", " + std::to_string(range.upper) + "]";
}

struct IndexExpr::Node {
  struct Leaf {
    IndexFacts facts;
    std::string source;
  };
  struct Nest {
    IndexExpr inner;
    IndexExpr outer;
  };
  std::variant<Leaf, Nest> value;
};

IndexExpr IndexExpr::leaf(IndexFacts facts, std::string source) {
  return IndexExpr(std::make_shared<const Node>(Node{Node::Leaf{facts, std::move(source)}}));
}

IndexExpr IndexExpr::leaf(const IndexReport& report, std::string source) {
  IndexFacts facts;
  facts.geometric = {report.lower(), report.upper()};
  facts.algebraic = static_cast<unsigned>(std::labs(report.algebraic_total_signed));
  facts.components = report.components.size();
  return leaf(facts, std::move(source));
}

IndexExpr IndexExpr::identity() { return leaf(IndexFacts{IndexRange::exactly(1), 1, 1}, "core"); }

bool IndexExpr::is_leaf() const { return std::holds_alternative<Node::Leaf>(node_->value); }

const IndexFacts* IndexExpr::leaf_facts() const {
  const auto* leaf = std::get_if<Node::Leaf>(&node_->value);
  return leaf ? &leaf->facts : nullptr;
}

const IndexExpr* IndexExpr::inner() const {
  const auto* n = std::get_if<Node::Nest>(&node_->value);
  return n ? &n->inner : nullptr;
}

const IndexExpr* IndexExpr::outer() const {
  const auto* n = std::get_if<Node::Nest>(&node_->value);
  return n ? &n->outer : nullptr;
}

std::size_t IndexExpr::components() const {
  if (const auto* facts = leaf_facts()) return facts->components;
  return inner()->components();
}

std::string IndexExpr::describe() const {
  if (const auto* leaf = std::get_if<Node::Leaf>(&node_->value)) return leaf->source;
  return "(" + inner()->describe() + " in " + outer()->describe() + ")";
}

IndexExpr nest(const IndexExpr& inner, const IndexExpr& outer) {
  if (outer.components() != 1) {
    throw MultiComponentCompanion("companion '" + outer.describe() + "' has " + std::to_string(outer.components()) +
                                  " components; nesting needs exactly one");
  }
  return IndexExpr(std::make_shared<const IndexExpr::Node>(IndexExpr::Node{IndexExpr::Node::Nest{inner, outer}}));
}

IndexFacts evaluate(const IndexExpr& expr) {
  if (const auto* facts = expr.leaf_facts()) return *facts;
  const IndexFacts inner = evaluate(*expr.inner());
  const IndexFacts outer = evaluate(*expr.outer());
  if (outer.components != 1) {
    throw MultiComponentCompanion("companion '" + expr.outer()->describe() + "' is not a single component");
  }
  return {inner.geometric * outer.geometric, inner.algebraic * outer.algebraic, inner.components};
}

IndexExpr nest_chain(std::span<const IndexExpr> links) {
  if (links.empty()) throw std::invalid_argument("empty nesting chain");
  IndexExpr acc = links.front();
  for (const auto& next : links.subspan(1)) acc = nest(acc, next);
  return acc;
}

std::string_view to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::spans_only:
      return "SpansOnly";
    case Pattern::whitehead_plus_spans:
      return "WhiteheadPlusSpans";
    case Pattern::square_knot_plus_spans:
      return "SquareKnotPlusSpans";
    case Pattern::antoine_plus_spans:
      return "AntoinePlusSpans";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view text) {
  if (text == "SpansOnly" || text == "spans") return Pattern::spans_only;
  if (text == "WhiteheadPlusSpans" || text == "whitehead") return Pattern::whitehead_plus_spans;
  if (text == "SquareKnotPlusSpans" || text == "squareknot") return Pattern::square_knot_plus_spans;
  if (text == "AntoinePlusSpans" || text == "antoine") return Pattern::antoine_plus_spans;
  return std::nullopt;
}

namespace {

ChamberContent pattern_content(Pattern pattern) {
  std::vector<Piece> pieces;
  Slot first_span = 0;
  if (pattern != Pattern::spans_only) {
    ClaspKind kind = ClaspKind::whitehead;
    if (pattern == Pattern::square_knot_plus_spans) kind = ClaspKind::square_knot;
    if (pattern == Pattern::antoine_plus_spans) kind = ClaspKind::antoine;
    pieces.push_back(Clasp{kind, SlotPair{0, 1}, SlotPair{0, 1}});
    first_span = 2;
  }
  for (Slot s = first_span; s < complicated_strands; ++s) pieces.push_back(Span{s, s});
  return ChamberContent(std::move(pieces));
}

ChamberContent whitehead_clasp(Slot t0, Slot t1, Slot b0, Slot b1,
                               std::vector<Span> spans = {}, ClaspKind kind = ClaspKind::whitehead) {
  std::vector<Piece> pieces{Clasp{kind, SlotPair::of(t0, t1), SlotPair::of(b0, b1)}};
  for (const Span& s : spans) pieces.push_back(s);
  return ChamberContent(std::move(pieces));
}

ChamberContent spans_only(std::vector<Span> spans) {
  return ChamberContent(std::vector<Piece>(spans.begin(), spans.end()));
}

}  // namespace

ChamberLink generate_complicated(const std::array<Pattern, complicated_chambers>& patterns, std::string name) {
  std::vector<ChamberContent> chambers;
  chambers.reserve(complicated_chambers);
  for (Pattern p : patterns) chambers.push_back(pattern_content(p));
  return ChamberLink(std::move(chambers), std::move(name));
}

ChamberLink generate_complicated(std::span<const PatternChoice> choices, std::string name) {
  if (choices.size() != complicated_chambers) {
    throw std::invalid_argument("expected 8 pattern choices, got " + std::to_string(choices.size()));
  }
  std::array<Pattern, complicated_chambers> patterns{};
  std::array<bool, complicated_chambers> seen{};
  for (const auto& c : choices) {
    if (c.slot >= complicated_chambers || seen[c.slot]) {
      throw std::invalid_argument("pattern slot " + std::to_string(c.slot) + " is out of range or repeated");
    }
    seen[c.slot] = true;
    patterns[c.slot] = c.pattern;
  }
  return generate_complicated(patterns, std::move(name));
}

std::array<Pattern, complicated_chambers> default_complicated_patterns() {
  return {Pattern::whitehead_plus_spans, Pattern::spans_only,         Pattern::square_knot_plus_spans,
          Pattern::spans_only,           Pattern::antoine_plus_spans, Pattern::spans_only,
          Pattern::whitehead_plus_spans, Pattern::spans_only};
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"whitehead", "bing",  "antoine", "algebraic2", "mcmillan4",
                                              "knotted3",  "gabai", "complicated", "core"};
  return names;
}

ChamberLink corpus_link(std::string_view name) {
  if (name == "whitehead") {
    // Clasp in one chamber, both strands returning through the other.
    return ChamberLink({whitehead_clasp(0, 1, 0, 1), spans_only({{0, 0}, {1, 1}})}, "whitehead");
  }
  if (name == "bing") {
    // Two rings, clasped with each other in both chambers.
    return ChamberLink({whitehead_clasp(0, 1, 0, 1), whitehead_clasp(0, 1, 0, 1)}, "bing");
  }
  if (name == "antoine") {
    std::vector<ChamberContent> chambers(4, whitehead_clasp(0, 1, 0, 1));
    return ChamberLink(std::move(chambers), "antoine");
  }
  if (name == "algebraic2") {
    // One curve going twice around.
    return ChamberLink({spans_only({{0, 1}, {1, 0}})}, "algebraic2");
  }
  if (name == "mcmillan4") {
    return ChamberLink({whitehead_clasp(0, 1, 0, 1, {{2, 2}, {3, 3}}), spans_only({{0, 2}, {1, 3}, {2, 0}, {3, 1}})},
                       "mcmillan4");
  }
  if (name == "knotted3") {
    return ChamberLink({whitehead_clasp(1, 2, 1, 2, {{0, 0}}),
                        whitehead_clasp(0, 1, 0, 1, {{2, 2}}, ClaspKind::square_knot)},
                       "knotted3");
  }
  if (name == "gabai") {
    // Shifted form: every ring runs through three chambers and clasps the
    // ring that started three chambers earlier.
    std::vector<ChamberContent> chambers(5, whitehead_clasp(0, 1, 2, 3, {{0, 4}, {1, 5}, {4, 2}, {5, 3}}));
    return ChamberLink(std::move(chambers), "gabai");
  }
  if (name == "complicated") return generate_complicated(default_complicated_patterns());
  if (name == "core") return ChamberLink({spans_only({{0, 0}})}, "core");
  throw UnknownName("unknown corpus link '" + std::string(name) + "'");
}

}  // namespace chamber
