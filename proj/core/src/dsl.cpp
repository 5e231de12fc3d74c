#include "chamber/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chamber/errors.hpp"
#include "corpus_data.hpp"
#include "overloaded.hpp"

namespace chamber {

namespace {

using detail::overloaded;

// Slots beyond this are certainly not dense for any sane input; rejecting
// them early keeps the validator's tables small.
constexpr unsigned long long max_slot = 1u << 20;

enum class Tok { ident, integer, lbrace, rbrace, lparen, rparen, comma, semi, arrow, end, invalid };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::ident:
      return "identifier";
    case Tok::integer:
      return "integer";
    case Tok::lbrace:
      return "'{'";
    case Tok::rbrace:
      return "'}'";
    case Tok::lparen:
      return "'('";
    case Tok::rparen:
      return "')'";
    case Tok::comma:
      return "','";
    case Tok::semi:
      return "';'";
    case Tok::arrow:
      return "'->'";
    case Tok::end:
      return "end of input";
    case Tok::invalid:
      return "invalid character";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{Tok::invalid, std::string(1, c), line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j]) && !(text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>')) {
        ++j;
      }
      tok.kind = Tok::ident;
      tok.text = std::string(text.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Tok::integer;
      tok.text = std::string(text.substr(i, j - i));
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = Tok::arrow;
      tok.text = "->";
    } else {
      switch (c) {
        case '{':
          tok.kind = Tok::lbrace;
          break;
        case '}':
          tok.kind = Tok::rbrace;
          break;
        case '(':
          tok.kind = Tok::lparen;
          break;
        case ')':
          tok.kind = Tok::rparen;
          break;
        case ',':
          tok.kind = Tok::comma;
          break;
        case ';':
          tok.kind = Tok::semi;
          break;
        default:
          break;
      }
    }
    advance(tok.text.size());
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ParsedChamber {
  Position where;
  std::vector<Piece> pieces;
  std::vector<Position> piece_positions;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<ParseDiagnostic> diagnostics;

  // Returns false when a syntax error stopped the parse.
  bool parse_link(std::string& name, Position& where, std::vector<ParsedChamber>& chambers) {
    try {
      where = {peek().line, peek().column};
      expect_keyword("link");
      name = expect(Tok::ident, "link name").text;
      expect(Tok::lbrace, "'{' after link name");
      while (peek().kind != Tok::rbrace) {
        if (peek().kind == Tok::ident && peek().text == "chamber") {
          chambers.push_back(parse_chamber());
        } else {
          fail(peek(), "E_SYNTAX", "expected 'chamber' or '}', found " + show(peek()));
        }
      }
      next();
      if (chambers.empty()) {
        diagnostics.push_back({Severity::error, where.line, where.column, "link has no chambers", "E_NO_CHAMBERS"});
      }
      if (peek().kind != Tok::end) {
        fail(peek(), "E_TRAILING", "unexpected " + show(peek()) + " after the link");
      }
    } catch (const SyntaxError& e) {
      diagnostics.push_back(e.diagnostic);
      return false;
    }
    return true;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }

  static std::string show(const Token& t) {
    if (t.kind == Tok::ident || t.kind == Tok::integer) return std::string(describe(t.kind)) + " '" + t.text + "'";
    if (t.kind == Tok::invalid) return "invalid character '" + t.text + "'";
    return std::string(describe(t.kind));
  }

  [[noreturn]] void fail(const Token& at, std::string code, std::string message) {
    if (at.kind == Tok::end && code == "E_SYNTAX") code = "E_UNEXPECTED_EOF";
    if (at.kind == Tok::invalid) code = "E_LEX";
    throw SyntaxError{{Severity::error, at.line, at.column, std::move(message), std::move(code)}};
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail(peek(), "E_SYNTAX", "expected " + std::string(what) + ", found " + show(peek()));
    return next();
  }

  void expect_keyword(std::string_view kw) {
    if (peek().kind != Tok::ident || peek().text != kw) {
      fail(peek(), "E_SYNTAX", "expected '" + std::string(kw) + "', found " + show(peek()));
    }
    next();
  }

  Slot expect_slot() {
    const Token& t = expect(Tok::integer, "slot index");
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || value >= max_slot) {
      fail(t, "E_BAD_INT", "slot index " + t.text + " is out of range");
    }
    return static_cast<Slot>(value);
  }

  SlotPair expect_pair() {
    expect(Tok::lparen, "'('");
    const Slot a = expect_slot();
    expect(Tok::comma, "','");
    const Slot b = expect_slot();
    expect(Tok::rparen, "')'");
    return SlotPair::of(a, b);
  }

  ParsedChamber parse_chamber() {
    ParsedChamber chamber;
    chamber.where = {peek().line, peek().column};
    next();
    expect(Tok::lbrace, "'{' after 'chamber'");
    while (peek().kind != Tok::rbrace) {
      const Token& head = peek();
      if (head.kind != Tok::ident) fail(head, "E_SYNTAX", "expected a piece or '}', found " + show(head));
      chamber.piece_positions.push_back({head.line, head.column});
      chamber.pieces.push_back(parse_piece());
    }
    next();
    return chamber;
  }

  Piece parse_piece() {
    const Token head = next();
    const std::string& kw = head.text;
    if (kw == "span") {
      const Slot bottom = expect_slot();
      expect(Tok::arrow, "'->'");
      const Slot top = expect_slot();
      expect(Tok::semi, "';'");
      return Span{bottom, top};
    }
    if (kw == "turn") {
      const Token& side_tok = expect(Tok::ident, "'bottom' or 'top'");
      Side side;
      if (side_tok.text == "bottom") {
        side = Side::bottom;
      } else if (side_tok.text == "top") {
        side = Side::top;
      } else {
        fail(side_tok, "E_SYNTAX", "expected 'bottom' or 'top', found " + show(side_tok));
      }
      const SlotPair pair = expect_pair();
      expect(Tok::semi, "';'");
      return Turn{side, pair};
    }
    if (kw == "whitehead" || kw == "squareknot" || kw == "antoine") {
      const ClaspKind kind = kw == "whitehead"    ? ClaspKind::whitehead
                             : kw == "squareknot" ? ClaspKind::square_knot
                                                  : ClaspKind::antoine;
      expect_keyword("top");
      const SlotPair top = expect_pair();
      expect_keyword("bottom");
      const SlotPair bottom = expect_pair();
      expect(Tok::semi, "';'");
      return Clasp{kind, top, bottom};
    }
    if (kw == "circle") {
      expect(Tok::semi, "';'");
      return Circle{};
    }
    fail(head, "E_UNKNOWN_PIECE", "unknown piece '" + kw + "'");
  }
};

// Source positions of pieces in canonical order.
std::vector<Position> canonical_positions(const ParsedChamber& chamber) {
  std::vector<std::size_t> order(chamber.pieces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Piece> keyed;
  keyed.reserve(chamber.pieces.size());
  for (const auto& p : chamber.pieces) keyed.push_back(ChamberContent({p}).pieces().front());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keyed[a] < keyed[b]; });
  std::vector<Position> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(chamber.piece_positions[i]);
  return out;
}

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& d, std::string_view origin) {
  std::ostringstream out;
  out << origin << ':' << d.line << ':' << d.column << ": " << (d.severity == Severity::error ? "error" : "warning")
      << ": " << d.message << " [" << d.code << ']';
  return out.str();
}

ParseResult parse(const SourceDocument& doc) {
  ParseResult result;
  Parser parser(lex(doc.text));
  std::string name;
  Position link_pos;
  std::vector<ParsedChamber> parsed;
  const bool syntax_ok = parser.parse_link(name, link_pos, parsed);
  result.diagnostics = std::move(parser.diagnostics);
  if (!syntax_ok || parsed.empty()) return result;

  std::vector<ChamberContent> chambers;
  std::vector<std::vector<Position>> positions;
  chambers.reserve(parsed.size());
  for (const auto& c : parsed) {
    chambers.emplace_back(c.pieces);
    positions.push_back(canonical_positions(c));
  }
  ChamberLink link(std::move(chambers), name);

  const ValidationReport report = validate(link);
  for (const auto& v : report.violations) {
    Position at = parsed[v.chamber].where;
    if (v.piece < positions[v.chamber].size()) at = positions[v.chamber][v.piece];
    result.diagnostics.push_back(
        {Severity::error, at.line, at.column, v.message, v.code});
  }
  if (report.accepted() && !report.uniform) {
    std::ostringstream msg;
    msg << "disc counts are not uniform (";
    for (std::size_t i = 0; i < report.disc_counts.size(); ++i) msg << (i ? " " : "") << report.disc_counts[i];
    msg << "); the geometric index cannot be certified";
    result.diagnostics.push_back({Severity::warning, link_pos.line, link_pos.column, msg.str(), "W_NONUNIFORM_DISCS"});
  }
  if (report.accepted()) result.link = std::move(link);
  return result;
}

std::string emit(const ChamberLink& link) {
  require_valid(link);
  std::ostringstream out;
  out << "link " << link.name() << " {\n";
  for (const auto& chamber : link.chambers()) {
    out << "  chamber {\n";
    for (const auto& piece : chamber.pieces()) {
      out << "    ";
      std::visit(overloaded{
                     [&](const Clasp& c) {
                       out << to_string(c.kind) << " top(" << c.top.first << ',' << c.top.second << ") bottom("
                           << c.bottom.first << ',' << c.bottom.second << ");";
                     },
                     [&](const Span& s) { out << "span " << s.bottom << " -> " << s.top << ';'; },
                     [&](const Turn& t) {
                       out << "turn " << to_string(t.side) << '(' << t.pair.first << ',' << t.pair.second << ");";
                     },
                     [&](const Circle&) { out << "circle;"; },
                 },
                 piece);
      out << '\n';
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string_view corpus_source(std::string_view name) {
  for (const auto& entry : detail::corpus_files()) {
    if (entry.name == name) return entry.text;
  }
  throw UnknownName("unknown corpus link '" + std::string(name) + "'");
}

ChamberLink load_corpus(std::string_view name) {
  const std::string_view text = corpus_source(name);
  ParseResult result = parse({std::string(text), "corpus/" + std::string(name) + ".cld"});
  if (!result.ok() || !result.diagnostics.empty()) {
    std::string message = "shipped corpus file '" + std::string(name) + "' has diagnostics";
    if (!result.diagnostics.empty()) message += ": " + result.diagnostics.front().message;
    throw Error(message);
  }
  return std::move(*result.link);
}

}  // namespace chamber
