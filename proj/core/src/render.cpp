#include "chamber/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "chamber/index_engine.hpp"
#include "overloaded.hpp"

namespace chamber {

namespace {

using detail::overloaded;

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string pair_text(const SlotPair& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

std::vector<std::string> piece_rows(const ChamberContent& content) {
  std::vector<std::string> rows;
  for (const auto& piece : content.pieces()) {
    rows.push_back(std::visit(overloaded{
                                  [](const Clasp& c) {
                                    return pair_text(c.bottom) + " ]" + clasp_glyph(c.kind) + "[ " + pair_text(c.top);
                                  },
                                  [](const Span& s) { return std::to_string(s.bottom) + " --- " + std::to_string(s.top); },
                                  [](const Turn& t) {
                                    return t.side == Side::bottom ? pair_text(t.pair) + " )" : "( " + pair_text(t.pair);
                                  },
                                  [](const Circle&) { return std::string("o"); },
                              },
                              piece));
  }
  return rows;
}

std::string centered(const std::string& text, std::size_t width) {
  const std::size_t left = (width - text.size()) / 2;
  return std::string(left, ' ') + text + std::string(width - text.size() - left, ' ');
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string summarize(const ChamberContent& content) {
  std::vector<std::string> parts;
  for (const auto& piece : content.pieces()) {
    if (const auto* c = std::get_if<Clasp>(&piece)) parts.emplace_back(1, clasp_glyph(c->kind));
  }
  if (content.span_count() > 0) parts.push_back(plural(content.span_count(), "span"));
  if (content.turn_count() > 0) parts.push_back(plural(content.turn_count(), "turn"));
  if (content.circle_count() > 0) parts.push_back(plural(content.circle_count(), "circle"));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string render_ascii(const ChamberLink& link) {
  const auto counts = disc_counts(link);
  const std::size_t m = link.chamber_count();

  std::vector<std::vector<std::string>> blocks(m);
  std::size_t height = 0;
  for (std::size_t i = 0; i < m; ++i) {
    blocks[i].push_back("C" + std::to_string(i));
    blocks[i].push_back(summarize(link.chamber(i)));
    for (auto& row : piece_rows(link.chamber(i))) blocks[i].push_back(std::move(row));
    height = std::max(height, blocks[i].size());
  }

  std::vector<std::size_t> widths(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& row : blocks[i]) widths[i] = std::max(widths[i], row.size());
    widths[i] += 2;
  }

  std::ostringstream out;
  out << "discs:";
  for (auto n : counts) out << ' ' << n;
  out << '\n';
  for (std::size_t r = 0; r < height; ++r) {
    out << '|';
    for (std::size_t i = 0; i < m; ++i) {
      const std::string cell = r < blocks[i].size() ? blocks[i][r] : "";
      out << (r < 2 ? centered(cell, widths[i]) : " " + cell + std::string(widths[i] - cell.size() - 1, ' ')) << '|';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_svg(const ChamberLink& link) {
  const auto counts = disc_counts(link);
  const std::size_t m = link.chamber_count();
  constexpr int block = 160;
  constexpr int margin = 30;
  constexpr int top_y = 70;
  constexpr int pitch = 24;

  std::size_t max_slots = 1;
  for (auto n : counts) max_slots = std::max(max_slots, n);
  const int width = 2 * margin + static_cast<int>(m) * block;
  const int height = top_y + static_cast<int>(max_slots) * pitch + 50;
  auto slot_y = [&](Slot s) { return top_y + static_cast<int>(s) * pitch; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <title>" << escape_xml(link.name()) << "</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (std::size_t d = 0; d <= m; ++d) {
    const int x = margin + static_cast<int>(d) * block;
    const std::size_t disc = (d + m - 1) % m;
    out << "  <line x1=\"" << x << "\" y1=\"" << top_y - 20 << "\" x2=\"" << x << "\" y2=\"" << height - 30
        << "\" stroke=\"#888\" stroke-width=\"2\"/>\n"
        << "  <text x=\"" << x << "\" y=\"" << top_y - 28 << "\" font-family=\"monospace\" font-size=\"11\" "
        << "text-anchor=\"middle\">D" << disc << " (" << counts[disc] << ")</text>\n";
  }

  for (std::size_t i = 0; i < m; ++i) {
    const int x0 = margin + static_cast<int>(i) * block;
    const int x1 = x0 + block;
    const int mid = x0 + block / 2;
    out << "  <g id=\"chamber-" << i << "\">\n"
        << "    <text x=\"" << mid << "\" y=\"18\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">C"
        << i << ": " << escape_xml(summarize(link.chamber(i))) << "</text>\n";
    std::size_t circles = 0;
    for (const auto& piece : link.chamber(i).pieces()) {
      std::visit(overloaded{
                     [&](const Span& s) {
                       out << "    <line x1=\"" << x0 << "\" y1=\"" << slot_y(s.bottom) << "\" x2=\"" << x1
                           << "\" y2=\"" << slot_y(s.top) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
                     },
                     [&](const Turn& t) {
                       const int x = t.side == Side::bottom ? x0 : x1;
                       const int reach = t.side == Side::bottom ? 45 : -45;
                       const int ym = (slot_y(t.pair.first) + slot_y(t.pair.second)) / 2;
                       out << "    <path d=\"M " << x << ' ' << slot_y(t.pair.first) << " Q " << x + reach << ' ' << ym
                           << ' ' << x << ' ' << slot_y(t.pair.second)
                           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
                     },
                     [&](const Clasp& c) {
                       const int yb = (slot_y(c.bottom.first) + slot_y(c.bottom.second)) / 2;
                       const int yt = (slot_y(c.top.first) + slot_y(c.top.second)) / 2;
                       out << "    <path d=\"M " << x0 << ' ' << slot_y(c.bottom.first) << " C " << mid + 30 << ' '
                           << slot_y(c.bottom.first) << ' ' << mid + 30 << ' ' << slot_y(c.bottom.second) << ' ' << x0
                           << ' ' << slot_y(c.bottom.second) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
                           << "    <path d=\"M " << x1 << ' ' << slot_y(c.top.first) << " C " << mid - 30 << ' '
                           << slot_y(c.top.first) << ' ' << mid - 30 << ' ' << slot_y(c.top.second) << ' ' << x1 << ' '
                           << slot_y(c.top.second) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
                           << "    <text x=\"" << mid << "\" y=\"" << (yb + yt) / 2 + 4
                           << "\" font-family=\"monospace\" font-size=\"12\" font-weight=\"bold\" "
                           << "text-anchor=\"middle\">" << clasp_glyph(c.kind) << "</text>\n";
                     },
                     [&](const Circle&) {
                       out << "    <circle cx=\"" << x0 + 20 + static_cast<int>(circles++) * 18 << "\" cy=\""
                           << height - 40 << "\" r=\"7\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
                     },
                 },
                 piece);
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chamber
