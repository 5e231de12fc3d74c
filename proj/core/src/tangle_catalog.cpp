#include "chamber/tangle_catalog.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "chamber/errors.hpp"
#include "overloaded.hpp"

namespace chamber {

namespace {

using detail::overloaded;

void normalize(Piece& piece) {
  std::visit(overloaded{
                 [](Clasp& c) {
                   c.top = SlotPair::of(c.top.first, c.top.second);
                   c.bottom = SlotPair::of(c.bottom.first, c.bottom.second);
                 },
                 [](Turn& t) { t.pair = SlotPair::of(t.pair.first, t.pair.second); },
                 [](auto&) {},
             },
             piece);
}

template <class T>
std::size_t count_of(const std::vector<Piece>& pieces) {
  return static_cast<std::size_t>(std::count_if(
      pieces.begin(), pieces.end(), [](const Piece& p) { return std::holds_alternative<T>(p); }));
}

// Slots a piece occupies on one side, in piece-local order.
struct SideSlots {
  std::array<Slot, 2> slot{};
  std::size_t size = 0;

  const Slot* begin() const { return slot.data(); }
  const Slot* end() const { return slot.data() + size; }
};

SideSlots slots_on(const Piece& piece, Side side) {
  return std::visit(overloaded{
                        [&](const Clasp& c) {
                          const SlotPair& p = side == Side::top ? c.top : c.bottom;
                          return SideSlots{{p.first, p.second}, 2};
                        },
                        [&](const Span& s) { return SideSlots{{side == Side::top ? s.top : s.bottom, 0}, 1}; },
                        [&](const Turn& t) {
                          if (t.side != side) return SideSlots{};
                          return SideSlots{{t.pair.first, t.pair.second}, 2};
                        },
                        [](const Circle&) { return SideSlots{}; },
                    },
                    piece);
}

// Set of slots seen so far; flat while slots stay near the endpoint count.
class SlotSet {
 public:
  explicit SlotSet(std::size_t hint) : flat_(hint, false) {}

  bool insert(Slot s) {
    if (s < flat_.size()) {
      if (flat_[s]) return false;
      flat_[s] = true;
    } else if (!overflow_.insert(s).second) {
      return false;
    }
    ++size_;
    largest_ = std::max(largest_, s);
    return true;
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Slot largest() const { return largest_; }

 private:
  std::vector<bool> flat_;
  std::set<Slot> overflow_;
  std::size_t size_ = 0;
  Slot largest_ = 0;
};

}  // namespace

std::string_view to_string(ClaspKind kind) {
  switch (kind) {
    case ClaspKind::whitehead:
      return "whitehead";
    case ClaspKind::square_knot:
      return "squareknot";
    case ClaspKind::antoine:
      return "antoine";
  }
  return "?";
}

std::string_view to_string(Side side) { return side == Side::top ? "top" : "bottom"; }

char clasp_glyph(ClaspKind kind) {
  switch (kind) {
    case ClaspKind::whitehead:
      return 'W';
    case ClaspKind::square_knot:
      return 'S';
    case ClaspKind::antoine:
      return 'A';
  }
  return '?';
}

ChamberContent::ChamberContent(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (auto& p : pieces_) normalize(p);
  std::sort(pieces_.begin(), pieces_.end());
}

std::size_t ChamberContent::clasp_count() const { return count_of<Clasp>(pieces_); }
std::size_t ChamberContent::span_count() const { return count_of<Span>(pieces_); }
std::size_t ChamberContent::turn_count() const { return count_of<Turn>(pieces_); }
std::size_t ChamberContent::circle_count() const { return count_of<Circle>(pieces_); }

std::vector<ContentViolation> check_content(const ChamberContent& content) {
  std::vector<ContentViolation> out;
  const auto& pieces = content.pieces();

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto same_slot = [&](const SlotPair& p, Side side) {
      if (p.first == p.second) {
        std::ostringstream msg;
        msg << "pair on " << to_string(side) << " uses slot " << p.first << " twice";
        out.push_back({"E_PAIR_SAME_SLOT", msg.str(), i});
      }
    };
    std::visit(overloaded{
                   [&](const Clasp& c) {
                     same_slot(c.top, Side::top);
                     same_slot(c.bottom, Side::bottom);
                   },
                   [&](const Turn& t) { same_slot(t.pair, t.side); },
                   [](const auto&) {},
               },
               pieces[i]);
  }

  for (Side side : {Side::bottom, Side::top}) {
    SlotSet used(2 * pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (Slot s : slots_on(pieces[i], side)) {
        if (!used.insert(s)) {
          // A pair repeating its own slot was already reported above.
          bool own_pair = false;
          if (auto* c = std::get_if<Clasp>(&pieces[i])) {
            const SlotPair& p = side == Side::top ? c->top : c->bottom;
            own_pair = p.first == p.second;
          } else if (auto* t = std::get_if<Turn>(&pieces[i])) {
            own_pair = t->pair.first == t->pair.second;
          }
          if (own_pair) continue;
          std::ostringstream msg;
          msg << to_string(side) << " slot " << s << " is used by more than one endpoint";
          out.push_back({"E_DUPLICATE_SLOT", msg.str(), i});
        }
      }
    }
    if (!used.empty() && used.largest() + std::size_t{1} != used.size()) {
      std::ostringstream msg;
      msg << to_string(side) << " slots are not dense: " << used.size()
          << " distinct slots but largest is " << used.largest();
      out.push_back({"E_SPARSE_SLOTS", msg.str(), static_cast<std::size_t>(-1)});
    }
  }
  return out;
}

EndpointProfile endpoint_profile(const ChamberContent& content) {
  SlotSet bottom(2 * content.pieces().size());
  SlotSet top(2 * content.pieces().size());
  for (const auto& p : content.pieces()) {
    for (Slot s : slots_on(p, Side::bottom)) bottom.insert(s);
    for (Slot s : slots_on(p, Side::top)) top.insert(s);
  }
  return {bottom.size(), top.size()};
}

unsigned index_contribution(const Piece& piece) {
  return std::visit(overloaded{
                        [](const Clasp&) { return 2u; },
                        [](const Span&) { return 1u; },
                        [](const Turn&) { return 0u; },
                        [](const Circle&) { return 0u; },
                    },
                    piece);
}

unsigned certified_contribution(const ChamberContent& content) {
  unsigned total = 0;
  for (const auto& p : content.pieces()) total += index_contribution(p);
  return total;
}

AntoineSplit split_antoine(const ChamberContent& content) {
  const Clasp* antoine = nullptr;
  std::vector<Span> spans;
  for (const auto& p : content.pieces()) {
    if (auto* c = std::get_if<Clasp>(&p)) {
      if (antoine != nullptr) throw NotSplittable("chamber holds more than one clasp");
      antoine = c;
    } else if (auto* s = std::get_if<Span>(&p)) {
      spans.push_back(*s);
    } else {
      throw NotSplittable("chamber holds a turn-back or circle");
    }
  }
  if (antoine == nullptr) throw NotSplittable("chamber holds no clasp");
  if (antoine->kind != ClaspKind::antoine) throw NotSplittable("the clasp is not an Antoine clasp");

  std::vector<Piece> lower{Clasp{ClaspKind::whitehead, SlotPair{0, 1}, antoine->bottom}};
  std::vector<Piece> upper{Clasp{ClaspKind::whitehead, antoine->top, SlotPair{0, 1}}};
  Slot middle = 2;
  for (const Span& s : spans) {
    lower.push_back(Span{s.bottom, middle});
    upper.push_back(Span{middle, s.top});
    ++middle;
  }
  return {ChamberContent(std::move(lower)), ChamberContent(std::move(upper)), middle};
}

}  // namespace chamber
