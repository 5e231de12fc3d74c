#pragma once

// Independent reference for component structure and signed sums.  It walks a
// flat graph of global endpoint nodes (one per chamber side slot) joined by
// piece edges and disc edges, without using trace_components.

#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <variant>
#include <vector>

#include "chamber/link_model.hpp"

namespace chamber::testing {

struct OracleComponent {
  std::set<std::pair<std::size_t, Slot>> crossings;  // (disc, slot)
  std::vector<long> sum_at_disc;                      // per disc, some orientation
};

inline std::vector<OracleComponent> oracle_components(const ChamberLink& link) {
  using Node = std::tuple<std::size_t, int, Slot>;  // chamber, side (0 bottom, 1 top), slot
  const std::size_t m = link.chamber_count();
  std::map<Node, Node> piece_edge;
  for (std::size_t c = 0; c < m; ++c) {
    for (const auto& p : link.chamber(c).pieces()) {
      auto join = [&](Node a, Node b) {
        piece_edge[a] = b;
        piece_edge[b] = a;
      };
      if (auto* s = std::get_if<Span>(&p)) join({c, 0, s->bottom}, {c, 1, s->top});
      if (auto* t = std::get_if<Turn>(&p)) {
        const int side = t->side == Side::top ? 1 : 0;
        join({c, side, t->pair.first}, {c, side, t->pair.second});
      }
      if (auto* k = std::get_if<Clasp>(&p)) {
        join({c, 1, k->top.first}, {c, 1, k->top.second});
        join({c, 0, k->bottom.first}, {c, 0, k->bottom.second});
      }
    }
  }
  auto disc_edge = [&](const Node& n) -> Node {
    auto [c, side, slot] = n;
    return side == 1 ? Node{(c + 1) % m, 0, slot} : Node{(c + m - 1) % m, 1, slot};
  };

  std::set<Node> seen;
  std::vector<OracleComponent> out;
  for (const auto& [start, unused] : piece_edge) {
    if (seen.count(start)) continue;
    OracleComponent comp;
    comp.sum_at_disc.assign(m, 0);
    Node at = start;
    do {
      seen.insert(at);
      const Node far = piece_edge.at(at);
      seen.insert(far);
      // Leave the chamber through `far` and cross its disc.
      auto [c, side, slot] = far;
      const std::size_t disc = side == 1 ? c : (c + m - 1) % m;
      comp.sum_at_disc[disc] += side == 1 ? +1 : -1;
      comp.crossings.insert({disc, slot});
      at = disc_edge(far);
    } while (at != start);
    out.push_back(std::move(comp));
  }
  for (const auto& c : link.chambers()) {
    for (std::size_t k = 0; k < c.circle_count(); ++k) out.push_back({{}, std::vector<long>(m, 0)});
  }
  return out;
}

}  // namespace chamber::testing
