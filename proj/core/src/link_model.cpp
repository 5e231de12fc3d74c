#include "chamber/link_model.hpp"

#include <algorithm>
#include <sstream>

#include "chamber/errors.hpp"
#include "overloaded.hpp"
#include "trace.hpp"

namespace chamber {

namespace {

using detail::overloaded;

struct Endpoint {
  Side side = Side::bottom;
  Slot slot = 0;
};

// For one chamber: the other end of the arc attached to each endpoint.
struct PartnerTable {
  std::vector<Endpoint> bottom;
  std::vector<Endpoint> top;

  const Endpoint& at(Side side, Slot slot) const { return side == Side::top ? top[slot] : bottom[slot]; }
};

PartnerTable build_partners(const ChamberContent& content) {
  const EndpointProfile profile = endpoint_profile(content);
  PartnerTable table;
  table.bottom.resize(profile.bottom);
  table.top.resize(profile.top);
  auto link_ends = [&](Endpoint a, Endpoint b) {
    (a.side == Side::top ? table.top : table.bottom)[a.slot] = b;
    (b.side == Side::top ? table.top : table.bottom)[b.slot] = a;
  };
  for (const auto& piece : content.pieces()) {
    std::visit(overloaded{
                   [&](const Span& s) { link_ends({Side::bottom, s.bottom}, {Side::top, s.top}); },
                   [&](const Turn& t) { link_ends({t.side, t.pair.first}, {t.side, t.pair.second}); },
                   [&](const Clasp& c) {
                     link_ends({Side::top, c.top.first}, {Side::top, c.top.second});
                     link_ends({Side::bottom, c.bottom.first}, {Side::bottom, c.bottom.second});
                   },
                   [](const Circle&) {},
               },
               piece);
  }
  return table;
}

std::string describe_mismatch(std::size_t below, std::size_t above, std::size_t top_count,
                              std::size_t bottom_count) {
  std::ostringstream msg;
  msg << "chamber " << above << " expects bottom count " << top_count << " (top of chamber " << below
      << ") but has " << bottom_count;
  return msg.str();
}

}  // namespace

ChamberLink::ChamberLink(std::vector<ChamberContent> chambers, std::string name)
    : chambers_(std::move(chambers)), name_(std::move(name)) {
  if (chambers_.empty()) throw InvalidLink("a link needs at least one chamber");
}

ValidationReport validate(const ChamberLink& link) {
  ValidationReport report;
  const std::size_t m = link.chamber_count();
  std::vector<EndpointProfile> profiles;
  profiles.reserve(m);

  for (std::size_t i = 0; i < m; ++i) {
    for (auto& v : check_content(link.chamber(i))) {
      report.violations.push_back({std::move(v.code), i, "chamber " + std::to_string(i) + ": " + v.message, v.piece});
    }
    profiles.push_back(endpoint_profile(link.chamber(i)));
    report.disc_counts.push_back(profiles.back().top);
  }

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t next = (i + 1) % m;
    if (profiles[i].top != profiles[next].bottom) {
      report.violations.push_back({"E_PROFILE_MISMATCH", next,
                                   describe_mismatch(i, next, profiles[i].top, profiles[next].bottom)});
    }
  }

  report.uniform = std::adjacent_find(report.disc_counts.begin(), report.disc_counts.end(),
                                      std::not_equal_to<>()) == report.disc_counts.end();
  return report;
}

void require_valid(const ChamberLink& link) {
  const ValidationReport report = validate(link);
  if (report.accepted()) return;
  const auto& v = report.violations.front();
  std::ostringstream msg;
  msg << "invalid link '" << link.name() << "': " << v.message << " [" << v.code << "]";
  if (report.violations.size() > 1) msg << " (+" << report.violations.size() - 1 << " more)";
  throw InvalidLink(msg.str());
}

std::vector<std::size_t> disc_counts(const ChamberLink& link) {
  require_valid(link);
  std::vector<std::size_t> counts;
  counts.reserve(link.chamber_count());
  for (const auto& c : link.chambers()) counts.push_back(endpoint_profile(c).top);
  return counts;
}

std::vector<ComponentTrace> trace_components(const ChamberLink& link) {
  require_valid(link);
  return detail::trace_valid(link);
}

std::vector<ComponentTrace> detail::trace_valid(const ChamberLink& link) {
  const std::size_t m = link.chamber_count();

  std::vector<PartnerTable> partners;
  partners.reserve(m);
  for (const auto& c : link.chambers()) partners.push_back(build_partners(c));

  // visited[d][s]: crossing (D_d, slot s) already belongs to a component.
  std::vector<std::vector<bool>> visited(m);
  for (std::size_t d = 0; d < m; ++d) visited[d].assign(partners[d].top.size(), false);

  std::vector<ComponentTrace> traces;

  auto walk = [&](std::size_t start_disc, Slot start_slot) {
    ComponentTrace trace;
    trace.id = traces.size();
    std::size_t disc = start_disc;
    Slot slot = start_slot;
    int sign = +1;
    while (true) {
      trace.crossings.push_back({disc, slot, sign});
      visited[disc][slot] = true;
      // Enter the chamber on the far side of the crossing.
      const std::size_t chamber = sign > 0 ? (disc + 1) % m : disc;
      const Side entry = sign > 0 ? Side::bottom : Side::top;
      const Endpoint exit = partners[chamber].at(entry, slot);
      if (exit.side == Side::top) {
        disc = chamber;
        sign = +1;
      } else {
        disc = (chamber + m - 1) % m;
        sign = -1;
      }
      slot = exit.slot;
      if (disc == start_disc && slot == start_slot) break;
    }

    const bool meets_zero = std::any_of(trace.crossings.begin(), trace.crossings.end(),
                                        [](const DiscCrossing& c) { return c.disc == 0; });
    const std::size_t probe = meets_zero ? 0 : trace.crossings.front().disc;
    for (const auto& c : trace.crossings) {
      if (c.disc == probe) trace.winding += c.sign;
    }

    if (trace.winding < 0) {
      // Reverse the orientation, keeping the discovering crossing first.
      std::reverse(trace.crossings.begin() + 1, trace.crossings.end());
      for (auto& c : trace.crossings) c.sign = -c.sign;
      trace.winding = -trace.winding;
    }
    traces.push_back(std::move(trace));
  };

  for (std::size_t c = 0; c < m; ++c) {
    for (Side side : {Side::bottom, Side::top}) {
      const std::size_t disc = side == Side::bottom ? link.bottom_disc(c) : link.top_disc(c);
      const std::size_t count = side == Side::bottom ? partners[c].bottom.size() : partners[c].top.size();
      for (Slot s = 0; s < count; ++s) {
        if (!visited[disc][s]) walk(disc, s);
      }
    }
  }

  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t k = 0; k < link.chamber(c).circle_count(); ++k) {
      traces.push_back({traces.size(), {}, 0});
    }
  }
  return traces;
}

long signed_sum_at(const std::vector<ComponentTrace>& traces, std::size_t disc) {
  long sum = 0;
  for (const auto& t : traces) {
    for (const auto& c : t.crossings) {
      if (c.disc == disc) sum += c.sign;
    }
  }
  return sum;
}

long total_signed_sum(const ChamberLink& link) { return signed_sum_at(trace_components(link), 0); }

ChamberLink split_antoine_at(const ChamberLink& link, std::size_t chamber) {
  require_valid(link);
  if (chamber >= link.chamber_count()) {
    std::ostringstream msg;
    msg << "chamber " << chamber << " out of range (link has " << link.chamber_count() << ")";
    throw NotSplittable(msg.str());
  }
  AntoineSplit split = split_antoine(link.chamber(chamber));
  std::vector<ChamberContent> chambers;
  chambers.reserve(link.chamber_count() + 1);
  for (std::size_t i = 0; i < link.chamber_count(); ++i) {
    if (i == chamber) {
      chambers.push_back(std::move(split.lower));
      chambers.push_back(std::move(split.upper));
    } else {
      chambers.push_back(link.chamber(i));
    }
  }
  return ChamberLink(std::move(chambers), link.name());
}

ChamberLink rotate(const ChamberLink& link, std::size_t shift) {
  const std::size_t m = link.chamber_count();
  std::vector<ChamberContent> chambers;
  chambers.reserve(m);
  for (std::size_t i = 0; i < m; ++i) chambers.push_back(link.chamber((i + shift) % m));
  return ChamberLink(std::move(chambers), link.name());
}

}  // namespace chamber
