#include "chamber/index_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "chamber/errors.hpp"
#include "trace.hpp"

namespace chamber {

ChamberIndexBound chamber_index_bounds(const ChamberContent& content) {
  const EndpointProfile profile = endpoint_profile(content);
  return {certified_contribution(content), static_cast<unsigned>(std::min(profile.bottom, profile.top))};
}

std::string_view to_string(CertificateRule rule) {
  return rule == CertificateRule::clasp_corollary ? "Clasp Corollary" : "Chamber Corollary";
}

std::optional<CertificateRule> parse_certificate_rule(std::string_view text) {
  if (text == "Clasp Corollary") return CertificateRule::clasp_corollary;
  if (text == "Chamber Corollary") return CertificateRule::chamber_corollary;
  return std::nullopt;
}

std::string describe(const ChamberCertificate& c) {
  std::ostringstream out;
  out << "chamber " << c.chamber << ": " << to_string(c.rule) << ", k=" << c.clasps << ", l=" << c.spans
      << ", n=" << c.n;
  return out.str();
}

std::string_view to_string(RefusalKind kind) {
  switch (kind) {
    case RefusalKind::non_uniform_disc_counts:
      return "NonUniformDiscCounts";
    case RefusalKind::uncertified_chamber:
      return "UncertifiedChamber";
    case RefusalKind::zero_index:
      return "ZeroIndexNotCertified";
  }
  return "?";
}

std::optional<RefusalKind> parse_refusal_kind(std::string_view text) {
  for (auto kind : {RefusalKind::non_uniform_disc_counts, RefusalKind::uncertified_chamber, RefusalKind::zero_index}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string describe(const Refusal& r) {
  std::ostringstream out;
  out << to_string(r.kind);
  if (r.chamber) out << " (chamber " << *r.chamber << ")";
  return out.str();
}

unsigned IndexReport::lower() const {
  return std::visit([](const auto& g) {
    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, ExactIndex>) {
      return g.value;
    } else {
      return g.lower;
    }
  }, geometric);
}

unsigned IndexReport::upper() const {
  return std::visit([](const auto& g) {
    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, ExactIndex>) {
      return g.value;
    } else {
      return g.upper;
    }
  }, geometric);
}

unsigned algebraic_index(const ChamberLink& link, std::size_t component) {
  const auto traces = trace_components(link);
  if (component >= traces.size()) {
    std::ostringstream msg;
    msg << "component " << component << " does not exist (link has " << traces.size() << ")";
    throw UnknownComponent(msg.str());
  }
  return static_cast<unsigned>(std::labs(traces[component].winding));
}

IndexReport geometric_index(const ChamberLink& link) {
  const ValidationReport validation = validate(link);
  if (!validation.accepted()) require_valid(link);

  IndexReport report;
  report.disc_counts = validation.disc_counts;

  const auto traces = detail::trace_valid(link);
  for (const auto& t : traces) {
    report.components.push_back({t.id, t.winding});
    report.algebraic_per_component.push_back(static_cast<unsigned>(std::labs(t.winding)));
  }
  report.algebraic_total_signed = signed_sum_at(traces, 0);
  const unsigned abs_total = static_cast<unsigned>(std::labs(report.algebraic_total_signed));
  report.parity = abs_total % 2;

  const unsigned min_count =
      static_cast<unsigned>(*std::min_element(report.disc_counts.begin(), report.disc_counts.end()));

  if (!validation.uniform) {
    report.refusals.push_back({RefusalKind::non_uniform_disc_counts, std::nullopt});
  } else {
    const unsigned n = min_count;
    for (std::size_t i = 0; i < link.chamber_count(); ++i) {
      const ChamberContent& content = link.chamber(i);
      const ChamberIndexBound bound = chamber_index_bounds(content);
      if (!(bound.exact() && bound.lower == n)) {
        report.refusals.push_back({RefusalKind::uncertified_chamber, i});
        continue;
      }
      const bool clasps_and_spans_only = content.turn_count() == 0 && content.circle_count() == 0;
      report.certificates.push_back({i,
                                     clasps_and_spans_only ? CertificateRule::clasp_corollary
                                                           : CertificateRule::chamber_corollary,
                                     static_cast<unsigned>(content.clasp_count()),
                                     static_cast<unsigned>(content.span_count()), n});
    }
    if (report.refusals.empty() && n == 0) {
      report.refusals.push_back({RefusalKind::zero_index, std::nullopt});
    }
    if (report.refusals.empty()) {
      report.geometric = ExactIndex{n};
      return report;
    }
  }

  // Abstain.  Each disc meets the link in n_i points of parity s, and any
  // meridional disc meets it in at least |s| points.
  report.certificates.clear();
  report.geometric = IndexBounds{abs_total, min_count};
  return report;
}

bool check_geq_algebraic(const IndexReport& report) {
  const unsigned abs_total = static_cast<unsigned>(std::labs(report.algebraic_total_signed));
  return report.lower() >= abs_total;
}

bool even_index_audit(const ChamberLink& link, const IndexReport& report) {
  const auto traces = trace_components(link);
  const bool all_inessential =
      std::all_of(traces.begin(), traces.end(), [](const ComponentTrace& t) { return t.winding == 0; });
  if (!all_inessential) return true;
  if (const auto* exact = std::get_if<ExactIndex>(&report.geometric)) return exact->value % 2 == 0;
  return true;
}

SeparatingTorusConclusions separating_torus_conclusions(unsigned total_index) {
  SeparatingTorusConclusions out;
  if (total_index == 0) {
    out.zero_total = true;
    return out;
  }
  for (unsigned a = 1; a <= total_index; ++a) {
    if (total_index % a != 0) continue;
    const unsigned b = total_index / a;
    out.factors.push_back({a, b, a == 1, b == 1});
  }
  return out;
}

}  // namespace chamber
