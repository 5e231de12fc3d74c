#include "chamber/report.hpp"

#include <nlohmann/json.hpp>

#include "chamber/errors.hpp"

namespace chamber {

namespace {

using json = nlohmann::ordered_json;

json geometric_json(const GeometricIndex& g, unsigned parity) {
  json out;
  if (const auto* exact = std::get_if<ExactIndex>(&g)) {
    out["kind"] = "Exact";
    out["value"] = exact->value;
  } else {
    const auto& b = std::get<IndexBounds>(g);
    out["kind"] = "Bounds";
    out["bounds"] = json::array({b.lower, b.upper});
  }
  out["parity"] = parity;
  return out;
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("report JSON is missing '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

ReportDocument make_document(std::string link_name, const IndexReport& report) {
  ReportDocument doc;
  doc.link_name = std::move(link_name);
  doc.disc_counts = report.disc_counts;
  doc.components = report.components;
  doc.algebraic_total = report.algebraic_total_signed;
  doc.geometric = report.geometric;
  doc.parity = report.parity;
  doc.certificates = report.certificates;
  doc.refusals = report.refusals;
  return doc;
}

std::string to_json(const ReportDocument& doc, int indent) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["link_name"] = doc.link_name;
  j["disc_counts"] = doc.disc_counts;
  j["components"] = json::array();
  for (const auto& c : doc.components) j["components"].push_back({{"id", c.id}, {"winding", c.winding}});
  j["algebraic_total"] = doc.algebraic_total;
  j["geometric"] = geometric_json(doc.geometric, doc.parity);
  j["certificates"] = json::array();
  for (const auto& c : doc.certificates) {
    j["certificates"].push_back(
        {{"chamber", c.chamber}, {"rule", to_string(c.rule)}, {"k", c.clasps}, {"l", c.spans}, {"n", c.n}});
  }
  j["refusals"] = json::array();
  for (const auto& r : doc.refusals) {
    json entry{{"kind", to_string(r.kind)}};
    if (r.chamber) entry["chamber"] = *r.chamber;
    j["refusals"].push_back(entry);
  }
  return dump(j, indent);
}

ReportDocument parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("report JSON does not parse: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.schema_version = field<std::string>(j, "schema_version");
    if (doc.schema_version != report_schema_version) {
      throw Error("unsupported report schema version '" + doc.schema_version + "'");
    }
    doc.link_name = field<std::string>(j, "link_name");
    doc.disc_counts = field<std::vector<std::size_t>>(j, "disc_counts");
    for (const auto& c : field<json>(j, "components")) {
      doc.components.push_back({field<std::size_t>(c, "id"), field<long>(c, "winding")});
    }
    doc.algebraic_total = field<long>(j, "algebraic_total");

    const json g = field<json>(j, "geometric");
    const auto kind = field<std::string>(g, "kind");
    if (kind == "Exact") {
      doc.geometric = ExactIndex{field<unsigned>(g, "value")};
    } else if (kind == "Bounds") {
      const auto b = field<std::vector<unsigned>>(g, "bounds");
      if (b.size() != 2) throw Error("geometric bounds must have two entries");
      doc.geometric = IndexBounds{b[0], b[1]};
    } else {
      throw Error("unknown geometric kind '" + kind + "'");
    }
    doc.parity = field<unsigned>(g, "parity");

    for (const auto& c : field<json>(j, "certificates")) {
      const auto rule = parse_certificate_rule(field<std::string>(c, "rule"));
      if (!rule) throw Error("unknown certificate rule");
      doc.certificates.push_back({field<std::size_t>(c, "chamber"), *rule, field<unsigned>(c, "k"),
                                  field<unsigned>(c, "l"), field<unsigned>(c, "n")});
    }
    for (const auto& r : field<json>(j, "refusals")) {
      const auto kind_value = parse_refusal_kind(field<std::string>(r, "kind"));
      if (!kind_value) throw Error("unknown refusal kind");
      Refusal refusal{*kind_value, std::nullopt};
      if (r.contains("chamber")) refusal.chamber = r.at("chamber").get<std::size_t>();
      doc.refusals.push_back(refusal);
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(std::string("report JSON has a wrong field type: ") + e.what());
  }
}

std::string facts_to_json(const std::vector<std::string>& chain, const IndexFacts& facts, int indent) {
  json j;
  j["chain"] = chain;
  if (facts.geometric.exact()) {
    j["geometric"] = {{"kind", "Exact"}, {"value", facts.geometric.lower}};
  } else {
    j["geometric"] = {{"kind", "Bounds"}, {"bounds", json::array({facts.geometric.lower, facts.geometric.upper})}};
  }
  j["algebraic"] = facts.algebraic;
  j["components"] = facts.components;
  return dump(j, indent);
}

std::string conclusions_to_json(unsigned total, const SeparatingTorusConclusions& conclusions, int indent) {
  json j;
  j["total"] = total;
  j["zero_total"] = conclusions.zero_total;
  j["factors"] = json::array();
  for (const auto& f : conclusions.factors) {
    j["factors"].push_back({{"inner", f.inner},
                            {"outer", f.outer},
                            {"parallel_to_inner", f.parallel_to_inner},
                            {"parallel_to_outer", f.parallel_to_outer}});
  }
  return dump(j, indent);
}

}  // namespace chamber
