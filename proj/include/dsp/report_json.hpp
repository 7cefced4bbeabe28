#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsp/abelianization.hpp"
#include "dsp/coset_table.hpp"
#include "dsp/derived_series.hpp"
#include "dsp/error.hpp"
#include "dsp/presentation.hpp"

namespace dsp {

// Reports preserve key insertion order and print arbitrary-precision
// integers as decimal strings, keeping output byte-stable across runs.
using json = nlohmann::ordered_json;

inline json int_json(const Int& v) { return v.str(); }

inline json invariants_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const Int& d : inv.torsion) torsion.push_back(int_json(d));
  return json{{"betti", inv.betti}, {"torsion", torsion}};
}

inline AbelianInvariants parse_invariants_json(const json& j) {
  AbelianInvariants inv;
  inv.betti = j.at("betti").get<std::int64_t>();
  for (const auto& d : j.at("torsion"))
    inv.torsion.emplace_back(d.get<std::string>());
  return inv;
}

inline json presentation_fields_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& name : p.generator_names) gens.push_back(name);
  json rels = json::array();
  for (const Word& r : p.relators) rels.push_back(serialize_word(p, r));
  return json{{"generators", gens}, {"relators", rels}};
}

inline Presentation parse_presentation_fields(const json& j) {
  std::string text = "gens:";
  for (const auto& name : j.at("generators"))
    text += " " + name.get<std::string>();
  text += "\n";
  for (const auto& r : j.at("relators"))
    text += "rel: " + r.get<std::string>() + "\n";
  return parse_presentation(text).presentation;
}

inline json step_json(const DerivedStep& s) {
  json fields = presentation_fields_json(s.presentation);
  json inv = invariants_json(s.invariants);
  return json{{"level", s.level},
              {"generators", fields.at("generators")},
              {"relators", fields.at("relators")},
              {"betti", inv.at("betti")},
              {"torsion", inv.at("torsion")},
              {"index_in_root", int_json(s.index_in_root)}};
}

inline json outcome_json(const Outcome& o) {
  json j{{"kind", outcome_kind_name(o.kind)}, {"level", o.level}};
  if (o.kind == OutcomeKind::budget_exhausted)
    j["resource"] = limiting_resource_name(o.resource);
  return j;
}

inline json explore_report_json(const DerivedSeriesReport& report) {
  json steps = json::array();
  for (const DerivedStep& s : report.steps) steps.push_back(step_json(s));
  return json{{"steps", steps},
              {"outcome", outcome_json(report.outcome)},
              {"classification", classify_outcome(report)}};
}

inline DerivedSeriesReport parse_explore_report(const json& j) {
  DerivedSeriesReport report;
  for (const auto& js : j.at("steps")) {
    DerivedStep step;
    step.level = js.at("level").get<std::int64_t>();
    step.presentation = parse_presentation_fields(js);
    step.invariants = parse_invariants_json(js);
    step.index_in_root = Int(js.at("index_in_root").get<std::string>());
    report.steps.push_back(std::move(step));
  }
  const json& jo = j.at("outcome");
  std::string kind = jo.at("kind").get<std::string>();
  if (kind == "PositiveBetti")
    report.outcome.kind = OutcomeKind::positive_betti;
  else if (kind == "Stabilized")
    report.outcome.kind = OutcomeKind::stabilized;
  else if (kind == "BudgetExhausted")
    report.outcome.kind = OutcomeKind::budget_exhausted;
  else
    throw Error(errc::bad_input, "unknown outcome kind '" + kind + "'");
  report.outcome.level = jo.at("level").get<std::int64_t>();
  if (jo.contains("resource")) {
    std::string r = jo.at("resource").get<std::string>();
    if (r == "max_depth")
      report.outcome.resource = LimitingResource::max_depth;
    else if (r == "torsion_cap")
      report.outcome.resource = LimitingResource::torsion_cap;
    else if (r == "letter_budget")
      report.outcome.resource = LimitingResource::letter_budget;
    else
      throw Error(errc::bad_input, "unknown resource '" + r + "'");
  }
  return report;
}

inline json table_json(const CosetTable& t) {
  json rows = json::array();
  for (std::int32_t c = 0; c < t.index; ++c) {
    json row = json::array();
    for (std::int32_t col = 0; col < t.columns(); ++col)
      row.push_back(t.at(c, col));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CosetTable parse_table_json(const json& rows,
                                   std::int32_t generator_count) {
  CosetTable t;
  t.generator_count = generator_count;
  t.index = static_cast<std::int32_t>(rows.size());
  t.complete = true;
  for (const auto& row : rows)
    for (const auto& v : row)
      t.entries.push_back(v.get<std::int32_t>());
  return t;
}

}  // namespace dsp
