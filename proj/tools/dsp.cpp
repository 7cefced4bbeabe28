// dsp: derived-series and finite-quotient reports for finitely presented
// groups. Subcommands: explore, abelianize, low-index, galois-audit.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsp/abelianization.hpp"
#include "dsp/derived_series.hpp"
#include "dsp/error.hpp"
#include "dsp/finite_quotients.hpp"
#include "dsp/presentation.hpp"
#include "dsp/report_json.hpp"

namespace {

struct Config {
  std::string input_path;
  std::int64_t max_depth = 8;
  std::int64_t max_cosets = 100'000;
  std::int64_t max_index = 6;
  std::int64_t letter_budget = dsp::kDefaultLetterBudget;
  std::int64_t torsion_cap = 10'000;
  std::string format = "json";
};

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("file", cfg.input_path, "presentation file")->required();
  cmd->add_option("--max-depth", cfg.max_depth, "derived series depth limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-cosets", cfg.max_cosets, "live coset budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-index", cfg.max_index, "subgroup index bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--letter-budget", cfg.letter_budget,
                  "relator letter budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--torsion-cap", cfg.torsion_cap,
                  "abelianization order bound for descending")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

dsp::Presentation load_presentation(const Config& cfg) {
  std::ifstream in(cfg.input_path);
  if (!in)
    throw dsp::Error(dsp::errc::bad_input,
                     "cannot read '" + cfg.input_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  dsp::ParseOptions opts;
  opts.letter_budget = cfg.letter_budget;
  return dsp::parse_presentation(buf.str(), opts).presentation;
}

dsp::json envelope(const std::string& command, const Config& cfg) {
  return dsp::json{{"schema_version", 1},
                   {"command", command},
                   {"input", cfg.input_path},
                   {"limits",
                    {{"max_depth", cfg.max_depth},
                     {"max_cosets", cfg.max_cosets},
                     {"max_index", cfg.max_index},
                     {"letter_budget", cfg.letter_budget},
                     {"torsion_cap", cfg.torsion_cap}}}};
}

void emit(const dsp::json& j) { std::cout << j.dump(2) << "\n"; }

std::string torsion_text(const dsp::json& torsion) {
  std::string out = "[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ", ";
    out += torsion[i].get<std::string>();
  }
  return out + "]";
}

int run_explore(const Config& cfg) {
  dsp::Presentation p = load_presentation(cfg);
  dsp::ExploreLimits limits;
  limits.max_depth = cfg.max_depth;
  limits.max_cosets = cfg.max_cosets;
  limits.letter_budget = cfg.letter_budget;
  limits.torsion_cap = cfg.torsion_cap;
  dsp::DerivedSeriesReport report = dsp::explore_derived_series(p, limits);

  dsp::json j = envelope("explore", cfg);
  j.update(dsp::explore_report_json(report));
  if (cfg.format == "json") {
    emit(j);
  } else {
    std::cout << "command: explore\ninput: " << cfg.input_path << "\n";
    for (const auto& s : j["steps"])
      std::cout << "level " << s["level"].get<std::int64_t>() << ": betti "
                << s["betti"].get<std::int64_t>() << " torsion "
                << torsion_text(s["torsion"]) << " index "
                << s["index_in_root"].get<std::string>() << "\n";
    std::cout << "outcome: " << j["outcome"]["kind"].get<std::string>()
              << " at level " << j["outcome"]["level"].get<std::int64_t>();
    if (j["outcome"].contains("resource"))
      std::cout << " (resource: "
                << j["outcome"]["resource"].get<std::string>() << ")";
    std::cout << "\nclassification: " << j["classification"].get<std::string>()
              << "\n";
  }
  return report.outcome.kind == dsp::OutcomeKind::budget_exhausted ? 2 : 0;
}

int run_abelianize(const Config& cfg) {
  dsp::Presentation p = load_presentation(cfg);
  dsp::AbelianInvariants inv = dsp::abelian_invariants(p);
  dsp::json j = envelope("abelianize", cfg);
  j.update(dsp::invariants_json(inv));
  if (cfg.format == "json") {
    emit(j);
  } else {
    std::cout << "command: abelianize\ninput: " << cfg.input_path
              << "\nbetti: " << inv.betti << "\ntorsion: "
              << torsion_text(j["torsion"]) << "\n";
  }
  return 0;
}

int run_low_index(const Config& cfg) {
  dsp::Presentation p = load_presentation(cfg);
  dsp::LowIndexResult res = dsp::low_index_subgroups(
      p, static_cast<std::int32_t>(cfg.max_index));

  dsp::json classes = dsp::json::array();
  for (const dsp::CosetTable& t : res.classes)
    classes.push_back(
        dsp::json{{"index", t.index},
                  {"normal", dsp::is_normal_subgroup_table(p, t)},
                  {"table", dsp::table_json(t)}});
  dsp::json j = envelope("low-index", cfg);
  j["budget_exhausted"] = res.budget_exhausted;
  j["class_count"] = static_cast<std::int64_t>(res.classes.size());
  j["classes"] = std::move(classes);
  if (cfg.format == "json") {
    emit(j);
  } else {
    std::cout << "command: low-index\ninput: " << cfg.input_path
              << "\nclasses: " << res.classes.size() << "\n";
    for (const auto& c : j["classes"])
      std::cout << "  index " << c["index"].get<std::int32_t>() << " normal "
                << (c["normal"].get<bool>() ? "yes" : "no") << "\n";
    if (res.budget_exhausted) std::cout << "budget exhausted\n";
  }
  return res.budget_exhausted ? 2 : 0;
}

int run_galois_audit(const Config& cfg) {
  dsp::Presentation p = load_presentation(cfg);
  dsp::LowIndexResult res = dsp::low_index_subgroups(
      p, static_cast<std::int32_t>(cfg.max_index));
  bool exhausted = res.budget_exhausted;

  dsp::json verdicts = dsp::json::array();
  for (const dsp::CosetTable& t : res.classes) {
    try {
      dsp::GaloisCoverDatum d = dsp::galois_closure(
          p, t, dsp::kDefaultExplicitCap, cfg.letter_budget);
      dsp::json inv = dsp::invariants_json(d.cover_invariants);
      verdicts.push_back(
          dsp::json{{"index", t.index},
                    {"deck_order", dsp::int_json(d.deck.order)},
                    {"cover_betti", inv.at("betti")},
                    {"cover_torsion", inv.at("torsion")},
                    {"verdict", dsp::corollary_check(d)}});
    } catch (const dsp::Error& e) {
      if (e.code() != dsp::errc::order_too_large &&
          e.code() != dsp::errc::letter_budget_exceeded)
        throw;
      std::cerr << "warning: class of index " << t.index << " skipped: "
                << e.what() << "\n";
      exhausted = true;
    }
  }
  dsp::json j = envelope("galois-audit", cfg);
  j["budget_exhausted"] = exhausted;
  j["verdicts"] = std::move(verdicts);
  if (cfg.format == "json") {
    emit(j);
  } else {
    std::cout << "command: galois-audit\ninput: " << cfg.input_path << "\n";
    for (const auto& v : j["verdicts"])
      std::cout << "  index " << v["index"].get<std::int32_t>()
                << " deck order " << v["deck_order"].get<std::string>()
                << " -> " << v["verdict"].get<std::string>() << "\n";
    if (exhausted) std::cout << "budget exhausted\n";
  }
  return exhausted ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derived series explorer for finitely presented groups"};
  app.require_subcommand(1);

  Config cfg;
  CLI::App* explore = app.add_subcommand("explore", "walk the derived series");
  CLI::App* abelianize =
      app.add_subcommand("abelianize", "abelian invariants of the input");
  CLI::App* low_index =
      app.add_subcommand("low-index", "conjugacy classes of subgroups");
  CLI::App* galois =
      app.add_subcommand("galois-audit", "homology-sphere obstruction audit");
  for (CLI::App* cmd : {explore, abelianize, low_index, galois})
    add_common_options(cmd, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (explore->parsed()) return run_explore(cfg);
    if (abelianize->parsed()) return run_abelianize(cfg);
    if (low_index->parsed()) return run_low_index(cfg);
    return run_galois_audit(cfg);
  } catch (const dsp::Error& e) {
    if (e.line() > 0)
      std::cerr << cfg.input_path << ":" << e.line() << ": " << e.what()
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case dsp::errc::budget_exhausted:
      case dsp::errc::letter_budget_exceeded:
      case dsp::errc::order_too_large:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
