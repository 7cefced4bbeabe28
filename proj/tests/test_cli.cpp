#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "dsp/finite_quotients.hpp"
#include "dsp/report_json.hpp"
#include "oracle_helpers.hpp"

namespace {

std::string cli() { return DSP_CLI_PATH; }

std::string corpus_path(const std::string& name) {
  return std::string(DSP_CORPUS_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("abelianize emits the envelope plus invariants") {
  oracle::CliResult r =
      oracle::run_cli(cli() + " abelianize " + corpus_path("q8.grp"));
  REQUIRE(r.exit_code == 0);
  dsp::json j = dsp::json::parse(r.out);
  REQUIRE(j.at("schema_version") == 1);
  REQUIRE(j.at("command") == "abelianize");
  REQUIRE(j.at("input") == corpus_path("q8.grp"));
  REQUIRE(j.at("limits") ==
          dsp::json({{"max_depth", 8},
                     {"max_cosets", 100000},
                     {"max_index", 6},
                     {"letter_budget", 10000000},
                     {"torsion_cap", 10000}}));
  REQUIRE(j.at("betti") == 0);
  REQUIRE(j.at("torsion") == dsp::json::array({"2", "2"}));
}

TEST_CASE("explore classifies the corpus") {
  oracle::CliResult witness =
      oracle::run_cli(cli() + " explore " + corpus_path("trefoil.grp"));
  REQUIRE(witness.exit_code == 0);
  dsp::json jw = dsp::json::parse(witness.out);
  REQUIRE(jw.at("classification") == "virtual-betti-witness");
  REQUIRE(jw.at("outcome").at("kind") == "PositiveBetti");
  REQUIRE_FALSE(jw.at("outcome").contains("resource"));

  oracle::CliResult stable =
      oracle::run_cli(cli() + " explore " + corpus_path("q8.grp"));
  REQUIRE(stable.exit_code == 0);
  dsp::json js = dsp::json::parse(stable.out);
  REQUIRE(js.at("classification") == "stabilized");
  REQUIRE(js.at("steps").size() == 3);
  REQUIRE(js.at("steps").at(2).at("index_in_root") == "8");
}

TEST_CASE("budget exhaustion exits with status 2") {
  oracle::CliResult r = oracle::run_cli(cli() + " explore --torsion-cap 3 " +
                                        corpus_path("q8.grp"));
  REQUIRE(r.exit_code == 2);
  dsp::json j = dsp::json::parse(r.out);
  REQUIRE(j.at("classification") == "undetermined");
  REQUIRE(j.at("outcome").at("resource") == "torsion_cap");
  REQUIRE(j.at("limits").at("torsion_cap") == 3);
}

TEST_CASE("low-index lists classes with verifiable tables") {
  oracle::CliResult r = oracle::run_cli(cli() + " low-index --max-index 2 " +
                                        corpus_path("free2.grp"));
  REQUIRE(r.exit_code == 0);
  dsp::json j = dsp::json::parse(r.out);
  REQUIRE(j.at("command") == "low-index");
  REQUIRE(j.at("budget_exhausted") == false);
  REQUIRE(j.at("class_count") == 4);
  REQUIRE(j.at("classes").size() == 4);

  dsp::Presentation p =
      oracle::load_presentation_file(corpus_path("free2.grp"));
  for (const auto& cls : j.at("classes")) {
    dsp::CosetTable t =
        dsp::parse_table_json(cls.at("table"), p.generator_count());
    REQUIRE(t.index == cls.at("index").get<std::int32_t>());
    dsp::SchreierData s = dsp::schreier_transversal(t);
    REQUIRE(dsp::verify_table(p, dsp::subgroup_generator_words(t, s), t));
    REQUIRE(dsp::is_normal_subgroup_table(p, t) == cls.at("normal").get<bool>());
  }
}

TEST_CASE("galois-audit renders one verdict per class") {
  oracle::CliResult r = oracle::run_cli(cli() + " galois-audit --max-index 6 " +
                                        corpus_path("sym3.grp"));
  REQUIRE(r.exit_code == 0);
  dsp::json j = dsp::json::parse(r.out);
  REQUIRE(j.at("verdicts").size() == 4);
  for (const auto& v : j.at("verdicts")) {
    REQUIRE(v.at("verdict") == "no-claim");
    REQUIRE(v.contains("deck_order"));
    REQUIRE(v.contains("cover_betti"));
    REQUIRE(v.contains("cover_torsion"));
  }

  oracle::CliResult window = oracle::run_cli(
      cli() + " galois-audit --max-index 1 " +
      corpus_path("binary-icosahedral.grp"));
  REQUIRE(window.exit_code == 0);
  dsp::json jw = dsp::json::parse(window.out);
  REQUIRE(jw.at("verdicts").size() == 1);
  REQUIRE(jw.at("verdicts").at(0).at("verdict") == "lemma-window");
  REQUIRE(jw.at("verdicts").at(0).at("deck_order") == "1");
}

TEST_CASE("input failures exit with status 1") {
  oracle::CliResult missing =
      oracle::run_cli(cli() + " abelianize /nonexistent/path.grp");
  REQUIRE(missing.exit_code == 1);

  std::string bad = write_temp("dsp_cli_bad.grp", "rel: a^2\n");
  oracle::CliResult malformed = oracle::run_cli(cli() + " abelianize " + bad);
  REQUIRE(malformed.exit_code == 1);

  oracle::CliResult unknown_flag = oracle::run_cli(
      cli() + " abelianize --no-such-flag " + corpus_path("q8.grp"));
  REQUIRE(unknown_flag.exit_code != 0);
}

TEST_CASE("a parse-time letter budget breach exits with status 2") {
  std::string big = write_temp("dsp_cli_big.grp", "gens: a\nrel: a^20\n");
  oracle::CliResult r =
      oracle::run_cli(cli() + " abelianize --letter-budget 10 " + big);
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("text format renders the same facts") {
  oracle::CliResult r = oracle::run_cli(cli() + " explore --format text " +
                                        corpus_path("q8.grp"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("outcome: Stabilized at level 2") != std::string::npos);
  REQUIRE(r.out.find("classification: stabilized") != std::string::npos);

  oracle::CliResult ab = oracle::run_cli(cli() + " abelianize --format text " +
                                         corpus_path("q8.grp"));
  REQUIRE(ab.out.find("betti: 0") != std::string::npos);
  REQUIRE(ab.out.find("torsion: [2, 2]") != std::string::npos);
}
