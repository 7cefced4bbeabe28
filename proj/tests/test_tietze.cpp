#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "dsp/abelianization.hpp"
#include "dsp/schreier.hpp"
#include "dsp/tietze.hpp"
#include "dsp/todd_coxeter.hpp"
#include "oracle_helpers.hpp"

using dsp::Presentation;
using dsp::SimplifyResult;
using dsp::Word;

namespace {

Presentation from_text(const std::string& text) {
  return dsp::parse_presentation(text).presentation;
}

Presentation corpus(const std::string& name) {
  return oracle::load_presentation_file(std::string(DSP_CORPUS_DIR) + "/" +
                                        name);
}

bool is_subsequence(const std::vector<std::string>& sub,
                    const std::vector<std::string>& full) {
  std::size_t i = 0;
  for (const std::string& s : full)
    if (i < sub.size() && sub[i] == s) ++i;
  return i == sub.size();
}

}  // namespace

TEST_CASE("length-1 relators erase their generator") {
  SimplifyResult r = dsp::simplify_presentation(
      from_text("gens: a b\nrel: a\nrel: a b^2\n"));
  REQUIRE(r.moves == 1);
  REQUIRE(r.presentation.generator_names == std::vector<std::string>{"b"});
  REQUIRE(r.presentation.relators == std::vector<Word>{{1, 1}});
}

TEST_CASE("length-2 relators identify generators") {
  SECTION("same-sign pair inverts") {
    SimplifyResult r =
        dsp::simplify_presentation(from_text("gens: a b\nrel: a b\nrel: b^3\n"));
    REQUIRE(r.moves == 1);
    REQUIRE(r.presentation.generator_names == std::vector<std::string>{"a"});
    dsp::AbelianInvariants inv = dsp::abelian_invariants(r.presentation);
    REQUIRE(inv.torsion == std::vector<dsp::Int>{3});
  }
  SECTION("mixed-sign pair maps directly") {
    SimplifyResult r =
        dsp::simplify_presentation(from_text("gens: a b\nrel: a b^-1\n"));
    REQUIRE(r.moves == 1);
    REQUIRE(r.presentation.generator_names == std::vector<std::string>{"a"});
    REQUIRE(r.presentation.relators.empty());
  }
}

TEST_CASE("a generator occurring once is defined by its relator") {
  SimplifyResult r =
      dsp::simplify_presentation(from_text("gens: a b\nrel: a^2 b\n"));
  REQUIRE(r.moves == 1);
  REQUIRE(r.presentation.generator_names == std::vector<std::string>{"a"});
  REQUIRE(r.presentation.relators.empty());
}

TEST_CASE("free factors survive") {
  // b occurs zero times: no move touches it
  SimplifyResult r =
      dsp::simplify_presentation(from_text("gens: a b\nrel: a^2\n"));
  REQUIRE(r.moves == 0);
  REQUIRE(r.presentation.generator_count() == 2);
}

TEST_CASE("identification chains collapse to a free generator") {
  SimplifyResult r = dsp::simplify_presentation(
      from_text("gens: a b c\nrel: c b^-1\nrel: b a^-1\n"));
  REQUIRE(r.moves == 2);
  REQUIRE(r.presentation.generator_names == std::vector<std::string>{"a"});
  REQUIRE(r.presentation.relators.empty());
}

TEST_CASE("the trivial group simplifies to the empty presentation") {
  SimplifyResult r =
      dsp::simplify_presentation(from_text("gens: a b\nrel: a\nrel: b\n"));
  REQUIRE(r.moves == 2);
  REQUIRE(r.presentation.generator_count() == 0);
  REQUIRE(r.presentation.relators.empty());
}

TEST_CASE("budget counts pending eliminations only") {
  SECTION("a pending move trips a zero budget") {
    SimplifyResult r =
        dsp::simplify_presentation(from_text("gens: a b\nrel: a\n"), 0);
    REQUIRE(r.budget_exhausted);
    REQUIRE(r.moves == 0);
    REQUIRE(r.presentation.generator_count() == 2);
  }
  SECTION("an already-simple input never trips") {
    SimplifyResult r =
        dsp::simplify_presentation(from_text("gens: a\nrel: a^2\n"), 0);
    REQUIRE_FALSE(r.budget_exhausted);
    REQUIRE(r.moves == 0);
  }
  SECTION("a partial run is still equivalent") {
    Presentation p = from_text("gens: a b c\nrel: c b^-1\nrel: b a^-1\n");
    SimplifyResult r = dsp::simplify_presentation(p, 1);
    REQUIRE(r.budget_exhausted);
    REQUIRE(r.moves == 1);
    REQUIRE(dsp::abelian_invariants(r.presentation) ==
            dsp::abelian_invariants(p));
  }
}

TEST_CASE("abelian invariants are preserved") {
  std::vector<Presentation> batch;
  for (const char* f : {"trefoil.grp", "q8.grp", "sym3.grp", "free2.grp",
                        "binary-icosahedral.grp", "surface2.grp"})
    batch.push_back(corpus(f));
  batch.push_back(from_text("gens: a b c\nrel: a^4 b\nrel: c^6\nrel: a b c\n"));

  // rewritten subgroup presentations are the shape the simplifier exists for
  {
    Presentation p = corpus("sym3.grp");
    dsp::CosetTable t = dsp::enumerate_cosets(p, {}, 100);
    batch.push_back(dsp::rewrite_subgroup_presentation(p, t).presentation);
  }
  {
    Presentation p = corpus("q8.grp");
    dsp::CosetTable t = dsp::enumerate_cosets(p, {Word{1}}, 100);
    batch.push_back(dsp::rewrite_subgroup_presentation(p, t).presentation);
  }

  for (const Presentation& p : batch) {
    SimplifyResult r = dsp::simplify_presentation(p);
    REQUIRE_FALSE(r.budget_exhausted);
    REQUIRE(dsp::abelian_invariants(r.presentation) ==
            dsp::abelian_invariants(p));
    REQUIRE(is_subsequence(r.presentation.generator_names, p.generator_names));

    // fixpoint: a second pass finds nothing
    SimplifyResult again = dsp::simplify_presentation(r.presentation);
    REQUIRE(again.moves == 0);
    REQUIRE(again.presentation == r.presentation);
  }
}
