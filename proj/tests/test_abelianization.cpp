#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "dsp/abelianization.hpp"
#include "dsp/derived_series.hpp"
#include "oracle_helpers.hpp"

using dsp::AbelianInvariants;
using dsp::AbelianQuotientMap;
using dsp::Int;
using dsp::Presentation;
using dsp::Word;

namespace {

Presentation from_text(const std::string& text) {
  return dsp::parse_presentation(text).presentation;
}

Presentation corpus(const std::string& name) {
  return oracle::load_presentation_file(std::string(DSP_CORPUS_DIR) + "/" +
                                        name);
}

std::vector<Int> add(const AbelianQuotientMap& map, std::vector<Int> a,
                     const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  map.normalize(a);
  return a;
}

}  // namespace

TEST_CASE("invariants of the corpus groups") {
  auto inv = [&](const char* f) { return dsp::abelian_invariants(corpus(f)); };

  AbelianInvariants trefoil = inv("trefoil.grp");
  REQUIRE(trefoil.betti == 1);
  REQUIRE(trefoil.torsion.empty());
  REQUIRE_FALSE(trefoil.is_finite());

  AbelianInvariants free2 = inv("free2.grp");
  REQUIRE(free2.betti == 2);
  REQUIRE(free2.torsion.empty());

  AbelianInvariants q8 = inv("q8.grp");
  REQUIRE(q8.betti == 0);
  REQUIRE(q8.torsion == std::vector<Int>{2, 2});
  REQUIRE(q8.torsion_order() == 4);

  AbelianInvariants sym3 = inv("sym3.grp");
  REQUIRE(sym3.betti == 0);
  REQUIRE(sym3.torsion == std::vector<Int>{2});

  AbelianInvariants icosahedral = inv("binary-icosahedral.grp");
  REQUIRE(icosahedral.perfect());

  AbelianInvariants surface = inv("surface2.grp");
  REQUIRE(surface.betti == 4);
  REQUIRE(surface.torsion.empty());
}

TEST_CASE("invariants of small cyclic and mixed groups") {
  REQUIRE(dsp::abelian_invariants(from_text("gens: a\nrel: a^6\n")).torsion ==
          std::vector<Int>{6});
  AbelianInvariants mixed =
      dsp::abelian_invariants(from_text("gens: a b\nrel: a^2\nrel: b^4\n"));
  REQUIRE(mixed.torsion == std::vector<Int>{2, 4});

  // Klein bottle: relation a^2 b^2 leaves Z x Z/2
  AbelianInvariants klein =
      dsp::abelian_invariants(from_text("gens: a b\nrel: a^2 b^2\n"));
  REQUIRE(klein.betti == 1);
  REQUIRE(klein.torsion == std::vector<Int>{2});

  AbelianInvariants trivial =
      dsp::abelian_invariants(from_text("gens: a\nrel: a\n"));
  REQUIRE(trivial.perfect());
  REQUIRE(trivial.torsion_order() == 1);
}

TEST_CASE("the quotient map is a homomorphism killing every relator") {
  for (const char* f : {"trefoil.grp", "q8.grp", "sym3.grp", "free2.grp",
                        "binary-icosahedral.grp", "surface2.grp"}) {
    Presentation p = corpus(f);
    AbelianQuotientMap map = dsp::abelian_quotient_map(p);

    REQUIRE(map.invariants == dsp::abelian_invariants(p));
    for (const Word& r : p.relators) REQUIRE(map.eval(r) == map.zero());

    for (std::int32_t g = 1; g <= p.generator_count(); ++g) {
      REQUIRE(map.eval(Word{g}) ==
              map.generator_images[static_cast<std::size_t>(g) - 1]);
      REQUIRE(map.eval(dsp::concat(Word{g}, Word{-g})) == map.zero());
    }

    // additivity on a few sample words
    std::vector<Word> samples = {{1}, {-1}, {1, 2}, {2, -1, 2}, {-2, -2, 1}};
    for (const Word& u : samples)
      for (const Word& v : samples)
        REQUIRE(map.eval(dsp::concat(u, v)) ==
                add(map, map.eval(u), map.eval(v)));

    // torsion coordinates always land in their canonical range
    for (const auto& img : map.generator_images)
      for (std::size_t i = 0; i < map.invariants.torsion.size(); ++i) {
        REQUIRE(img[i] >= 0);
        REQUIRE(img[i] < map.invariants.torsion[i]);
      }
  }
}

TEST_CASE("quotient map separates the cyclic group's elements") {
  Presentation p = from_text("gens: a\nrel: a^6\n");
  AbelianQuotientMap map = dsp::abelian_quotient_map(p);
  std::vector<std::vector<Int>> seen;
  Word w;
  for (int k = 0; k < 6; ++k) {
    seen.push_back(map.eval(w));
    w.push_back(1);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j)
      REQUIRE(seen[i] != seen[j]);
}

TEST_CASE("commutator kernel tables") {
  for (const char* f : {"q8.grp", "sym3.grp"}) {
    Presentation p = corpus(f);
    AbelianQuotientMap map = dsp::abelian_quotient_map(p);
    dsp::CosetTable t = dsp::commutator_kernel_table(p, map);

    REQUIRE(Int(t.index) == map.invariants.torsion_order());

    std::vector<Word> commutators;
    for (std::int32_t g = 1; g <= p.generator_count(); ++g)
      for (std::int32_t h = 1; h <= p.generator_count(); ++h)
        commutators.push_back(dsp::commutator(Word{g}, Word{h}));
    REQUIRE(dsp::verify_table(p, commutators, t));
    REQUIRE(dsp::is_normal(t, commutators));

    // words acting trivially are exactly those with trivial image
    std::vector<Word> probes = {{1}, {2}, {1, 2}, {1, 1}, {2, 2, 2}};
    for (const Word& w : probes) {
      bool fixes = dsp::coset_action(t, w, 0) == 0;
      REQUIRE(fixes == (map.eval(w) == map.zero()));
    }
  }
}

TEST_CASE("kernel table preconditions") {
  Presentation trefoil = corpus("trefoil.grp");
  AbelianQuotientMap map = dsp::abelian_quotient_map(trefoil);
  try {
    dsp::commutator_kernel_table(trefoil, map);
    FAIL("expected a precondition failure");
  } catch (const dsp::Error& e) {
    REQUIRE(e.code() == dsp::errc::precondition_violated);
  }
}
