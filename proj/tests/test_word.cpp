#include <catch2/catch_amalgamated.hpp>

#include "dsp/word.hpp"
#include "oracle_helpers.hpp"

using dsp::Word;

TEST_CASE("free reduction matches scan-erase oracle on all short words") {
  for (const Word& w : oracle::all_words(2, 6)) {
    Word got = dsp::free_reduce(w);
    REQUIRE(got == oracle::free_reduce_scan(w));
    REQUIRE(dsp::is_freely_reduced(got));
  }
}

TEST_CASE("free reduction basics") {
  REQUIRE(dsp::free_reduce({}) == Word{});
  REQUIRE(dsp::free_reduce({1, -1}) == Word{});
  REQUIRE(dsp::free_reduce({1, 2, -2, -1}) == Word{});
  REQUIRE(dsp::free_reduce({1, -2, 2, -1, 1}) == Word{1});
  // nested cancellation that a single left-to-right erase pass would miss
  REQUIRE(dsp::free_reduce({1, 2, -2, -1, 3}) == Word{3});
}

TEST_CASE("cyclic reduction strips conjugating ends only") {
  REQUIRE(dsp::cyclically_reduce({1, 2, -1}) == Word{2});
  REQUIRE(dsp::cyclically_reduce({1, 2, 3, -2, -1}) == Word{3});
  REQUIRE(dsp::cyclically_reduce({1, 2}) == Word{1, 2});
  REQUIRE(dsp::cyclically_reduce({1}) == Word{1});
  REQUIRE(dsp::cyclically_reduce({}) == Word{});
}

TEST_CASE("cyclic reduction properties on all short words") {
  for (const Word& raw : oracle::all_words(2, 6)) {
    Word w = dsp::free_reduce(raw);
    Word c = dsp::cyclically_reduce(w);
    REQUIRE(dsp::is_cyclically_reduced(c));
    // conjugation preserves exponent sums
    for (dsp::Letter g = 1; g <= 2; ++g) {
      auto sum = [g](const Word& v) {
        std::int64_t s = 0;
        for (dsp::Letter x : v) {
          if (x == g) ++s;
          if (x == -g) --s;
        }
        return s;
      };
      REQUIRE(sum(w) == sum(c));
    }
  }
}

TEST_CASE("inverse and concatenation") {
  for (const Word& raw : oracle::all_words(2, 4)) {
    Word w = dsp::free_reduce(raw);
    REQUIRE(dsp::concat(w, dsp::inverse_word(w)) == Word{});
    REQUIRE(dsp::concat(dsp::inverse_word(w), w) == Word{});
    REQUIRE(dsp::inverse_word(dsp::inverse_word(w)) == w);
  }
  REQUIRE(dsp::inverse_word({1, 2, -1}) == Word{1, -2, -1});
}

TEST_CASE("commutator of a word with itself is trivial") {
  for (const Word& raw : oracle::all_words(2, 3)) {
    Word w = dsp::free_reduce(raw);
    REQUIRE(dsp::commutator(w, w) == Word{});
  }
  REQUIRE(dsp::commutator({1}, {2}) == Word{1, 2, -1, -2});
}
