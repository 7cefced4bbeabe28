#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dsp/error.hpp"
#include "dsp/word.hpp"

namespace dsp {

inline constexpr std::int64_t kDefaultLetterBudget = 10'000'000;

// A finitely presented group: named generators plus relators. Relators are
// stored freely and cyclically reduced and nonempty; every letter refers to
// a declared generator.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::int32_t generator_count() const {
    return static_cast<std::int32_t>(generator_names.size());
  }

  bool operator==(const Presentation&) const = default;
};

struct ParseOptions {
  std::int64_t letter_budget = kDefaultLetterBudget;
};

struct ParseResult {
  Presentation presentation;
  // Set when a relator reduced to the identity and was dropped.
  bool dropped_empty_relator = false;
};

namespace detail {

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Input format, line oriented:
//   gens: a b c
//   rel: a^2 b^-3 c
// '#' starts a comment; blank lines are skipped. Terms are <name> or
// <name>^<int> and concatenate left to right. Exponents are expanded
// eagerly against the letter budget.
inline ParseResult parse_presentation(std::string_view text,
                                      const ParseOptions& opts = {}) {
  ParseResult result;
  Presentation& p = result.presentation;
  std::unordered_map<std::string, std::int32_t> name_to_index;
  bool saw_gens = false;
  std::int64_t letters_used = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "gens:") {
      if (saw_gens)
        throw Error(errc::bad_input, "second gens: line", line_no);
      saw_gens = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& name = tokens[i];
        if (!detail::is_name_start(name[0]))
          throw Error(errc::bad_input, "bad generator name '" + name + "'",
                      line_no);
        for (char c : name)
          if (!detail::is_name_char(c))
            throw Error(errc::bad_input, "bad generator name '" + name + "'",
                        line_no);
        if (name_to_index.count(name))
          throw Error(errc::duplicate_generator,
                      "generator '" + name + "' declared twice", line_no);
        name_to_index[name] =
            static_cast<std::int32_t>(p.generator_names.size()) + 1;
        p.generator_names.push_back(name);
      }
    } else if (tokens[0] == "rel:") {
      if (!saw_gens)
        throw Error(errc::bad_input, "rel: before gens:", line_no);
      Word raw;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& term = tokens[i];
        std::string name = term;
        std::int64_t exponent = 1;
        if (auto caret = term.find('^'); caret != std::string::npos) {
          name = term.substr(0, caret);
          std::string exp_str = term.substr(caret + 1);
          if (exp_str.empty())
            throw Error(errc::malformed_exponent,
                        "missing exponent in '" + term + "'", line_no);
          std::size_t digits = 0;
          bool neg = exp_str[0] == '-';
          for (std::size_t k = neg ? 1 : 0; k < exp_str.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(exp_str[k])))
              throw Error(errc::malformed_exponent,
                          "bad exponent in '" + term + "'", line_no);
            ++digits;
          }
          if (digits == 0 || digits > 10)
            throw Error(errc::malformed_exponent,
                        "bad exponent in '" + term + "'", line_no);
          exponent = std::stoll(exp_str);
          if (exponent > std::numeric_limits<std::int32_t>::max() ||
              exponent < -static_cast<std::int64_t>(
                             std::numeric_limits<std::int32_t>::max()))
            throw Error(errc::malformed_exponent,
                        "exponent out of range in '" + term + "'", line_no);
        }
        auto it = name_to_index.find(name);
        if (it == name_to_index.end())
          throw Error(errc::unknown_generator,
                      "undeclared generator '" + name + "'", line_no);
        std::int64_t count = exponent < 0 ? -exponent : exponent;
        letters_used += count;
        if (letters_used > opts.letter_budget)
          throw Error(errc::letter_budget_exceeded,
                      "relator expansion exceeds letter budget", line_no);
        Letter letter = exponent < 0 ? -it->second : it->second;
        for (std::int64_t k = 0; k < count; ++k) raw.push_back(letter);
      }
      Word reduced = cyclically_reduce(free_reduce(raw));
      if (reduced.empty())
        result.dropped_empty_relator = true;
      else
        p.relators.push_back(std::move(reduced));
    } else {
      throw Error(errc::bad_input, "unrecognized line '" + tokens[0] + "'",
                  line_no);
    }
  }
  if (!saw_gens) throw Error(errc::bad_input, "missing gens: line");
  return result;
}

// Writes one word as space-separated terms with exponents folded, e.g.
// [+1,+1,-2,-2,-2] over (a, b) -> "a^2 b^-3".
inline std::string serialize_word(const Presentation& p, const Word& w) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i);
    std::int64_t exp = w[i] > 0 ? run : -run;
    if (!first) out << ' ';
    first = false;
    out << p.generator_names[std::abs(w[i]) - 1];
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

inline std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& name : p.generator_names) out << ' ' << name;
  out << '\n';
  for (const Word& r : p.relators) out << "rel: " << serialize_word(p, r) << '\n';
  return out.str();
}

}  // namespace dsp
