#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsp {

enum class errc {
  unknown_generator,
  malformed_exponent,
  duplicate_generator,
  bad_input,
  budget_exhausted,
  letter_budget_exceeded,
  order_too_large,
  precondition_violated,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::malformed_exponent: return "MalformedExponent";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::bad_input: return "BadInput";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::letter_budget_exceeded: return "LetterBudgetExceeded";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::precondition_violated: return "PreconditionViolated";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what, int line = 0,
        std::int64_t high_water = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        line_(line),
        high_water_(high_water) {}

  errc code() const { return code_; }

  // 1-based input line for parse errors, 0 when not applicable.
  int line() const { return line_; }

  // For budget_exhausted from coset enumeration: peak live-coset count.
  std::int64_t high_water() const { return high_water_; }

 private:
  errc code_;
  int line_;
  std::int64_t high_water_;
};

}  // namespace dsp
