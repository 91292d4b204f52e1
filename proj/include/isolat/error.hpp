#pragma once

#include <stdexcept>
#include <string>

namespace isolat {

enum class Errc {
  zero_vector,
  duplicate_vector,
  dimension_mismatch,
  not_generating,
  index_out_of_range,
  empty_set,
  not_disjoint,
  size_not_in_table,
  budget_exceeded,
  infeasible_enumeration,
  leading_coefficient_mismatch,
  degenerate_dimension,
  degenerate_hull,
  assertion_failed,
  invalid_input,
};

/// Stable machine-readable name ("NotGenerating", "BudgetExceeded", ...).
const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace isolat
