#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tensq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL input; carries a 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Invalid arguments at an API boundary (bad family parameters, undeclared
// generator indices, dimension mismatches, ...).
struct BadParams : Error {
  using Error::Error;
};

struct DimensionMismatch : BadParams {
  using BadParams::BadParams;
};

// A coset enumeration ran out of its coset or time allowance.  Never a
// partial answer: the caller either retries with a bigger budget or treats
// the group as (possibly) infinite.
struct BudgetExceeded : Error {
  std::uint64_t cosets_defined;
  explicit BudgetExceeded(const std::string& what_, std::uint64_t defined = 0)
      : Error(what_), cosets_defined(defined) {}
};

// The nu-group of a finite presentation did not close within budget.
struct NotFinite : BudgetExceeded {
  using BudgetExceeded::BudgetExceeded;
};

// Generator images do not extend to a homomorphism.
struct NotAHomomorphism : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

// A checker's hypothesis is not satisfied by the input (e.g. the order
// formula requires the abelianization to be an odd-p-group).
struct HypothesisNotMet : Error {
  using Error::Error;
};

// A theorem-level identity failed inside the pipeline.  This is a bug, not
// a data condition; the CLI maps it to exit code 4.
struct InternalCheckFailure : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalCheckFailure(what);
}

}  // namespace tensq
