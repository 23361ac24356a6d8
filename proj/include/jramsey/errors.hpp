#pragma once

#include <stdexcept>
#include <string>

namespace jramsey {

// Bad input or a violated precondition. The CLI maps it to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A budgeted search ran out of node expansions before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request outside what an exact engine is prepared to answer.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jramsey
