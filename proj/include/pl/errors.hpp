#pragma once
#include <stdexcept>
#include <string>

namespace pl {

// Domain failures (bad shapes, alphabet mismatches, impossible requests).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search ran out of nodes. Never swallowed: callers that want a tri-state
// answer use the *_member APIs instead.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what, long long used = 0)
      : std::runtime_error(what), nodes(used) {}
  long long nodes;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
  int line;
};

}  // namespace pl
