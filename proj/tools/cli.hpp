#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace pl::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kBudgetExhausted = 2;
inline constexpr int kParseError = 3;

// JSON output carries this in its "schema" field.
inline constexpr int kJsonSchema = 1;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pl::cli
