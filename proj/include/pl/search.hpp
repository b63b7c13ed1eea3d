#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pl/picture.hpp"
#include "pl/tileset.hpp"

namespace pl {

inline constexpr long long kDefaultBudget = 10'000'000;

struct Budget {
  long long limit = kDefaultBudget;
  long long used = 0;
  bool spend() { return ++used <= limit; }
  bool exhausted() const { return used > limit; }
};

// True iff every k x k window of thick_bordered(p, T.k()) is accepted by T.
bool slt_member(const Picture& p, const WindowConstraint& T);

enum class Verdict { yes, no, unknown };
const char* to_string(Verdict v);

struct SearchOutcome {
  enum Status { found, absent, exhausted } status = absent;
  std::optional<Picture> witness;
  long long nodes = 0;
};

// Row-major backtracking for a pre-image of p. Candidates per cell are the
// projection fiber of the terminal pixel, in alphabet order.
SearchOutcome preimage_search(const Picture& p, const TilingSystem& S, long long budget = kDefaultBudget);

struct MemberResult {
  Verdict verdict = Verdict::unknown;
  std::optional<Picture> witness;
  long long nodes = 0;
};
MemberResult ts_member(const Picture& p, const TilingSystem& S, long long budget = kDefaultBudget);

// Exact bounded enumeration; throws BudgetExhausted rather than truncating.
std::set<Picture> enumerate_language(const TilingSystem& S, int max_rows, int max_cols,
                                     long long budget = kDefaultBudget);
std::set<Picture> enumerate_language(const ConstraintPtr& T, int max_rows, int max_cols,
                                     long long budget = kDefaultBudget);
// All local pictures of one exact size.
std::vector<Picture> enumerate_local(const WindowConstraint& T, int rows, int cols, Budget& budget,
                                     const std::vector<std::vector<Sym>>* candidates = nullptr);

// Number of pictures of the given size in L(T), by a row-transfer count that
// memoizes on the last k-1 bordered rows. Never lists the pictures.
std::uint64_t count_local(const WindowConstraint& T, int rows, int cols, long long budget = kDefaultBudget);

struct LanguageReport {
  std::set<Picture> only_in_a, only_in_b;
  std::size_t size_a = 0, size_b = 0;
  bool equal() const { return only_in_a.empty() && only_in_b.empty(); }
};
LanguageReport compare_languages(const TilingSystem& A, const TilingSystem& B, int max_rows, int max_cols,
                                 long long budget = kDefaultBudget);
LanguageReport compare_sets(const std::set<Picture>& a, const std::set<Picture>& b);

}  // namespace pl
