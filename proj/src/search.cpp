#include "pl/search.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <unordered_map>

#include "pl/errors.hpp"

namespace pl {

namespace {

struct OutOfBudget {};

struct WindowRef {
  int top, left;
  bool last;  // the assigned cell is the final free cell of this window
};

// The thick-bordered working grid of a search.
class Board {
 public:
  Board(const WindowConstraint& T, int rows, int cols) : T_(T), k_(T.k()), m_(rows), n_(cols) {
    if (k_ < 2) throw DomainError("window size must be at least 2");
    if (rows < 1 || cols < 1) throw DomainError("picture sides must be positive");
    auto hw = thick_bordered_size(rows, cols, k_);
    H_ = hw.first;
    W_ = hw.second;
    grid_.assign(static_cast<std::size_t>(H_) * W_, kBorder);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) grid_[idx(i, j)] = kUnknown;
    refs_.resize(static_cast<std::size_t>(m_) * n_);
    for (int r = 0; r + k_ <= H_; ++r)
      for (int c = 0; c + k_ <= W_; ++c) {
        int li = std::min(r + k_ - 1, m_), lj = std::min(c + k_ - 1, n_);
        for (int i = std::max(r, 1); i <= std::min(r + k_ - 1, m_); ++i)
          for (int j = std::max(c, 1); j <= std::min(c + k_ - 1, n_); ++j)
            refs_[cell(i, j)].push_back({r, c, i == li && j == lj});
      }
    // check completed windows first: they are the strongest filter
    for (auto& v : refs_) std::stable_partition(v.begin(), v.end(), [](const WindowRef& w) { return w.last; });
    buf_.resize(static_cast<std::size_t>(k_) * k_);
  }

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * W_ + j; }
  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

  // c: 0-based interior cell index in row-major order
  bool place(std::size_t c, Sym s) {
    int i = static_cast<int>(c / n_) + 1, j = static_cast<int>(c % n_) + 1;
    grid_[idx(i, j)] = s;
    for (auto& w : refs_[c]) {
      load(w.top, w.left);
      if (w.last ? !T_.contains(buf_.data()) : !T_.consistent(buf_.data())) return false;
    }
    return true;
  }
  void clear(std::size_t c) {
    int i = static_cast<int>(c / n_) + 1, j = static_cast<int>(c % n_) + 1;
    grid_[idx(i, j)] = kUnknown;
  }
  Sym get(std::size_t c) const {
    int i = static_cast<int>(c / n_) + 1, j = static_cast<int>(c % n_) + 1;
    return grid_[idx(i, j)];
  }
  // bordered row content (for memo keys)
  void append_row(int bordered_row, std::vector<Sym>& out) const {
    out.insert(out.end(), grid_.begin() + static_cast<long>(idx(bordered_row, 0)),
               grid_.begin() + static_cast<long>(idx(bordered_row, 0) + W_));
  }

  Picture picture(const AlphabetPtr& a) const {
    std::vector<Sym> cells;
    cells.reserve(static_cast<std::size_t>(m_) * n_);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) cells.push_back(grid_[idx(i, j)]);
    return Picture(a, m_, n_, std::move(cells));
  }

 private:
  void load(int r, int c) {
    for (int a = 0; a < k_; ++a)
      std::copy_n(grid_.begin() + static_cast<long>(idx(r + a, c)), k_, buf_.begin() + static_cast<long>(a) * k_);
  }

  const WindowConstraint& T_;
  int k_, m_, n_, H_ = 0, W_ = 0;
  std::vector<Sym> grid_;
  std::vector<std::vector<WindowRef>> refs_;
  std::vector<Sym> buf_;
};

// Visits every completion in canonical order; visitor returns false to stop.
template <class Visit>
bool dfs(Board& b, std::size_t c, const std::vector<std::vector<Sym>>& cand, Budget& budget, Visit& visit) {
  if (c == cand.size()) return visit(b);
  for (Sym s : cand[c]) {
    if (!budget.spend()) throw OutOfBudget{};
    bool ok = b.place(c, s);
    if (ok && !dfs(b, c + 1, cand, budget, visit)) {
      b.clear(c);
      return false;
    }
    b.clear(c);
  }
  return true;
}

std::vector<std::vector<Sym>> all_symbols(const AlphabetPtr& a, std::size_t cells) {
  std::vector<Sym> all;
  for (std::size_t i = 0; i < a->size(); ++i) all.push_back(static_cast<Sym>(i));
  return std::vector<std::vector<Sym>>(cells, all);
}

struct VecHash {
  std::size_t operator()(const std::vector<Sym>& v) const {
    std::size_t h = v.size();
    for (Sym s : v) h = (h ^ static_cast<std::size_t>(s + 3)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

bool slt_member(const Picture& p, const WindowConstraint& T) {
  if (!same_alphabet(p.alphabet(), T.alphabet())) throw DomainError("slt_member: picture and tile set alphabets differ");
  if (p.has_border()) throw DomainError("slt_member: picture contains #");
  const int k = T.k();
  Picture t = thick_bordered(p, k);
  std::vector<Sym> buf(static_cast<std::size_t>(k) * k);
  for (int r = 0; r + k <= t.rows(); ++r)
    for (int c = 0; c + k <= t.cols(); ++c) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) buf[static_cast<std::size_t>(a) * k + b] = t(r + a, c + b);
      if (!T.contains(buf.data())) return false;
    }
  return true;
}

SearchOutcome preimage_search(const Picture& p, const TilingSystem& S, long long budget_nodes) {
  S.validate();
  if (!same_alphabet(p.alphabet(), S.terminal)) throw DomainError("preimage_search: picture is not over the terminal alphabet");
  std::vector<std::vector<Sym>> fiber(S.terminal->size());
  for (std::size_t g = 0; g < S.local->size(); ++g) fiber[S.projection.image[g]].push_back(static_cast<Sym>(g));
  std::vector<std::vector<Sym>> cand;
  for (Sym s : p.cells()) cand.push_back(fiber[s]);
  SearchOutcome out;
  for (auto& c : cand)
    if (c.empty()) return out;  // an empty fiber settles it
  Board b(*S.tiles, p.rows(), p.cols());
  Budget budget{budget_nodes, 0};
  auto visit = [&](Board& bd) {
    out.witness = bd.picture(S.local);
    return false;
  };
  try {
    dfs(b, 0, cand, budget, visit);
  } catch (const OutOfBudget&) {
    out.status = SearchOutcome::exhausted;
    out.nodes = budget.used;
    return out;
  }
  out.nodes = budget.used;
  out.status = out.witness ? SearchOutcome::found : SearchOutcome::absent;
  return out;
}

MemberResult ts_member(const Picture& p, const TilingSystem& S, long long budget) {
  auto o = preimage_search(p, S, budget);
  MemberResult r;
  r.nodes = o.nodes;
  r.witness = o.witness;
  r.verdict = o.status == SearchOutcome::found ? Verdict::yes
              : o.status == SearchOutcome::absent ? Verdict::no
                                                  : Verdict::unknown;
  return r;
}

std::vector<Picture> enumerate_local(const WindowConstraint& T, int rows, int cols, Budget& budget,
                                     const std::vector<std::vector<Sym>>* candidates) {
  Board b(T, rows, cols);
  auto cand = candidates ? *candidates : all_symbols(T.alphabet(), static_cast<std::size_t>(rows) * cols);
  std::vector<Picture> out;
  auto visit = [&](Board& bd) {
    out.push_back(bd.picture(T.alphabet()));
    return true;
  };
  try {
    dfs(b, 0, cand, budget, visit);
  } catch (const OutOfBudget&) {
    throw BudgetExhausted("enumeration budget of " + std::to_string(budget.limit) + " nodes exhausted at size (" +
                              std::to_string(rows) + "," + std::to_string(cols) + ")",
                          budget.used);
  }
  return out;
}

std::set<Picture> enumerate_language(const TilingSystem& S, int max_rows, int max_cols, long long budget_nodes) {
  S.validate();
  if (max_rows < 1 || max_cols < 1) throw DomainError("enumeration bounds must be at least 1");
  Budget budget{budget_nodes, 0};
  std::set<Picture> out;
  for (int r = 1; r <= max_rows; ++r)
    for (int c = 1; c <= max_cols; ++c)
      for (auto& q : enumerate_local(*S.tiles, r, c, budget)) out.insert(project(q, S.projection));
  return out;
}

std::set<Picture> enumerate_language(const ConstraintPtr& T, int max_rows, int max_cols, long long budget) {
  return enumerate_language(as_system(T), max_rows, max_cols, budget);
}

std::uint64_t count_local(const WindowConstraint& T, int rows, int cols, long long budget_nodes) {
  Board b(T, rows, cols);
  const int k = T.k();
  const std::size_t n = static_cast<std::size_t>(cols);
  auto cand = all_symbols(T.alphabet(), static_cast<std::size_t>(rows) * cols);
  Budget budget{budget_nodes, 0};
  std::vector<std::unordered_map<std::vector<Sym>, std::uint64_t, VecHash>> memo(static_cast<std::size_t>(rows));

  // rows_from(i): completions of picture rows i.. (0-based) given the board above
  std::function<std::uint64_t(int)> rows_from = [&](int i) -> std::uint64_t {
    if (i == rows) return 1;
    std::vector<Sym> key;
    for (int br = std::max(0, i + 2 - k); br <= i; ++br) b.append_row(br, key);
    auto& m = memo[static_cast<std::size_t>(i)];
    if (auto it = m.find(key); it != m.end()) return it->second;
    std::uint64_t total = 0;
    // fill row i cell by cell
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
      if (j == n) {
        total += rows_from(i + 1);
        return;
      }
      std::size_t c = static_cast<std::size_t>(i) * n + j;
      for (Sym s : cand[c]) {
        if (!budget.spend()) throw OutOfBudget{};
        if (b.place(c, s)) fill(j + 1);
        b.clear(c);
      }
    };
    fill(0);
    m.emplace(std::move(key), total);
    return total;
  };
  try {
    return rows_from(0);
  } catch (const OutOfBudget&) {
    throw BudgetExhausted("counting budget exhausted at size (" + std::to_string(rows) + "," + std::to_string(cols) + ")",
                          budget.used);
  }
}

LanguageReport compare_sets(const std::set<Picture>& a, const std::set<Picture>& b) {
  LanguageReport r;
  r.size_a = a.size();
  r.size_b = b.size();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r.only_in_a, r.only_in_a.end()));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(r.only_in_b, r.only_in_b.end()));
  return r;
}

LanguageReport compare_languages(const TilingSystem& A, const TilingSystem& B, int max_rows, int max_cols,
                                 long long budget) {
  if (!same_alphabet(A.terminal, B.terminal)) throw DomainError("compare_languages: terminal alphabets differ");
  return compare_sets(enumerate_language(A, max_rows, max_cols, budget), enumerate_language(B, max_rows, max_cols, budget));
}

}  // namespace pl
