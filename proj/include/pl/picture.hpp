#pragma once
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pl {

using Sym = std::int32_t;
inline constexpr Sym kBorder = -1;   // the reserved "#"
inline constexpr Sym kUnknown = -2;  // unassigned cell during searches

inline constexpr std::string_view kBorderToken = "#";

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  static AlphabetPtr make(std::vector<std::string> tokens, std::string name = "");

  std::size_t size() const { return tokens_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  // kBorder renders as "#".
  const std::string& token(Sym s) const;
  Sym id(std::string_view tok) const;  // throws DomainError
  std::optional<Sym> find(std::string_view tok) const;
  bool contains(std::string_view tok) const { return find(tok).has_value(); }

  bool same_symbols(const Alphabet& o) const { return tokens_ == o.tokens_; }

 private:
  Alphabet() = default;
  std::string name_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Sym> index_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void check_token(std::string_view tok);

class Picture {
 public:
  Picture() = default;
  Picture(AlphabetPtr alpha, int rows, int cols, std::vector<Sym> cells);
  static Picture filled(AlphabetPtr alpha, int rows, int cols, Sym s);
  static Picture from_rows(AlphabetPtr alpha, const std::vector<std::vector<std::string>>& rows);
  // whitespace separated tokens, one string per row
  static Picture from_text_rows(AlphabetPtr alpha, const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::pair<int, int> size() const { return {rows_, cols_}; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Sym>& cells() const { return cells_; }

  // 1-based, as in the literature
  Sym at(int i, int j) const;
  const std::string& token_at(int i, int j) const { return alpha_->token(at(i, j)); }
  // 0-based, unchecked
  Sym operator()(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool has_border() const;
  bool empty() const { return rows_ == 0; }

  friend bool operator==(const Picture& a, const Picture& b);
  // canonical order: rows, cols, then row-major cells (alphabet order, # first)
  friend std::strong_ordering operator<=>(const Picture& a, const Picture& b);

  std::string debug_string() const;

 private:
  AlphabetPtr alpha_;
  int rows_ = 0, cols_ = 0;
  std::vector<Sym> cells_;
};

struct PictureHash {
  std::size_t operator()(const Picture& p) const;
};

struct Frame {
  std::vector<Sym> north, east, south, west;
  friend auto operator<=>(const Frame&, const Frame&) = default;
  friend bool operator==(const Frame&, const Frame&) = default;
  int k() const { return static_cast<int>(north.size()); }
};

// Letter-to-letter map between alphabets. # always maps to #.
struct SymbolMap {
  AlphabetPtr from, to;
  std::vector<Sym> image;  // indexed by source id, kUnknown when unmapped
  static SymbolMap identity(const AlphabetPtr& a);
  static SymbolMap from_pairs(const AlphabetPtr& from, const AlphabetPtr& to,
                              const std::vector<std::pair<std::string, std::string>>& pairs);
  Sym operator()(Sym s) const;
  bool total() const;
  SymbolMap then(const SymbolMap& g) const;  // g after this
};

Picture concat_h(const Picture& p, const Picture& q);
Picture concat_v(const Picture& p, const Picture& q);
Picture transpose(const Picture& p);
Picture power_h(const Picture& p, int times);
Picture power_v(const Picture& p, int times);
Picture bordered(const Picture& p);
Picture thick_bordered(const Picture& p, int k);
// size of thick_bordered(p,k) without building it
std::pair<int, int> thick_bordered_size(int rows, int cols, int k);
Picture subpicture(const Picture& p, int i, int j, int i2, int j2);
std::set<Picture> k_tiles(const Picture& p, int k);

struct Tessellation {
  int k = 0, block_rows = 0, block_cols = 0;
  std::vector<Picture> blocks;  // row-major
  const Picture& at(int i, int j) const { return blocks[static_cast<std::size_t>(i - 1) * block_cols + (j - 1)]; }
  std::set<Picture> distinct() const { return {blocks.begin(), blocks.end()}; }
};
Tessellation tessellate(const Picture& p, int k);
Picture reassemble(const Tessellation& t);
// Glue a grid of equal-size blocks (row-major)
Picture assemble(const std::vector<Picture>& blocks, int block_rows, int block_cols);

Frame frame_of(const Picture& p);

AlphabetPtr product_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
std::string pair_token(std::string_view a, std::string_view b);
Picture merge(const Picture& p, const Picture& q);
Picture merge(const Picture& p, const Picture& q, const AlphabetPtr& product);
Picture project(const Picture& p, const SymbolMap& m);
// first (which = 0) or second component of a product alphabet built by product_alphabet(a, b)
SymbolMap component_map(const AlphabetPtr& product, const AlphabetPtr& a, const AlphabetPtr& b, int which);

}  // namespace pl
