#pragma once
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pl/picture.hpp"
#include "pl/tileset.hpp"

namespace pl {

using Word = std::vector<Sym>;

struct WordCode {
  int k = 0;
  AlphabetPtr alphabet;
  std::vector<Word> words;  // sorted, distinct

  // one character per symbol, e.g. {"110", "100"} over {0,1}
  static WordCode from_strings(const AlphabetPtr& a, const std::vector<std::string>& ws);
  std::vector<std::string> strings() const;
  std::size_t size() const { return words.size(); }
};

AlphabetPtr binary_alphabet();

bool is_comma_free_word_code(const WordCode& Y);

// (2^k - 2) / k, the size of a maximal binary comma-free code of prime length k
std::uint64_t eastman_count(int k);

struct CodeSearch {
  enum Status { found, infeasible, exhausted } status = infeasible;
  std::optional<WordCode> code;
  std::string reason;
  long long nodes = 0;
};
// Binary comma-free code of exactly `target` words, one word per primitive
// conjugacy class at most.
CodeSearch find_comma_free_word_code(int k, int target, long long budget = 10'000'000);

// "t"/"f" strings
bool is_obligation_word(const std::string& w);
std::string make_obligation_word(int k, int q);
std::string make_obligation_word(int k);  // q = floor(sqrt(k))

struct CodeFamilySpec {
  int k = 0;
  WordCode y_hor, y_vert;
  std::string obligation;
  void validate() const;
};

struct PictureCode {
  int k = 0;
  AlphabetPtr alphabet;
  std::vector<Picture> pictures;  // generation order
  // coding: symbol id of `source` -> index into pictures
  AlphabetPtr source;
  std::vector<int> coding;
  std::string diagnostic;  // why the code came out empty, if it did

  // checks shape, alphabet and distinctness
  static PictureCode make(int k, AlphabetPtr alpha, std::vector<Picture> pictures);
  std::size_t size() const { return pictures.size(); }
  bool has_coding() const { return source != nullptr; }
  std::optional<int> index_of(const Picture& p) const;
  // Attach source symbol i -> pictures[i]; needs |source| = |pictures|.
  PictureCode with_coding(const AlphabetPtr& src) const;
  PictureCode with_coding(const AlphabetPtr& src, std::vector<int> coding) const;
  // picture coding source symbol s
  const Picture& code_of(Sym s) const { return pictures[static_cast<std::size_t>(coding[static_cast<std::size_t>(s)])]; }

 private:
  std::shared_ptr<const std::unordered_map<Picture, int, PictureHash>> lookup_;
};

PictureCode generate_picture_code(const CodeFamilySpec& spec);
// closed-form size of the family code, without generating it
std::uint64_t family_code_size(const CodeFamilySpec& spec);

// Every non-aligned k x k window of every 2x2 assembly, checked per offset by
// splitting the window into its four block pieces. Exact for any |X|.
bool is_comma_free_picture_code(const PictureCode& X);
// The same property by listing all |X|^4 assemblies. Throws BudgetExhausted
// when |X|^4 exceeds the budget.
bool is_comma_free_picture_code_brute(const PictureCode& X, std::uint64_t max_assemblies = 100'000'000);

struct LowerBound {
  int k = 0, q = 0;
  double log2_value = 0;          // k^2 - k - 2 sqrt(k) lg(k+1)
  double log2_coded_rows = 0;     // 2q lg((2^{k-1} - 1) / k)
  double log2_free_rows = 0;      // (k-1)(k-2q)
  double value() const;
};
LowerBound numerosity_lower_bound(int k);

bool is_prime(int n);
// smallest prime in [4 lg m, 8 lg m]
int choose_k(int m);

Picture encode_picture(const Picture& p, const PictureCode& X);
// Inverse of encode_picture; nullopt when p is not tessellated by code pictures.
std::optional<Picture> decode_picture(const Picture& p, const PictureCode& X);

// 2k x 2k windows of thick-bordered block pictures, judged by reasoning about
// where the window can sit relative to the block grid. A candidate placement
// fixes which window rows and columns are border and which block row/column
// and offset each of the others shows. Each block slot is then filtered by the
// visible cells and the slots are solved together against tile_ok.
class BlockWindows : public WindowConstraint {
 public:
  BlockWindows(int block, AlphabetPtr window_alpha, std::vector<std::vector<Sym>> blocks, std::string name);

  int k() const override { return 2 * block_; }
  const AlphabetPtr& alphabet() const override { return alpha_; }
  bool contains(const Sym* w) const override;
  bool consistent(const Sym* w) const override;
  std::string describe() const override { return name_; }

  int block() const { return block_; }
  const std::vector<std::vector<Sym>>& blocks() const { return blocks_; }

 protected:
  // symbol the window shows for a block cell (may be kBorder)
  virtual Sym shown(Sym block_cell) const { return block_cell; }
  // 2x2 of the block grid, -1 for border
  virtual bool tile_ok(int /*nw*/, int /*ne*/, int /*sw*/, int /*se*/) const { return true; }
  struct Placement {
    const std::vector<int>& slots;  // fragment grid, row-major, -1 for border
    int frag_rows, frag_cols;
    // per window row (column): -1 border before, -2 border after, else
    // block * block() + offset, blocks counted from the first visible one
    const std::vector<int>& row_entry;
    const std::vector<int>& col_entry;
    int first_row, first_col;  // fragment index of the first visible block row (column)
  };
  // final say on a complete placement
  virtual bool placement_ok(const Placement& /*p*/) const { return true; }
  // true when # in a window can only come from the border
  virtual bool border_is_plain() const { return true; }
  // false lets a placement pass as soon as every slot has a candidate
  virtual bool has_slot_rules() const { return false; }

 private:
  struct Profile {
    std::vector<int> entry;  // -1 border before, -2 border after, else block*block_ + offset
    bool before = false, after = false;
    int nblocks = 0;
  };
  struct Scratch;
  bool judge(const Sym* w, bool partial) const;
  bool try_placement(const Sym* w, bool partial, const Profile& vp, const Profile& hp, Scratch& sc) const;
  bool solve(std::size_t v, Scratch& sc) const;
  void build_index() const;

  int block_;
  AlphabetPtr alpha_;
  std::vector<std::vector<Sym>> blocks_;
  std::string name_;
  std::vector<Profile> profiles_;
  std::unordered_map<std::uint64_t, std::vector<int>> by_mask_;  // all-# rows/columns bitmask -> profiles
  // blocks as bitsets: which blocks show symbol s at offset o, and which show
  // anything but # there. Built on first use since shown() is virtual.
  mutable std::once_flag index_once_;
  mutable std::size_t words_ = 0;
  mutable std::vector<std::uint64_t> shows_;    // [(o * (|alpha|+1) + s+1) * words_]
  mutable std::vector<std::uint64_t> visible_;  // [o * words_]
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, bool> memo_;
};

// B_2k of the bordered X^{++}, as an oracle.
ConstraintPtr closure_tileset(const PictureCode& X);

// Encodings of L(T2) as a 2k-SLT language: the closure restricted to block
// grids whose 2x2 tiles, border tiles included, are in T2.
ConstraintPtr encoded_local_tileset(const TileSet& T2, const PictureCode& X);

}  // namespace pl
