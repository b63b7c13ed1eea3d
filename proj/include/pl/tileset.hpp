#pragma once
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pl/picture.hpp"

namespace pl {

// Anything that can judge the k x k windows of a thick-bordered picture.
// Explicit tile sets implement it directly; some constructions (code closures,
// encoded local languages) are far too large to list and answer by reasoning.
class WindowConstraint {
 public:
  virtual ~WindowConstraint() = default;
  virtual int k() const = 0;
  virtual const AlphabetPtr& alphabet() const = 0;
  // w holds k*k symbols row-major, none of them kUnknown.
  virtual bool contains(const Sym* w) const = 0;
  // w may hold kUnknown in cells that will receive alphabet symbols (never #).
  // False means no completion is contained. Over-approximation is allowed.
  virtual bool consistent(const Sym* /*w*/) const { return true; }
  virtual std::string describe() const = 0;
};

using ConstraintPtr = std::shared_ptr<const WindowConstraint>;

class TileSet : public WindowConstraint {
 public:
  TileSet(int k, AlphabetPtr alpha);
  TileSet(int k, AlphabetPtr alpha, const std::set<Picture>& tiles);

  int k() const override { return k_; }
  const AlphabetPtr& alphabet() const override { return alpha_; }
  bool contains(const Sym* w) const override;
  bool consistent(const Sym* w) const override;
  std::string describe() const override;

  bool contains(const Picture& tile) const;
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  // canonical order
  std::vector<Picture> tiles() const;
  // raw row-major cells, canonical order, k*k per tile
  std::vector<std::vector<Sym>> raw_tiles() const;

  void insert(const std::vector<Sym>& cells);
  void insert(const Picture& tile);
  // must be called after the last insert and before queries
  void seal();

  friend bool operator==(const TileSet& a, const TileSet& b);

 private:
  struct Group {
    std::vector<int> free_pos;  // non-# positions, row-major
    std::vector<Sym> flat;      // sorted sequences of free cells
    std::size_t width = 0;
    std::size_t n() const { return width ? flat.size() / width : 0; }
  };
  std::string mask_of(const Sym* w) const;

  int k_;
  AlphabetPtr alpha_;
  std::map<std::string, Group> groups_;
  std::map<std::string, std::set<std::vector<Sym>>> pending_;
  std::size_t count_ = 0;
  bool sealed_ = true;
};

using TileSetPtr = std::shared_ptr<const TileSet>;

struct TilingSystem {
  AlphabetPtr terminal;
  AlphabetPtr local;
  ConstraintPtr tiles;
  SymbolMap projection;  // local -> terminal

  int k() const { return tiles->k(); }
  // null when the tile set is only known implicitly
  const TileSet* explicit_tiles() const { return dynamic_cast<const TileSet*>(tiles.get()); }
  void validate() const;
};

// The local language of T seen as a tiling system with identity projection.
TilingSystem as_system(ConstraintPtr T);

}  // namespace pl
