#pragma once
#include <set>
#include <utility>

#include "pl/picture.hpp"
#include "pl/search.hpp"
#include "pl/tileset.hpp"

namespace pl {

// Union of the k-tiles of every thick-bordered sample.
TileSet tileset_from_pictures(const std::set<Picture>& samples, int k);

// A k-TS turned into a 2-TS recognizing the same language. Each local symbol
// remembers one k-window of the thick-bordered pre-image together with the
// cell's position inside it; adjacent cells must carry overlapping windows.
TilingSystem slt_to_local(const TilingSystem& S);

struct Ratio {
  long long num = 0, den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};
Ratio alphabetic_ratio(const TilingSystem& S);

// Constant projection of every local symbol onto one terminal symbol.
SymbolMap constant_map(const AlphabetPtr& from, const AlphabetPtr& to, const std::string& target);

}  // namespace pl
