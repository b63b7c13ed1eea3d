#pragma once
#include <string>

#include "pl/picture.hpp"
#include "pl/tileset.hpp"

namespace pl {

struct RenderOptions {
  int block = 0;       // dashed separators every `block` cells; 0 for none
  bool ascii = false;  // +-| instead of box drawing
};

// Fixed-width grid, one text row per picture row, cells padded to the widest token.
std::string render(const Picture& p, const RenderOptions& opt = {});
std::string render(const TileSet& T, const RenderOptions& opt = {});

// Reads back the output of render(p) over a known alphabet. "#" cells are kept.
Picture parse_rendered(const std::string& text, const AlphabetPtr& alpha);

}  // namespace pl
